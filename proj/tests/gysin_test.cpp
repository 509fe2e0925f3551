#include <doctest.h>

#include <stdexcept>

#include "stiefelmw/gysin.hpp"
#include "test_util.hpp"

using namespace stiefelmw;
using testutil::make_sum;

TEST_CASE("induction base cases") {
    for (int n = 2; n <= 16; ++n)
        CHECK(inductive_cohomology(StiefelIndex(n, 1)) ==
              make_sum({{RingKind::MW, 0, 0}, {RingKind::MW, 2 * n - 1, n}}));
}

TEST_CASE("even step introduces the kernel and cokernel summands") {
    CHECK(inductive_cohomology(StiefelIndex(7, 2)) == make_sum({{RingKind::MW, 0, 0},
                                                                {RingKind::EtaM, 11, 6},
                                                                {RingKind::M, 13, 7},
                                                                {RingKind::MW, 24, 13}}));
}

TEST_CASE("V_4(A^7) by induction") {
    CHECK(inductive_cohomology(StiefelIndex(7, 4)) == testutil::v4_a7_atoms());
}

TEST_CASE("induction agrees with the closed form") {
    for (int n = 2; n <= 12; ++n)
        for (int k = 1; k <= n - 1; ++k)
            CHECK(inductive_cohomology(StiefelIndex(n, k)) == closed_form(StiefelIndex(n, k)));
}

TEST_CASE("rank doubles with each frame") {
    for (int n = 2; n <= 12; ++n) {
        for (int k = 1; k <= n - 1; ++k) {
            const FormalSum h = inductive_cohomology(StiefelIndex(n, k));
            CHECK(h.total_multiplicity() == (std::int64_t{1} << k));
        }
    }
}

TEST_CASE("euler class") {
    SUBCASE("examples") {
        const EulerClass e73 = euler_class(StiefelIndex(7, 3));
        CHECK(!e73.zero);
        CHECK(e73.beta_index == 4);
        CHECK(e73.degree == Bidegree{8, 4});
        CHECK(to_string(e73) == "eta*beta_{4}");

        CHECK(euler_class(StiefelIndex(7, 4)).zero);
        CHECK(euler_class(StiefelIndex(6, 1)).zero);
        CHECK(to_string(euler_class(StiefelIndex(6, 1))) == "0");
    }
    SUBCASE("k = 1 vanishes exactly for even n") {
        for (int n = 2; n <= 16; ++n) {
            const EulerClass e = euler_class(StiefelIndex(n, 1));
            CHECK(e.zero == (n % 2 == 0));
            if (!e.zero) {
                CHECK(e.beta_index == n - 1);
                CHECK(e.degree == Bidegree{2 * (n - 1), n - 1});
            }
        }
    }
    SUBCASE("k >= 2 vanishes exactly for odd n-k") {
        for (int n = 3; n <= 16; ++n) {
            for (int k = 2; k <= n - 1; ++k) {
                const EulerClass e = euler_class(StiefelIndex(n, k));
                CHECK(e.zero == ((n - k) % 2 != 0));
                if (!e.zero) {
                    CHECK(e.beta_index == n - k);
                    CHECK(e.degree == Bidegree{2 * (n - k), n - k});
                }
            }
        }
    }
    SUBCASE("domain") { CHECK_THROWS_AS(euler_class(StiefelIndex(4, 4)), std::domain_error); }
}
