#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "stiefelmw/crosscheck.hpp"
#include "test_util.hpp"

using namespace stiefelmw;
using testutil::make_sum;

namespace {

std::vector<ConventionChoice> both_choices() {
    return {{"derived", derived_conventions()}, {"paper", paper_conventions()}};
}

}  // namespace

TEST_CASE("sweep verdicts") {
    const CrosscheckReport rep = run_crosscheck(8, both_choices(), 1);
    CHECK(rep.pair_count() == 7 + 6 + 5 + 4 + 3 + 2 + 1);
    CHECK(rep.a_eq_b_all);
    REQUIRE(rep.motive_summary.size() == 2);
    CHECK(rep.motive_summary[0].convention == "derived");
    CHECK(rep.motive_summary[0].all_equal);
    CHECK(rep.motive_summary[0].matches == rep.pair_count());
    CHECK(rep.motive_summary[1].convention == "paper");
    CHECK(!rep.motive_summary[1].all_equal);
    CHECK(rep.motive_summary[1].first_mismatch_n == 3);
    CHECK(rep.motive_summary[1].first_mismatch_k == 2);
}

TEST_CASE("paper convention diff at V_2(A^5)") {
    const CrosscheckReport rep = run_crosscheck(5, {{"paper", paper_conventions()}}, 1);
    const auto row = std::find_if(rep.results.begin(), rep.results.end(),
                                  [](const PairVerdict& v) { return v.n == 5 && v.k == 2; });
    REQUIRE(row != rep.results.end());
    CHECK(row->a_eq_b);
    REQUIRE(row->motive.size() == 1);
    CHECK(!row->motive[0].equal);
    CHECK(row->motive[0].only_in_a ==
          make_sum({{RingKind::EtaM, 7, 4}, {RingKind::M, 9, 5}}));
    CHECK(row->motive[0].only_in_c ==
          make_sum({{RingKind::EtaM, 8, 4}, {RingKind::M, 10, 5}}));
}

TEST_CASE("results are identical for any worker count") {
    const CrosscheckReport serial = run_crosscheck(10, both_choices(), 1);
    const CrosscheckReport parallel = run_crosscheck(10, both_choices(), 4);
    REQUIRE(serial.results.size() == parallel.results.size());
    for (std::size_t i = 0; i < serial.results.size(); ++i) {
        CHECK(serial.results[i].n == parallel.results[i].n);
        CHECK(serial.results[i].k == parallel.results[i].k);
        CHECK(serial.results[i].a_eq_b == parallel.results[i].a_eq_b);
        for (std::size_t c = 0; c < serial.results[i].motive.size(); ++c)
            CHECK(serial.results[i].motive[c].equal == parallel.results[i].motive[c].equal);
    }
}

TEST_CASE("n_max domain guard") {
    CHECK_THROWS_AS(run_crosscheck(2, both_choices(), 1), std::domain_error);
}
