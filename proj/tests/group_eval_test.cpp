#include <doctest.h>

#include <random>

#include "stiefelmw/group_eval.hpp"
#include "stiefelmw/stiefel_basis.hpp"
#include "test_util.hpp"

using namespace stiefelmw;
using testutil::make_sum;
using testutil::random_formal_sum;

TEST_CASE("group expression canonical form") {
    CHECK(GroupExpr::km(0) == GroupExpr::integers());
    CHECK(GroupExpr::km(-1) == GroupExpr::zero());
    CHECK(GroupExpr::two_km(-2) == GroupExpr::zero());
    CHECK(GroupExpr::two_km(0).tag() == GroupExpr::Tag::TwoKM);
    CHECK(GroupExpr::kmw(-3).tag() == GroupExpr::Tag::KMW);  // negative MW K-groups survive

    const GroupExpr sum = GroupExpr::direct_sum(
        {GroupExpr::zero(), GroupExpr::km(2),
         GroupExpr::direct_sum({GroupExpr::integers(), GroupExpr::kmw(-1)})});
    REQUIRE(sum.tag() == GroupExpr::Tag::Sum);
    REQUIRE(sum.summands().size() == 3);
    CHECK(sum.summands()[0] == GroupExpr::integers());
    CHECK(sum.summands()[1] == GroupExpr::kmw(-1));
    CHECK(sum.summands()[2] == GroupExpr::km(2));

    CHECK(GroupExpr::direct_sum({}) == GroupExpr::zero());
    CHECK(GroupExpr::direct_sum({GroupExpr::km(1)}) == GroupExpr::km(1));
}

TEST_CASE("atom evaluation") {
    const VanishingFlags flags;
    CHECK(evaluate_atom_at({RingKind::MW, {9, 5}, {}}, 8, 4, flags) == GroupExpr::kmw(-1));
    CHECK(evaluate_atom_at({RingKind::EtaM, {7, 4}, {}}, 7, 4, flags) == GroupExpr::two_km(0));
    CHECK(evaluate_atom_at({RingKind::MW, {0, 0}, {}}, 5, 3, flags) == GroupExpr::zero());
    CHECK(evaluate_atom_at({RingKind::M, {0, 0}, {}}, 3, 3, flags) == GroupExpr::km(3));
    CHECK(evaluate_atom_at({RingKind::MW, {0, 0}, {}}, 4, 4, flags) == GroupExpr::kmw(4));
}

TEST_CASE("off-diagonal entries") {
    const VanishingFlags flags;
    // etaM agrees with M away from the diagonal
    const GroupExpr m = evaluate_atom_at({RingKind::M, {0, 0}, {}}, 2, 5, flags);
    const GroupExpr em = evaluate_atom_at({RingKind::EtaM, {0, 0}, {}}, 2, 5, flags);
    CHECK(m == em);
    CHECK(m.text() == "H_M^{2,5}(K)");

    const GroupExpr mw = evaluate_atom_at({RingKind::MW, {0, 0}, {}}, 2, 5, flags);
    CHECK(mw.text() == "H_MW^{2,5}(K)");
    CHECK(mw != m);
}

TEST_CASE("vanishing flags") {
    VanishingFlags off;
    off.negative_weight_motivic = false;
    off.mw_subdiagonal_negative_weight = false;

    const CoeffAtom mw_atom{RingKind::MW, {16, 9}, {}};
    CHECK(evaluate_atom_at(mw_atom, 9, 5) == GroupExpr::zero());
    CHECK(evaluate_atom_at(mw_atom, 9, 5, off) == GroupExpr::opaque(RingKind::MW, -7, -4));

    const CoeffAtom m_atom{RingKind::M, {9, 5}, {}};
    CHECK(evaluate_atom_at(m_atom, 4, 2) == GroupExpr::zero());
    CHECK(evaluate_atom_at(m_atom, 4, 2, off) == GroupExpr::opaque(RingKind::M, -5, -3));

    // coconnectedness is not a flag
    CHECK(evaluate_atom_at({RingKind::M, {0, 0}, {}}, 4, 1, off) == GroupExpr::zero());
}

TEST_CASE("sum evaluation") {
    CHECK(evaluate_at(closed_form(StiefelIndex(7, 3)), 8, 4) == GroupExpr::kmw(-1));
    CHECK(evaluate_at(closed_form(StiefelIndex(5, 2)), 9, 5) == GroupExpr::integers());
    CHECK(evaluate_at(closed_form(StiefelIndex(5, 2)), 7, 4) == GroupExpr::two_km(0));
    CHECK(evaluate_at(closed_form(StiefelIndex(5, 2)), 0, 0) == GroupExpr::kmw(0));

    // everything above the total diagonal vanishes: p - q > sum of N_{n,k}
    const FormalSum s = closed_form(StiefelIndex(7, 3));  // sum of {4,5,6} = 15
    CHECK(evaluate_at(s, 16, 0) == GroupExpr::zero());
    CHECK(evaluate_at(s, 40, 20) == GroupExpr::zero());

    // multiplicities feed through
    const FormalSum doubled = make_sum({{RingKind::MW, 0, 0, 2}});
    const GroupExpr v = evaluate_at(doubled, 0, 0);
    REQUIRE(v.tag() == GroupExpr::Tag::Sum);
    CHECK(v.summands().size() == 2);
}

TEST_CASE("euler degree groups across the sweep") {
    for (int n = 3; n <= 12; ++n) {
        for (int k = 2; k <= n - 1; ++k) {
            const GroupExpr g = evaluate_at(closed_form(StiefelIndex(n, k)), 2 * (n - k), n - k);
            if ((n - k) % 2 == 0)
                CHECK(g == GroupExpr::kmw(-1));
            else
                CHECK(g == GroupExpr::zero());
        }
    }
}

TEST_CASE("evaluation is additive and shift equivariant") {
    std::mt19937 rng(41);
    std::uniform_int_distribution<int> coord(-8, 8);
    for (int i = 0; i < 300; ++i) {
        const FormalSum a = random_formal_sum(rng);
        const FormalSum b = random_formal_sum(rng);
        const int p = coord(rng);
        const int q = coord(rng);

        CHECK(evaluate_at(add_sums(a, b), p, q) ==
              GroupExpr::direct_sum({evaluate_at(a, p, q), evaluate_at(b, p, q)}));

        const Bidegree d{coord(rng), coord(rng)};
        CHECK(evaluate_at(shift_sum(a, d), p, q) == evaluate_at(a, p - d.p, q - d.q));
    }
}

TEST_CASE("text rendering") {
    CHECK(GroupExpr::zero().text() == "0");
    CHECK(GroupExpr::integers().text() == "Z");
    CHECK(GroupExpr::kmw(-1).text() == "K^MW_{-1}(K)");
    CHECK(GroupExpr::kmw(0).text() == "K^MW_0(K)");
    CHECK(GroupExpr::kmw(12).text() == "K^MW_{12}(K)");
    CHECK(GroupExpr::km(3).text() == "K^M_3(K)");
    CHECK(GroupExpr::two_km(3).text() == "2K^M_3(K)");
    CHECK(GroupExpr::two_km(0).text() == "2K^M_0(K)");
    CHECK(GroupExpr::opaque(RingKind::M, 2, 5).text() == "H_M^{2,5}(K)");
    CHECK(GroupExpr::direct_sum({GroupExpr::integers(), GroupExpr::km(2)}).text() ==
          "Z ⊕ K^M_2(K)");

    CHECK(GroupExpr::integers().latex() == "\\mathbb{Z}");
    CHECK(GroupExpr::kmw(-1).latex() == "\\mathrm{K}^{\\mathrm{MW}}_{-1}(K)");
    CHECK(GroupExpr::two_km(0).latex() == "2\\mathrm{K}^{\\mathrm{M}}_{0}(K)");
}
