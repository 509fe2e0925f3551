#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stiefelmw/bigraded.hpp"

namespace stiefelmw {

/// Vanishing rules applied when a formal sum is read off at a single
/// bidegree. Coconnectedness (everything vanishes strictly above the
/// diagonal) is the standing hypothesis and cannot be switched off; the
/// two weight-based rules can, for auditing.
struct VanishingFlags {
    /// M and etaM entries vanish off the diagonal when the weight is negative.
    bool negative_weight_motivic = true;
    /// MW entries vanish below the diagonal when the weight is negative.
    bool mw_subdiagonal_negative_weight = true;

    friend constexpr bool operator==(const VanishingFlags&, const VanishingFlags&) = default;
};

/// A symbolic abelian group: zero, the integers, a Milnor-Witt or Milnor
/// K-group, the index-2 subgroup 2K^M_j, an unidentified bigraded value
/// H_MW^{a,b}(K) / H_M^{a,b}(K), or a finite direct sum of those.
///
/// Canonical form: KM(0) collapses to Z; KM(j) and 2KM(j) with j < 0
/// collapse to zero; direct sums are flattened, sorted, free of zeros, and
/// a one-term sum is the term itself.
class GroupExpr {
public:
    enum class Tag : std::uint8_t { Zero, Z, KMW, KM, TwoKM, Opaque, Sum };

    GroupExpr() = default;  // zero

    static GroupExpr zero();
    static GroupExpr integers();
    static GroupExpr kmw(int j);
    static GroupExpr km(int j);
    static GroupExpr two_km(int j);
    static GroupExpr opaque(RingKind kind, int a, int b);  // etaM folds into M
    static GroupExpr direct_sum(std::vector<GroupExpr> terms);

    Tag tag() const { return tag_; }
    bool is_zero() const { return tag_ == Tag::Zero; }
    int index() const { return index_; }             // KMW / KM / TwoKM
    RingKind opaque_kind() const { return okind_; }  // Opaque
    int opaque_p() const { return p_; }
    int opaque_q() const { return q_; }
    const std::vector<GroupExpr>& summands() const { return terms_; }  // Sum

    friend bool operator==(const GroupExpr& a, const GroupExpr& b);
    friend bool operator!=(const GroupExpr& a, const GroupExpr& b) { return !(a == b); }

    std::string text() const;   // "K^MW_{-1}(K)", "2K^M_0(K)", "Z", "0", ...
    std::string latex() const;  // "\mathrm{K}^{\mathrm{MW}}_{-1}(K)", ...

private:
    Tag tag_ = Tag::Zero;
    int index_ = 0;
    RingKind okind_ = RingKind::MW;
    int p_ = 0;
    int q_ = 0;
    std::vector<GroupExpr> terms_;
};

/// Value of one coefficient atom at bidegree (p, q): with (a, b) the
/// degree relative to the atom's shift, everything vanishes for a > b; on
/// the diagonal a = b the three kinds give K^MW_b, K^M_b and 2K^M_b; below
/// the diagonal the surviving entries stay symbolic (etaM agrees with M
/// there).
GroupExpr evaluate_atom_at(const CoeffAtom& atom, int p, int q, const VanishingFlags& flags = {});

/// Direct sum of the atom-wise values, respecting multiplicities.
GroupExpr evaluate_at(const FormalSum& s, int p, int q, const VanishingFlags& flags = {});

}  // namespace stiefelmw
