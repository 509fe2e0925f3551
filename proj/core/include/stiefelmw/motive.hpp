#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stiefelmw/bigraded.hpp"
#include "stiefelmw/stiefel_basis.hpp"

namespace stiefelmw {

/// Building blocks of a formal MW-motive: a Tate atom T(a)[b] or an
/// eta-cone atom C(a)[b], with twist a and simplicial shift b. The unit
/// motive is T(0)[0].
enum class MotiveKind : std::uint8_t { Tate = 0, Cone = 1 };

struct MotiveAtom {
    MotiveKind kind = MotiveKind::Tate;
    int twist = 0;
    int shift = 0;

    friend constexpr bool operator==(const MotiveAtom&, const MotiveAtom&) = default;
};

/// Canonical finite multiset of motive atoms, sorted by (shift, twist, kind).
class MotiveSum {
public:
    struct Term {
        MotiveAtom atom;
        std::int64_t mult = 1;

        friend constexpr bool operator==(const Term&, const Term&) = default;
    };

    MotiveSum() = default;
    explicit MotiveSum(std::vector<Term> terms);

    static MotiveSum unit();  // {T(0)[0]}
    static MotiveSum single(MotiveKind kind, int twist, int shift);

    const std::vector<Term>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::int64_t total_multiplicity() const;

    /// Number of cohomology atoms the sum expands to (Tate atoms count 1,
    /// cone atoms count 2).
    std::int64_t cohomology_rank() const;

    friend bool operator==(const MotiveSum&, const MotiveSum&) = default;

private:
    void canonicalize();

    std::vector<Term> terms_;
};

/// Placement conventions for the eta-cone summands that are not pinned
/// down by the decomposition formulas themselves. Both are embedded in
/// every report produced from the motive path.
struct Conventions {
    /// The cone summand of an odd-index hyper-sphere motive sits at
    /// C(2k)[4k + cone_shift_delta]. The "paper" convention uses 0; the
    /// value consistent with the rank-2 tables (and with the other two
    /// computation paths) is -1, which is the default.
    int cone_shift_delta = -1;
    /// C(a)[b] (x) C(c)[d] = C(a+c)[b+d] + C(a+c+s)[b+d+t].
    int cone_square_twist = 1;  // s
    int cone_square_shift = 2;  // t

    friend constexpr bool operator==(const Conventions&, const Conventions&) = default;
};

Conventions derived_conventions();  // delta = -1 (the default)
Conventions paper_conventions();    // delta = 0

/// Conventional short names: "derived" for delta = -1, "paper" for
/// delta = 0, "custom" otherwise.
std::string convention_name(const Conventions& conv);

/// Motive of the punctured affine space A^m \ 0, m >= 1:
/// {T(0)[0], T(m)[2m-1]}.
MotiveSum sphere_motive(int m);

/// Hyper-sphere motive HS_m, m >= 2. Even m: the sphere motive. Odd
/// m = 2k+1: {T(0)[0], C(2k)[4k+delta], T(4k+1)[8k]}.
MotiveSum hs_motive(int m, const Conventions& conv = {});

/// Bilinear tensor expansion: T(x)T = T, T(x)C = C, and C(x)C is a pair of
/// cones per the cone-square convention.
MotiveSum tensor(const MotiveSum& x, const MotiveSum& y, const Conventions& conv = {});

/// Path C: the formal motive of V_k(A^n), assembled as a tensor chain of
/// hyper-sphere motives (with a trailing sphere factor when n-k is even).
MotiveSum stiefel_motive(StiefelIndex idx, const Conventions& conv = {});

/// Cohomology of a formal motive: T(a)[b] contributes MW@(b,a); a cone
/// C(a)[b] splits as M@(b+2,a+1) + etaM@(b,a).
FormalSum motive_cohomology(const MotiveSum& x);

std::string to_string(const MotiveAtom& a);     // "T(4)[7]", "C(4)[8]"
std::string to_string(const MotiveSum::Term& t);
std::string to_string(const MotiveSum& s);      // "{T(0)[0], C(4)[7], T(9)[16]}"

}  // namespace stiefelmw
