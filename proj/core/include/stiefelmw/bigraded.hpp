#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace stiefelmw {

/// Bidegree (p, q): p is the cohomological degree, q the weight.
/// Comparison is lexicographic in (p, q), which is also the canonical
/// sort order of formal sums.
struct Bidegree {
    int p = 0;
    int q = 0;

    friend constexpr auto operator<=>(const Bidegree&, const Bidegree&) = default;

    constexpr Bidegree operator+(Bidegree o) const { return {p + o.p, q + o.q}; }
    constexpr Bidegree operator-(Bidegree o) const { return {p - o.p, q - o.q}; }
    constexpr Bidegree& operator+=(Bidegree o) {
        p += o.p;
        q += o.q;
        return *this;
    }
};

/// The braced display convention (p', {q}) stores p' = p - q next to the
/// weight; from_braced is its inverse.
constexpr Bidegree to_braced(Bidegree d) { return {d.p - d.q, d.q}; }
constexpr Bidegree from_braced(Bidegree b) { return {b.p + b.q, b.q}; }

std::string to_string(Bidegree d);         // "(16,9)"
std::string to_braced_string(Bidegree d);  // "(7,{9})"

/// Coefficient-ring kinds: the full theory, its eta-cokernel and its
/// eta-kernel. The order MW < M < etaM is part of the canonical form and
/// must not change.
enum class RingKind : std::uint8_t { MW = 0, M = 1, EtaM = 2 };

std::string_view ring_kind_name(RingKind k);  // "MW" | "M" | "etaM"
std::optional<RingKind> ring_kind_from_name(std::string_view name);

/// Kind transitions under the eta-cokernel and eta-kernel functors.
constexpr RingKind coker_eta_kind(RingKind k) { return k == RingKind::MW ? RingKind::M : k; }
constexpr RingKind ker_eta_kind(RingKind k) { return k == RingKind::MW ? RingKind::EtaM : k; }

/// One coefficient summand placed at a bidegree shift. The label is a
/// generator name for reporting only; it never participates in equality.
struct CoeffAtom {
    RingKind kind = RingKind::MW;
    Bidegree shift;
    std::string label;
};

/// Canonical finite multiset of coefficient atoms.
///
/// Terms are kept sorted by (shift.p, shift.q, kind) with the label as a
/// deterministic tiebreak, and identical terms merged into one entry with
/// a positive multiplicity. Equality compares the underlying multisets of
/// (shift, kind) pairs and disregards labels entirely.
class FormalSum {
public:
    struct Term {
        CoeffAtom atom;
        std::int64_t mult = 1;
    };

    FormalSum() = default;
    explicit FormalSum(std::vector<Term> terms);

    static FormalSum single(RingKind kind, Bidegree shift, std::string label = {});

    const std::vector<Term>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::int64_t total_multiplicity() const;

    friend bool operator==(const FormalSum& a, const FormalSum& b);
    friend bool operator!=(const FormalSum& a, const FormalSum& b) { return !(a == b); }

    FormalSum& operator+=(const FormalSum& o);
    friend FormalSum operator+(FormalSum a, const FormalSum& b) {
        a += b;
        return a;
    }

    /// Multiset differences (a minus b, b minus a) ignoring labels; both are
    /// empty exactly when a == b.
    static std::pair<FormalSum, FormalSum> diff(const FormalSum& a, const FormalSum& b);

private:
    void canonicalize();

    std::vector<Term> terms_;
};

FormalSum shift_sum(const FormalSum& s, Bidegree d);
FormalSum add_sums(const FormalSum& a, const FormalSum& b);
FormalSum coker_eta(const FormalSum& s);
FormalSum ker_eta(const FormalSum& s);

std::string to_string(const FormalSum::Term& t);  // "M@(9,5)", "MW@(0,0) x2"
std::string to_string(const FormalSum& s);        // "{MW@(0,0), etaM@(7,4)}"

}  // namespace stiefelmw
