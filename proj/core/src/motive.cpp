#include "stiefelmw/motive.hpp"

#include <algorithm>
#include <stdexcept>

namespace stiefelmw {

namespace {

bool atom_less(const MotiveAtom& a, const MotiveAtom& b) {
    if (a.shift != b.shift) return a.shift < b.shift;
    if (a.twist != b.twist) return a.twist < b.twist;
    return a.kind < b.kind;
}

}  // namespace

MotiveSum::MotiveSum(std::vector<Term> terms) : terms_(std::move(terms)) { canonicalize(); }

MotiveSum MotiveSum::unit() { return single(MotiveKind::Tate, 0, 0); }

MotiveSum MotiveSum::single(MotiveKind kind, int twist, int shift) {
    MotiveSum s;
    s.terms_.push_back(Term{MotiveAtom{kind, twist, shift}, 1});
    return s;
}

void MotiveSum::canonicalize() {
    for (const Term& t : terms_)
        if (t.mult < 0) throw std::invalid_argument("MotiveSum: negative multiplicity");
    std::erase_if(terms_, [](const Term& t) { return t.mult == 0; });
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return atom_less(a.atom, b.atom); });
    std::vector<Term> merged;
    merged.reserve(terms_.size());
    for (const Term& t : terms_) {
        if (!merged.empty() && merged.back().atom == t.atom)
            merged.back().mult += t.mult;
        else
            merged.push_back(t);
    }
    terms_ = std::move(merged);
}

std::int64_t MotiveSum::total_multiplicity() const {
    std::int64_t n = 0;
    for (const Term& t : terms_) n += t.mult;
    return n;
}

std::int64_t MotiveSum::cohomology_rank() const {
    std::int64_t n = 0;
    for (const Term& t : terms_) n += (t.atom.kind == MotiveKind::Cone ? 2 : 1) * t.mult;
    return n;
}

Conventions derived_conventions() { return {}; }

Conventions paper_conventions() {
    Conventions c;
    c.cone_shift_delta = 0;
    return c;
}

std::string convention_name(const Conventions& conv) {
    if (conv == derived_conventions()) return "derived";
    if (conv == paper_conventions()) return "paper";
    return "custom";
}

MotiveSum sphere_motive(int m) {
    if (m < 1) throw std::domain_error("sphere_motive: require m >= 1");
    return MotiveSum({{MotiveAtom{MotiveKind::Tate, 0, 0}, 1},
                      {MotiveAtom{MotiveKind::Tate, m, 2 * m - 1}, 1}});
}

MotiveSum hs_motive(int m, const Conventions& conv) {
    if (m < 2) throw std::domain_error("hs_motive: require m >= 2");
    if (m % 2 == 0) return sphere_motive(m);
    const int k = (m - 1) / 2;
    return MotiveSum({{MotiveAtom{MotiveKind::Tate, 0, 0}, 1},
                      {MotiveAtom{MotiveKind::Cone, 2 * k, 4 * k + conv.cone_shift_delta}, 1},
                      {MotiveAtom{MotiveKind::Tate, 4 * k + 1, 8 * k}, 1}});
}

MotiveSum tensor(const MotiveSum& x, const MotiveSum& y, const Conventions& conv) {
    std::vector<MotiveSum::Term> out;
    out.reserve(x.terms().size() * y.terms().size());
    for (const auto& tx : x.terms()) {
        for (const auto& ty : y.terms()) {
            const std::int64_t mult = tx.mult * ty.mult;
            const int tw = tx.atom.twist + ty.atom.twist;
            const int sh = tx.atom.shift + ty.atom.shift;
            const bool cx = tx.atom.kind == MotiveKind::Cone;
            const bool cy = ty.atom.kind == MotiveKind::Cone;
            if (cx && cy) {
                out.push_back({MotiveAtom{MotiveKind::Cone, tw, sh}, mult});
                out.push_back({MotiveAtom{MotiveKind::Cone, tw + conv.cone_square_twist,
                                          sh + conv.cone_square_shift},
                               mult});
            } else if (cx || cy) {
                out.push_back({MotiveAtom{MotiveKind::Cone, tw, sh}, mult});
            } else {
                out.push_back({MotiveAtom{MotiveKind::Tate, tw, sh}, mult});
            }
        }
    }
    return MotiveSum(std::move(out));
}

MotiveSum stiefel_motive(StiefelIndex idx, const Conventions& conv) {
    const int n = idx.n();
    const int k = idx.k();
    const int j = k / 2;
    MotiveSum acc = MotiveSum::unit();
    if (n % 2 == 0) {
        acc = tensor(acc, hs_motive(n, conv), conv);
        const int odd_factors = (k % 2 == 0) ? j - 1 : j;
        for (int t = 0; t < odd_factors; ++t) acc = tensor(acc, hs_motive(n - 1 - 2 * t, conv), conv);
        if (k % 2 == 0) acc = tensor(acc, sphere_motive(n - k + 1), conv);
    } else {
        for (int t = 0; t < j; ++t) acc = tensor(acc, hs_motive(n - 2 * t, conv), conv);
        if (k % 2 != 0) acc = tensor(acc, sphere_motive(n - k + 1), conv);
    }
    return acc;
}

FormalSum motive_cohomology(const MotiveSum& x) {
    std::vector<FormalSum::Term> out;
    out.reserve(x.terms().size());
    for (const auto& t : x.terms()) {
        const MotiveAtom& a = t.atom;
        if (a.kind == MotiveKind::Tate) {
            out.push_back({CoeffAtom{RingKind::MW, {a.shift, a.twist}, {}}, t.mult});
        } else {
            out.push_back({CoeffAtom{RingKind::M, {a.shift + 2, a.twist + 1}, {}}, t.mult});
            out.push_back({CoeffAtom{RingKind::EtaM, {a.shift, a.twist}, {}}, t.mult});
        }
    }
    return FormalSum(std::move(out));
}

std::string to_string(const MotiveAtom& a) {
    std::string out = a.kind == MotiveKind::Tate ? "T(" : "C(";
    out += std::to_string(a.twist) + ")[" + std::to_string(a.shift) + "]";
    return out;
}

std::string to_string(const MotiveSum::Term& t) {
    std::string out = to_string(t.atom);
    if (t.mult != 1) out += " x" + std::to_string(t.mult);
    return out;
}

std::string to_string(const MotiveSum& s) {
    std::string out = "{";
    bool first = true;
    for (const auto& t : s.terms()) {
        if (!first) out += ", ";
        out += to_string(t);
        first = false;
    }
    out += "}";
    return out;
}

}  // namespace stiefelmw
