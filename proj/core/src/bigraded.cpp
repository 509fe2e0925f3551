#include "stiefelmw/bigraded.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

namespace stiefelmw {

std::string to_string(Bidegree d) {
    return "(" + std::to_string(d.p) + "," + std::to_string(d.q) + ")";
}

std::string to_braced_string(Bidegree d) {
    const Bidegree b = to_braced(d);
    return "(" + std::to_string(b.p) + ",{" + std::to_string(b.q) + "})";
}

std::string_view ring_kind_name(RingKind k) {
    switch (k) {
        case RingKind::MW:
            return "MW";
        case RingKind::M:
            return "M";
        case RingKind::EtaM:
            return "etaM";
    }
    return "?";
}

std::optional<RingKind> ring_kind_from_name(std::string_view name) {
    if (name == "MW") return RingKind::MW;
    if (name == "M") return RingKind::M;
    if (name == "etaM") return RingKind::EtaM;
    return std::nullopt;
}

namespace {

bool term_less(const FormalSum::Term& x, const FormalSum::Term& y) {
    if (x.atom.shift != y.atom.shift) return x.atom.shift < y.atom.shift;
    if (x.atom.kind != y.atom.kind) return x.atom.kind < y.atom.kind;
    return x.atom.label < y.atom.label;
}

bool same_key_and_label(const FormalSum::Term& x, const FormalSum::Term& y) {
    return x.atom.shift == y.atom.shift && x.atom.kind == y.atom.kind &&
           x.atom.label == y.atom.label;
}

}  // namespace

FormalSum::FormalSum(std::vector<Term> terms) : terms_(std::move(terms)) { canonicalize(); }

FormalSum FormalSum::single(RingKind kind, Bidegree shift, std::string label) {
    FormalSum s;
    s.terms_.push_back(Term{CoeffAtom{kind, shift, std::move(label)}, 1});
    return s;
}

void FormalSum::canonicalize() {
    for (const Term& t : terms_)
        if (t.mult < 0) throw std::invalid_argument("FormalSum: negative multiplicity");
    std::erase_if(terms_, [](const Term& t) { return t.mult == 0; });
    std::sort(terms_.begin(), terms_.end(), term_less);
    std::vector<Term> merged;
    merged.reserve(terms_.size());
    for (Term& t : terms_) {
        if (!merged.empty() && same_key_and_label(merged.back(), t))
            merged.back().mult += t.mult;
        else
            merged.push_back(std::move(t));
    }
    terms_ = std::move(merged);
}

std::int64_t FormalSum::total_multiplicity() const {
    std::int64_t n = 0;
    for (const Term& t : terms_) n += t.mult;
    return n;
}

bool operator==(const FormalSum& a, const FormalSum& b) {
    auto ai = a.terms_.begin();
    auto bi = b.terms_.begin();
    while (ai != a.terms_.end() && bi != b.terms_.end()) {
        if (ai->atom.shift != bi->atom.shift || ai->atom.kind != bi->atom.kind) return false;
        const Bidegree d = ai->atom.shift;
        const RingKind k = ai->atom.kind;
        std::int64_t ma = 0;
        std::int64_t mb = 0;
        for (; ai != a.terms_.end() && ai->atom.shift == d && ai->atom.kind == k; ++ai)
            ma += ai->mult;
        for (; bi != b.terms_.end() && bi->atom.shift == d && bi->atom.kind == k; ++bi)
            mb += bi->mult;
        if (ma != mb) return false;
    }
    return ai == a.terms_.end() && bi == b.terms_.end();
}

FormalSum& FormalSum::operator+=(const FormalSum& o) {
    terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
    canonicalize();
    return *this;
}

std::pair<FormalSum, FormalSum> FormalSum::diff(const FormalSum& a, const FormalSum& b) {
    std::map<std::tuple<int, int, RingKind>, std::int64_t> net;
    for (const auto& t : a.terms_) net[{t.atom.shift.p, t.atom.shift.q, t.atom.kind}] += t.mult;
    for (const auto& t : b.terms_) net[{t.atom.shift.p, t.atom.shift.q, t.atom.kind}] -= t.mult;
    std::vector<FormalSum::Term> left;
    std::vector<FormalSum::Term> right;
    for (const auto& [key, m] : net) {
        const auto [p, q, kind] = key;
        if (m > 0) left.push_back({CoeffAtom{kind, {p, q}, {}}, m});
        if (m < 0) right.push_back({CoeffAtom{kind, {p, q}, {}}, -m});
    }
    return {FormalSum(std::move(left)), FormalSum(std::move(right))};
}

FormalSum shift_sum(const FormalSum& s, Bidegree d) {
    std::vector<FormalSum::Term> out = s.terms();
    for (auto& t : out) t.atom.shift += d;
    return FormalSum(std::move(out));
}

FormalSum add_sums(const FormalSum& a, const FormalSum& b) { return a + b; }

namespace {

FormalSum map_kinds(const FormalSum& s, RingKind (*f)(RingKind)) {
    std::vector<FormalSum::Term> out = s.terms();
    for (auto& t : out) t.atom.kind = f(t.atom.kind);
    return FormalSum(std::move(out));
}

}  // namespace

FormalSum coker_eta(const FormalSum& s) { return map_kinds(s, coker_eta_kind); }

FormalSum ker_eta(const FormalSum& s) { return map_kinds(s, ker_eta_kind); }

std::string to_string(const FormalSum::Term& t) {
    std::string out{ring_kind_name(t.atom.kind)};
    out += "@";
    out += to_string(t.atom.shift);
    if (t.mult != 1) out += " x" + std::to_string(t.mult);
    return out;
}

std::string to_string(const FormalSum& s) {
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
