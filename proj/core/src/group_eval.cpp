#include "stiefelmw/group_eval.hpp"

#include <algorithm>
#include <tuple>

namespace stiefelmw {

namespace {

int tag_rank(GroupExpr::Tag t) {
    switch (t) {
        case GroupExpr::Tag::Z:
            return 0;
        case GroupExpr::Tag::KMW:
            return 1;
        case GroupExpr::Tag::KM:
            return 2;
        case GroupExpr::Tag::TwoKM:
            return 3;
        case GroupExpr::Tag::Opaque:
            return 4;
        case GroupExpr::Tag::Zero:
        case GroupExpr::Tag::Sum:
            break;
    }
    return 5;  // never inside a canonical sum
}

std::tuple<int, int, int, int, int> sort_key(const GroupExpr& e) {
    return {tag_rank(e.tag()), e.index(), static_cast<int>(e.opaque_kind()), e.opaque_p(),
            e.opaque_q()};
}

std::string subscript(int j) {
    std::string s = std::to_string(j);
    if (s.size() > 1) return "{" + s + "}";
    return s;
}

}  // namespace

GroupExpr GroupExpr::zero() { return {}; }

GroupExpr GroupExpr::integers() {
    GroupExpr e;
    e.tag_ = Tag::Z;
    return e;
}

GroupExpr GroupExpr::kmw(int j) {
    GroupExpr e;
    e.tag_ = Tag::KMW;
    e.index_ = j;
    return e;
}

GroupExpr GroupExpr::km(int j) {
    if (j < 0) return zero();
    if (j == 0) return integers();
    GroupExpr e;
    e.tag_ = Tag::KM;
    e.index_ = j;
    return e;
}

GroupExpr GroupExpr::two_km(int j) {
    if (j < 0) return zero();
    GroupExpr e;
    e.tag_ = Tag::TwoKM;
    e.index_ = j;
    return e;
}

GroupExpr GroupExpr::opaque(RingKind kind, int a, int b) {
    GroupExpr e;
    e.tag_ = Tag::Opaque;
    e.okind_ = (kind == RingKind::MW) ? RingKind::MW : RingKind::M;
    e.p_ = a;
    e.q_ = b;
    return e;
}

GroupExpr GroupExpr::direct_sum(std::vector<GroupExpr> terms) {
    std::vector<GroupExpr> flat;
    for (GroupExpr& t : terms) {
        if (t.is_zero()) continue;
        if (t.tag_ == Tag::Sum)
            for (GroupExpr& s : t.terms_) flat.push_back(std::move(s));
        else
            flat.push_back(std::move(t));
    }
    if (flat.empty()) return zero();
    std::sort(flat.begin(), flat.end(),
              [](const GroupExpr& a, const GroupExpr& b) { return sort_key(a) < sort_key(b); });
    if (flat.size() == 1) return flat.front();
    GroupExpr e;
    e.tag_ = Tag::Sum;
    e.terms_ = std::move(flat);
    return e;
}

bool operator==(const GroupExpr& a, const GroupExpr& b) {
    if (a.tag_ != b.tag_) return false;
    switch (a.tag_) {
        case GroupExpr::Tag::Zero:
        case GroupExpr::Tag::Z:
            return true;
        case GroupExpr::Tag::KMW:
        case GroupExpr::Tag::KM:
        case GroupExpr::Tag::TwoKM:
            return a.index_ == b.index_;
        case GroupExpr::Tag::Opaque:
            return a.okind_ == b.okind_ && a.p_ == b.p_ && a.q_ == b.q_;
        case GroupExpr::Tag::Sum:
            return a.terms_ == b.terms_;
    }
    return false;
}

std::string GroupExpr::text() const {
    switch (tag_) {
        case Tag::Zero:
            return "0";
        case Tag::Z:
            return "Z";
        case Tag::KMW:
            return "K^MW_" + subscript(index_) + "(K)";
        case Tag::KM:
            return "K^M_" + subscript(index_) + "(K)";
        case Tag::TwoKM:
            return "2K^M_" + subscript(index_) + "(K)";
        case Tag::Opaque:
            return std::string("H_") + std::string(ring_kind_name(okind_)) + "^{" +
                   std::to_string(p_) + "," + std::to_string(q_) + "}(K)";
        case Tag::Sum: {
            std::string out;
            for (std::size_t i = 0; i < terms_.size(); ++i) {
                if (i) out += " ⊕ ";
                out += terms_[i].text();
            }
            return out;
        }
    }
    return "?";
}

std::string GroupExpr::latex() const {
    switch (tag_) {
        case Tag::Zero:
            return "0";
        case Tag::Z:
            return "\\mathbb{Z}";
        case Tag::KMW:
            return "\\mathrm{K}^{\\mathrm{MW}}_{" + std::to_string(index_) + "}(K)";
        case Tag::KM:
            return "\\mathrm{K}^{\\mathrm{M}}_{" + std::to_string(index_) + "}(K)";
        case Tag::TwoKM:
            return "2\\mathrm{K}^{\\mathrm{M}}_{" + std::to_string(index_) + "}(K)";
        case Tag::Opaque:
            return "\\mathrm{H}_{\\mathrm{" + std::string(ring_kind_name(okind_)) + "}}^{" +
                   std::to_string(p_) + "," + std::to_string(q_) + "}(K)";
        case Tag::Sum: {
            std::string out;
            for (std::size_t i = 0; i < terms_.size(); ++i) {
                if (i) out += " \\oplus ";
                out += terms_[i].latex();
            }
            return out;
        }
    }
    return "?";
}

GroupExpr evaluate_atom_at(const CoeffAtom& atom, int p, int q, const VanishingFlags& flags) {
    const int a = p - atom.shift.p;
    const int b = q - atom.shift.q;
    if (a > b) return GroupExpr::zero();  // coconnected
    if (a == b) {
        switch (atom.kind) {
            case RingKind::MW:
                return GroupExpr::kmw(b);
            case RingKind::M:
                return GroupExpr::km(b);
            case RingKind::EtaM:
                return GroupExpr::two_km(b);
        }
    }
    // a < b
    if (atom.kind == RingKind::MW) {
        if (b < 0 && flags.mw_subdiagonal_negative_weight) return GroupExpr::zero();
        return GroupExpr::opaque(RingKind::MW, a, b);
    }
    if (b < 0 && flags.negative_weight_motivic) return GroupExpr::zero();
    return GroupExpr::opaque(RingKind::M, a, b);
}

GroupExpr evaluate_at(const FormalSum& s, int p, int q, const VanishingFlags& flags) {
    std::vector<GroupExpr> parts;
    for (const auto& t : s.terms()) {
        GroupExpr v = evaluate_atom_at(t.atom, p, q, flags);
        if (v.is_zero()) continue;
        for (std::int64_t i = 0; i < t.mult; ++i) parts.push_back(v);
    }
    return GroupExpr::direct_sum(std::move(parts));
}

}  // namespace stiefelmw
