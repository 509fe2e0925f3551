#include "stiefelmw/serialize.hpp"

#include <stdexcept>

namespace stiefelmw {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json to_json(const FormalSum& s) {
    ordered_json out = ordered_json::array();
    for (const auto& t : s.terms()) {
        ordered_json rec;
        rec["kind"] = ring_kind_name(t.atom.kind);
        rec["p"] = t.atom.shift.p;
        rec["q"] = t.atom.shift.q;
        rec["mult"] = t.mult;
        if (!t.atom.label.empty()) rec["label"] = t.atom.label;
        out.push_back(std::move(rec));
    }
    return out;
}

FormalSum formal_sum_from_json(const json& j) {
    std::vector<FormalSum::Term> terms;
    for (const auto& rec : j) {
        const auto kind = ring_kind_from_name(rec.at("kind").get<std::string>());
        if (!kind) throw std::invalid_argument("formal_sum_from_json: bad kind");
        FormalSum::Term t;
        t.atom.kind = *kind;
        t.atom.shift = {rec.at("p").get<int>(), rec.at("q").get<int>()};
        t.mult = rec.at("mult").get<std::int64_t>();
        if (rec.contains("label")) t.atom.label = rec.at("label").get<std::string>();
        terms.push_back(std::move(t));
    }
    return FormalSum(std::move(terms));
}

ordered_json to_json(const MotiveSum& s) {
    ordered_json out = ordered_json::array();
    for (const auto& t : s.terms()) {
        ordered_json rec;
        rec["kind"] = t.atom.kind == MotiveKind::Tate ? "T" : "C";
        rec["twist"] = t.atom.twist;
        rec["shift"] = t.atom.shift;
        rec["mult"] = t.mult;
        out.push_back(std::move(rec));
    }
    return out;
}

MotiveSum motive_sum_from_json(const json& j) {
    std::vector<MotiveSum::Term> terms;
    for (const auto& rec : j) {
        const std::string kind = rec.at("kind").get<std::string>();
        if (kind != "T" && kind != "C")
            throw std::invalid_argument("motive_sum_from_json: bad kind");
        MotiveSum::Term t;
        t.atom.kind = kind == "T" ? MotiveKind::Tate : MotiveKind::Cone;
        t.atom.twist = rec.at("twist").get<int>();
        t.atom.shift = rec.at("shift").get<int>();
        t.mult = rec.at("mult").get<std::int64_t>();
        terms.push_back(t);
    }
    return MotiveSum(std::move(terms));
}

ordered_json to_json(const GroupExpr& e) {
    ordered_json out;
    switch (e.tag()) {
        case GroupExpr::Tag::Zero:
            out["type"] = "zero";
            break;
        case GroupExpr::Tag::Z:
            out["type"] = "Z";
            break;
        case GroupExpr::Tag::KMW:
            out["type"] = "KMW";
            out["index"] = e.index();
            break;
        case GroupExpr::Tag::KM:
            out["type"] = "KM";
            out["index"] = e.index();
            break;
        case GroupExpr::Tag::TwoKM:
            out["type"] = "2KM";
            out["index"] = e.index();
            break;
        case GroupExpr::Tag::Opaque:
            out["type"] = "H";
            out["kind"] = ring_kind_name(e.opaque_kind());
            out["p"] = e.opaque_p();
            out["q"] = e.opaque_q();
            break;
        case GroupExpr::Tag::Sum: {
            out["type"] = "sum";
            ordered_json terms = ordered_json::array();
            for (const auto& t : e.summands()) terms.push_back(to_json(t));
            out["terms"] = std::move(terms);
            break;
        }
    }
    return out;
}

GroupExpr group_expr_from_json(const json& j) {
    const std::string type = j.at("type").get<std::string>();
    if (type == "zero") return GroupExpr::zero();
    if (type == "Z") return GroupExpr::integers();
    if (type == "KMW") return GroupExpr::kmw(j.at("index").get<int>());
    if (type == "KM") return GroupExpr::km(j.at("index").get<int>());
    if (type == "2KM") return GroupExpr::two_km(j.at("index").get<int>());
    if (type == "H") {
        const auto kind = ring_kind_from_name(j.at("kind").get<std::string>());
        if (!kind) throw std::invalid_argument("group_expr_from_json: bad kind");
        return GroupExpr::opaque(*kind, j.at("p").get<int>(), j.at("q").get<int>());
    }
    if (type == "sum") {
        std::vector<GroupExpr> terms;
        for (const auto& t : j.at("terms")) terms.push_back(group_expr_from_json(t));
        return GroupExpr::direct_sum(std::move(terms));
    }
    throw std::invalid_argument("group_expr_from_json: bad type " + type);
}

ordered_json to_json(const Conventions& c) {
    ordered_json out;
    out["name"] = convention_name(c);
    out["cone_shift_delta"] = c.cone_shift_delta;
    out["cone_square"] = {c.cone_square_twist, c.cone_square_shift};
    return out;
}

Conventions conventions_from_json(const json& j) {
    Conventions c;
    c.cone_shift_delta = j.at("cone_shift_delta").get<int>();
    c.cone_square_twist = j.at("cone_square").at(0).get<int>();
    c.cone_square_shift = j.at("cone_square").at(1).get<int>();
    return c;
}

ordered_json to_json(const VanishingFlags& f) {
    ordered_json out;
    out["coconnected"] = true;  // not switchable
    out["negative_weight_motivic"] = f.negative_weight_motivic;
    out["mw_subdiagonal_negative_weight"] = f.mw_subdiagonal_negative_weight;
    return out;
}

ordered_json euler_json(StiefelIndex idx, const EulerClass& e) {
    ordered_json out;
    out["n"] = idx.n();
    out["k"] = idx.k();
    out["zero"] = e.zero;
    if (!e.zero) {
        out["expr"] = to_string(e);
        out["degree"] = {e.degree.p, e.degree.q};
    }
    return out;
}

}  // namespace stiefelmw
