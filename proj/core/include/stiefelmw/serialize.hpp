#pragma once

#include <nlohmann/json.hpp>

#include "stiefelmw/bigraded.hpp"
#include "stiefelmw/group_eval.hpp"
#include "stiefelmw/gysin.hpp"
#include "stiefelmw/motive.hpp"
#include "stiefelmw/stiefel_basis.hpp"

namespace stiefelmw {

// JSON forms of the core values. Emission uses ordered_json so documents
// are byte-stable for fixed inputs.
//
//   FormalSum : [{"kind":"MW","p":0,"q":0,"mult":1,"label":"1"}, ...]
//               ("label" present only when nonempty)
//   MotiveSum : [{"kind":"T","twist":0,"shift":0,"mult":1}, ...]
//   GroupExpr : {"type":"zero"} | {"type":"Z"} | {"type":"KMW","index":j}
//             | {"type":"KM","index":j} | {"type":"2KM","index":j}
//             | {"type":"H","kind":"MW"|"M","p":a,"q":b}
//             | {"type":"sum","terms":[...]}

nlohmann::ordered_json to_json(const FormalSum& s);
FormalSum formal_sum_from_json(const nlohmann::json& j);

nlohmann::ordered_json to_json(const MotiveSum& s);
MotiveSum motive_sum_from_json(const nlohmann::json& j);

nlohmann::ordered_json to_json(const GroupExpr& e);
GroupExpr group_expr_from_json(const nlohmann::json& j);

nlohmann::ordered_json to_json(const Conventions& c);
Conventions conventions_from_json(const nlohmann::json& j);

nlohmann::ordered_json to_json(const VanishingFlags& f);

// {"n":7,"k":3,"zero":false,"expr":"eta*beta_{4}","degree":[8,4]}
nlohmann::ordered_json euler_json(StiefelIndex idx, const EulerClass& e);

}  // namespace stiefelmw
