#pragma once

#include <json.hpp>

#include "orbitcone/polyhedral.hpp"

namespace orbitcone {

using json = nlohmann::ordered_json;

/// Rationals travel as "p/q" strings so round trips are exact.
json rational_to_json(const Rational& q);
Rational rational_from_json(const json& j);

json qvec_to_json(const QVec& v);
QVec qvec_from_json(const json& j);

/// {"dim": n, "hrep": [{"normal": [...], "offset": "p/q", "strict": bool}],
///  "vrep": {"points": [[...]], "rays": [[...]]}}
/// Either block may be absent; at least one must be present when parsing.
json polyhedral_to_json(const PolyhedralSet& s);
PolyhedralSet polyhedral_from_json(const json& j);

}  // namespace orbitcone
