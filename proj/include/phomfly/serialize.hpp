// JSON forms of coefficient-ring values.
//
//   ExtScalar:  {"part0": <RationalFn>, "part1": <RationalFn>}
//   RationalFn: {"num": <MultiPoly>, "den": <MultiPoly>}
//   MultiPoly:  [[coeff, [eq, ez, eX, eY]], ...]   descending lex order
//
// A coefficient is a JSON integer when it fits in int64 and a decimal string
// otherwise; both are accepted on input.
#pragma once

#include <json.hpp>

#include "phomfly/coeff_ring.hpp"

namespace phomfly {

nlohmann::json to_json(const MultiPoly& p);
nlohmann::json to_json(const RationalFn& f);
nlohmann::json to_json(const ExtScalar& s);

/// Throw std::invalid_argument on malformed input.
MultiPoly multipoly_from_json(const nlohmann::json& j);
RationalFn rational_from_json(const nlohmann::json& j);
ExtScalar ext_from_json(const nlohmann::json& j);

}  // namespace phomfly
