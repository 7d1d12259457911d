#pragma once

// Domain documents: one JSON object per domain.
//
//   {"type": "ball", "center": [0, 0], "radius": 1}
//   {"type": "halfspace", "axis": [0, 1], "center": [0, 0]}        axis = inner normal, both optional
//   {"type": "exterior_ball", "center": [0, 0], "radius": 1}
//   {"type": "cone", "angle": 0.785, "axis": [0, 1], "beta": 0.4}   axis and beta optional
//   {"type": "hyperplane_complement"}
//   {"type": "special_lipschitz", "breakpoints": [[-1, 0], [1, 1]], "lipschitz_constant": 0.5}
//   {"type": "interval_complement", "intervals": [[-1, 1]]}
//   {"type": "ball_union_exterior_ball", "center": [0], "radius": [1, 3]}   inner and outer radius
//
// Dimensions come from the point fields and must match the global d.

#include "fracheat/geometry.hpp"

#include <json.hpp>

#include <string>

namespace fracheat {

/// Rejected configuration: bad flags, malformed documents, unknown domain types.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Domain domain_from_json(const nlohmann::json& doc, int d);

/// `spec` is either an inline JSON object or a path to a file holding one.
Domain load_domain(const std::string& spec, int d);

nlohmann::json domain_to_json(const Domain& domain);

/// Comma separated coordinates, e.g. "0.5,-1".
Point parse_point(const std::string& text, int d);

}  // namespace fracheat
