#include "fracheat/domain_io.hpp"

#include "fracheat/error.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace fracheat {

namespace {

using nlohmann::json;

void check_fields(const json& doc, const std::string& type, const std::set<std::string>& allowed) {
  for (const auto& [key, value] : doc.items()) {
    if (key == "type") continue;
    if (!allowed.count(key)) throw ConfigError("field '" + key + "' is not valid for domain type '" + type + "'");
  }
}

const json& required(const json& doc, const char* key) {
  if (!doc.contains(key)) throw ConfigError(std::string("domain document is missing '") + key + "'");
  return doc.at(key);
}

double number(const json& v, const char* key) {
  if (!v.is_number()) throw ConfigError(std::string("'") + key + "' must be a number");
  return v.get<double>();
}

Point point(const json& v, const char* key, int d) {
  if (!v.is_array() || v.empty()) throw ConfigError(std::string("'") + key + "' must be a non-empty array");
  if (static_cast<int>(v.size()) != d) {
    throw ConfigError(std::string("'") + key + "' has " + std::to_string(v.size()) + " coordinates but d = " +
                      std::to_string(d));
  }
  Point p(d);
  for (int i = 0; i < d; ++i) p(i) = number(v[i], key);
  return p;
}

std::vector<std::pair<double, double>> pairs(const json& v, const char* key) {
  if (!v.is_array()) throw ConfigError(std::string("'") + key + "' must be an array of pairs");
  std::vector<std::pair<double, double>> out;
  for (const auto& e : v) {
    if (!e.is_array() || e.size() != 2) throw ConfigError(std::string("'") + key + "' entries must be pairs");
    out.emplace_back(number(e[0], key), number(e[1], key));
  }
  return out;
}

json point_json(const Point& p) {
  json a = json::array();
  for (Eigen::Index i = 0; i < p.size(); ++i) a.push_back(p(i));
  return a;
}

Domain build(const json& doc, int d) {
  if (!doc.is_object()) throw ConfigError("domain document must be a JSON object");
  if (!doc.contains("type") || !doc.at("type").is_string()) throw ConfigError("domain document needs a string 'type'");
  const std::string type = doc.at("type").get<std::string>();
  if (type == "ball" || type == "exterior_ball") {
    check_fields(doc, type, {"center", "radius"});
    const Point c = doc.contains("center") ? point(doc.at("center"), "center", d) : Point(Point::Zero(d));
    const double r = number(required(doc, "radius"), "radius");
    return type == "ball" ? Domain::ball(c, r) : Domain::exterior_ball(c, r);
  }
  if (type == "halfspace") {
    check_fields(doc, type, {"center", "axis"});
    Point n = Point::Zero(d);
    n(d - 1) = 1.0;
    if (doc.contains("axis")) n = point(doc.at("axis"), "axis", d);
    const Point o = doc.contains("center") ? point(doc.at("center"), "center", d) : Point(Point::Zero(d));
    return Domain::half_space(n, o);
  }
  if (type == "cone") {
    check_fields(doc, type, {"angle", "axis", "beta"});
    const double angle = number(required(doc, "angle"), "angle");
    std::optional<double> beta;
    if (doc.contains("beta")) beta = number(doc.at("beta"), "beta");
    if (doc.contains("axis")) return Domain::cone(point(doc.at("axis"), "axis", d), angle, beta);
    return Domain::cone(d, angle, beta);
  }
  if (type == "hyperplane_complement") {
    check_fields(doc, type, {});
    return Domain::hyperplane_complement(d);
  }
  if (type == "special_lipschitz") {
    check_fields(doc, type, {"breakpoints", "lipschitz_constant"});
    return Domain::special_lipschitz(d, pairs(required(doc, "breakpoints"), "breakpoints"),
                                     number(required(doc, "lipschitz_constant"), "lipschitz_constant"));
  }
  if (type == "interval_complement") {
    check_fields(doc, type, {"intervals"});
    if (d != 1) throw ConfigError("interval_complement requires d = 1");
    return Domain::interval_complement(pairs(required(doc, "intervals"), "intervals"));
  }
  if (type == "ball_union_exterior_ball") {
    check_fields(doc, type, {"center", "radius"});
    const Point c = doc.contains("center") ? point(doc.at("center"), "center", d) : Point(Point::Zero(d));
    const json& r = required(doc, "radius");
    if (!r.is_array() || r.size() != 2) throw ConfigError("'radius' must be [inner, outer]");
    return Domain::ball_union_exterior_ball(c, number(r[0], "radius"), number(r[1], "radius"));
  }
  throw ConfigError("unknown domain type '" + type + "'");
}

}  // namespace

Domain domain_from_json(const json& doc, int d) {
  try {
    return build(doc, d);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed domain document: ") + e.what());
  } catch (const DomainError& e) {
    throw ConfigError(std::string("invalid domain: ") + e.what());
  } catch (const UnsupportedRegime& e) {
    throw ConfigError(std::string("invalid domain: ") + e.what());
  }
}

Domain load_domain(const std::string& spec, int d) {
  std::string text = spec;
  const auto first = spec.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw ConfigError("empty domain specification");
  if (spec[first] != '{') {
    std::ifstream in(spec);
    if (!in) throw ConfigError("cannot open domain document '" + spec + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed domain document: ") + e.what());
  }
  return domain_from_json(doc, d);
}

json domain_to_json(const Domain& domain) {
  json doc;
  doc["type"] = domain.type_name();
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Ball> || std::is_same_v<T, ExteriorBall>) {
          doc["center"] = point_json(s.center);
          doc["radius"] = s.radius;
        } else if constexpr (std::is_same_v<T, HalfSpace>) {
          doc["axis"] = point_json(s.normal);
          doc["center"] = point_json(s.origin);
        } else if constexpr (std::is_same_v<T, CircularCone>) {
          doc["angle"] = s.half_angle;
          doc["axis"] = point_json(s.axis);
          if (s.beta) doc["beta"] = *s.beta;
        } else if constexpr (std::is_same_v<T, SpecialLipschitz>) {
          doc["breakpoints"] = s.breakpoints;
          doc["lipschitz_constant"] = s.lipschitz_constant;
        } else if constexpr (std::is_same_v<T, IntervalComplement>) {
          doc["intervals"] = s.intervals;
        } else if constexpr (std::is_same_v<T, BallUnionExteriorBall>) {
          doc["center"] = point_json(s.center);
          doc["radius"] = {s.inner_radius, s.outer_radius};
        }
      },
      domain.shape());
  return doc;
}

Point parse_point(const std::string& text, int d) {
  std::vector<double> coords;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find(',', pos), text.size());
    std::string item = text.substr(pos, end - pos);
    const auto b = item.find_first_not_of(' ');
    const auto e = item.find_last_not_of(' ');
    if (b == std::string::npos) throw ConfigError("empty coordinate in point '" + text + "'");
    item = item.substr(b, e - b + 1);
    double v = 0.0;
    const auto res = std::from_chars(item.data(), item.data() + item.size(), v);
    if (res.ec != std::errc() || res.ptr != item.data() + item.size()) {
      throw ConfigError("cannot parse coordinate '" + item + "'");
    }
    coords.push_back(v);
    pos = end + 1;
  }
  if (static_cast<int>(coords.size()) != d) {
    throw ConfigError("point '" + text + "' has " + std::to_string(coords.size()) + " coordinates but d = " +
                      std::to_string(d));
  }
  Point p(d);
  for (int i = 0; i < d; ++i) p(i) = coords[i];
  return p;
}

}  // namespace fracheat
