#include "fracheat/geometry.hpp"

#include "fracheat/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace fracheat {

namespace {

using std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string format_point(const Point& p) {
  std::ostringstream os;
  os.precision(9);
  os << '[';
  for (Eigen::Index i = 0; i < p.size(); ++i) os << (i ? "," : "") << p(i);
  os << ']';
  return os.str();
}

void require(bool cond, const std::string& what) {
  if (!cond) throw DomainError(what);
}

void require_finite(const Point& p, const std::string& what) {
  require(p.size() >= 1 && p.size() <= kMaxDim && p.allFinite(), what + ": invalid point");
}

Point unit_axis(int d) {
  Point e = Point::Zero(d);
  e(d - 1) = 1.0;
  return e;
}

// Slopes of the polyline, first and last entries reused for the end rays.
std::vector<double> polyline_slopes(const std::vector<std::pair<double, double>>& bp) {
  std::vector<double> slopes;
  for (std::size_t i = 0; i + 1 < bp.size(); ++i) {
    slopes.push_back((bp[i + 1].second - bp[i].second) / (bp[i + 1].first - bp[i].first));
  }
  return slopes;
}

double polyline_value(const std::vector<std::pair<double, double>>& bp, double s) {
  if (bp.empty()) return 0.0;
  if (bp.size() == 1) return bp.front().second;
  auto seg = [&](std::size_t i) {
    const auto& [x0, y0] = bp[i];
    const auto& [x1, y1] = bp[i + 1];
    return y0 + (y1 - y0) * (s - x0) / (x1 - x0);
  };
  if (s <= bp.front().first) return seg(0);
  if (s >= bp.back().first) return seg(bp.size() - 2);
  const auto it = std::upper_bound(bp.begin(), bp.end(), s,
                                   [](double v, const auto& p) { return v < p.first; });
  return seg(static_cast<std::size_t>(it - bp.begin()) - 1);
}

double dist_point_segment(double px, double py, double ax, double ay, double bx, double by) {
  const double vx = bx - ax, vy = by - ay;
  const double len2 = vx * vx + vy * vy;
  double tpar = len2 > 0 ? ((px - ax) * vx + (py - ay) * vy) / len2 : 0.0;
  tpar = std::clamp(tpar, 0.0, 1.0);
  return std::hypot(px - ax - tpar * vx, py - ay - tpar * vy);
}

double dist_point_ray(double px, double py, double ax, double ay, double dx, double dy) {
  const double len2 = dx * dx + dy * dy;
  const double tpar = std::max(0.0, ((px - ax) * dx + (py - ay) * dy) / len2);
  return std::hypot(px - ax - tpar * dx, py - ay - tpar * dy);
}

// Euclidean distance from (s, y) to the graph of the polyline in the (x_1, x_d) plane.
double dist_to_graph(const SpecialLipschitz& g, double s, double y) {
  const auto& bp = g.breakpoints;
  if (bp.empty()) return std::abs(y);
  if (bp.size() == 1) return std::abs(y - bp.front().second);
  const auto slopes = polyline_slopes(bp);
  double best = kInf;
  for (std::size_t i = 0; i + 1 < bp.size(); ++i) {
    best = std::min(best, dist_point_segment(s, y, bp[i].first, bp[i].second, bp[i + 1].first,
                                             bp[i + 1].second));
  }
  best = std::min(best, dist_point_ray(s, y, bp.front().first, bp.front().second, -1.0, -slopes.front()));
  best = std::min(best, dist_point_ray(s, y, bp.back().first, bp.back().second, 1.0, slopes.back()));
  return best;
}

double cone_angle(const CircularCone& c, const Point& x) {
  const double n = x.norm();
  if (n == 0.0) return 0.0;
  return std::acos(std::clamp(x.dot(c.axis) / n, -1.0, 1.0));
}

}  // namespace

Domain::Domain(DomainShape shape) : shape_(std::move(shape)), dim_(0) {
  dim_ = std::visit(
      overloaded{
          [](const Ball& b) {
            require_finite(b.center, "ball center");
            require(std::isfinite(b.radius) && b.radius > 0.0, "ball radius must be positive");
            return static_cast<int>(b.center.size());
          },
          [](HalfSpace& h) {
            require_finite(h.normal, "half-space normal");
            require_finite(h.origin, "half-space origin");
            require(h.normal.size() == h.origin.size(), "half-space normal/origin dimension mismatch");
            const double n = h.normal.norm();
            require(n > 0.0, "half-space normal must be nonzero");
            h.normal /= n;
            return static_cast<int>(h.normal.size());
          },
          [](const ExteriorBall& b) {
            require_finite(b.center, "exterior ball center");
            require(std::isfinite(b.radius) && b.radius > 0.0, "exterior ball radius must be positive");
            return static_cast<int>(b.center.size());
          },
          [](CircularCone& c) {
            require_finite(c.axis, "cone axis");
            require(c.axis.size() >= 2, "circular cones require d >= 2 (use a half-space in d = 1)");
            require(c.half_angle > 0.0 && c.half_angle < pi, "cone half-angle must lie in (0, pi)");
            const double n = c.axis.norm();
            require(n > 0.0, "cone axis must be nonzero");
            c.axis /= n;
            if (c.beta) require(*c.beta >= 0.0 && std::isfinite(*c.beta), "cone exponent must be >= 0");
            return static_cast<int>(c.axis.size());
          },
          [](const HyperplaneComplement& h) {
            require(h.dim >= 1 && h.dim <= kMaxDim, "hyperplane complement dimension out of range");
            return h.dim;
          },
          [](const SpecialLipschitz& g) {
            require(g.dim >= 2 && g.dim <= kMaxDim, "special Lipschitz domains require 2 <= d");
            require(std::isfinite(g.lipschitz_constant) && g.lipschitz_constant >= 0.0,
                    "Lipschitz constant must be finite and nonnegative");
            for (std::size_t i = 0; i + 1 < g.breakpoints.size(); ++i) {
              require(g.breakpoints[i].first < g.breakpoints[i + 1].first,
                      "breakpoints must be strictly increasing in x_1");
            }
            for (double s : polyline_slopes(g.breakpoints)) {
              require(std::abs(s) <= g.lipschitz_constant * (1.0 + 1e-12),
                      "breakpoint slope exceeds the Lipschitz constant");
            }
            return g.dim;
          },
          [](IntervalComplement& ic) {
            require(!ic.intervals.empty(), "interval complement needs at least one interval");
            std::sort(ic.intervals.begin(), ic.intervals.end());
            for (std::size_t i = 0; i < ic.intervals.size(); ++i) {
              const auto [a, b] = ic.intervals[i];
              require(std::isfinite(a) && std::isfinite(b) && a < b, "intervals must have positive length");
              if (i > 0) require(ic.intervals[i - 1].second < a, "intervals must be pairwise disjoint");
            }
            return 1;
          },
          [](const BallUnionExteriorBall& b) {
            require_finite(b.center, "center");
            require(b.inner_radius > 0.0 && b.inner_radius < b.outer_radius && std::isfinite(b.outer_radius),
                    "ball-union-exterior-ball requires 0 < r < R");
            return static_cast<int>(b.center.size());
          }},
      shape_);
}

Domain Domain::ball(Point center, double radius) { return Domain(Ball{std::move(center), radius}); }
Domain Domain::half_space(int d) {
  require(d >= 1 && d <= kMaxDim, "dimension out of range");
  return Domain(HalfSpace{unit_axis(d), Point::Zero(d)});
}
Domain Domain::half_space(Point normal, Point origin) {
  return Domain(HalfSpace{std::move(normal), std::move(origin)});
}
Domain Domain::exterior_ball(Point center, double radius) {
  return Domain(ExteriorBall{std::move(center), radius});
}
Domain Domain::cone(int d, double half_angle, std::optional<double> beta) {
  require(d >= 1 && d <= kMaxDim, "dimension out of range");
  return Domain(CircularCone{half_angle, unit_axis(d), beta});
}
Domain Domain::cone(Point axis, double half_angle, std::optional<double> beta) {
  return Domain(CircularCone{half_angle, std::move(axis), beta});
}
Domain Domain::hyperplane_complement(int d) { return Domain(HyperplaneComplement{d}); }
Domain Domain::special_lipschitz(int d, std::vector<std::pair<double, double>> breakpoints,
                                 double lipschitz_constant) {
  return Domain(SpecialLipschitz{d, std::move(breakpoints), lipschitz_constant});
}
Domain Domain::interval_complement(std::vector<std::pair<double, double>> intervals) {
  return Domain(IntervalComplement{std::move(intervals)});
}
Domain Domain::ball_union_exterior_ball(Point center, double inner_radius, double outer_radius) {
  return Domain(BallUnionExteriorBall{std::move(center), inner_radius, outer_radius});
}

std::string Domain::type_name() const {
  return std::visit(overloaded{[](const Ball&) { return "ball"; },
                               [](const HalfSpace&) { return "halfspace"; },
                               [](const ExteriorBall&) { return "exterior_ball"; },
                               [](const CircularCone&) { return "cone"; },
                               [](const HyperplaneComplement&) { return "hyperplane_complement"; },
                               [](const SpecialLipschitz&) { return "special_lipschitz"; },
                               [](const IntervalComplement&) { return "interval_complement"; },
                               [](const BallUnionExteriorBall&) { return "ball_union_exterior_ball"; }},
                    shape_);
}

std::string Domain::describe() const {
  std::ostringstream os;
  os.precision(9);
  os << type_name() << '(';
  std::visit(overloaded{
                 [&](const Ball& b) { os << "center=" << format_point(b.center) << ",radius=" << b.radius; },
                 [&](const HalfSpace& h) {
                   os << "normal=" << format_point(h.normal) << ",origin=" << format_point(h.origin);
                 },
                 [&](const ExteriorBall& b) {
                   os << "center=" << format_point(b.center) << ",radius=" << b.radius;
                 },
                 [&](const CircularCone& c) {
                   os << "angle=" << c.half_angle << ",axis=" << format_point(c.axis);
                   if (c.beta) os << ",beta=" << *c.beta;
                 },
                 [&](const HyperplaneComplement& h) { os << "d=" << h.dim; },
                 [&](const SpecialLipschitz& g) {
                   os << "d=" << g.dim << ",lipschitz_constant=" << g.lipschitz_constant << ",breakpoints=[";
                   for (std::size_t i = 0; i < g.breakpoints.size(); ++i) {
                     os << (i ? "," : "") << '[' << g.breakpoints[i].first << ',' << g.breakpoints[i].second << ']';
                   }
                   os << ']';
                 },
                 [&](const IntervalComplement& ic) {
                   os << "intervals=[";
                   for (std::size_t i = 0; i < ic.intervals.size(); ++i) {
                     os << (i ? "," : "") << '[' << ic.intervals[i].first << ',' << ic.intervals[i].second << ']';
                   }
                   os << ']';
                 },
                 [&](const BallUnionExteriorBall& b) {
                   os << "center=" << format_point(b.center) << ",inner_radius=" << b.inner_radius
                      << ",outer_radius=" << b.outer_radius;
                 }},
             shape_);
  os << ')';
  return os.str();
}

double Domain::complement_diameter() const {
  return std::visit(overloaded{[](const ExteriorBall& b) { return 2.0 * b.radius; },
                               [](const BallUnionExteriorBall& b) { return 2.0 * b.outer_radius; },
                               [](const IntervalComplement& ic) {
                                 return ic.intervals.back().second - ic.intervals.front().first;
                               },
                               [](const auto&) { return kInf; }},
                    shape_);
}

bool Domain::complement_is_thin() const { return std::holds_alternative<HyperplaneComplement>(shape_); }

bool Domain::is_scale_invariant() const {
  return std::visit(overloaded{[](const HalfSpace& h) { return std::abs(h.origin.dot(h.normal)) == 0.0; },
                               [](const CircularCone&) { return true; },
                               [](const HyperplaneComplement&) { return true; },
                               [](const auto&) { return false; }},
                    shape_);
}

double dist_to_complement(const Domain& domain, const Point& x) {
  if (x.size() != domain.dim()) throw DomainError("point dimension does not match the domain");
  return std::visit(
      overloaded{
          [&](const Ball& b) { return std::max(b.radius - (x - b.center).norm(), 0.0); },
          [&](const HalfSpace& h) { return std::max((x - h.origin).dot(h.normal), 0.0); },
          [&](const ExteriorBall& b) { return std::max((x - b.center).norm() - b.radius, 0.0); },
          [&](const CircularCone& c) {
            const double n = x.norm();
            if (n == 0.0) return 0.0;
            const double gap = c.half_angle - cone_angle(c, x);
            if (gap <= 0.0) return 0.0;
            return n * std::sin(std::min(gap, pi / 2.0));
          },
          [&](const HyperplaneComplement& h) { return std::abs(x(h.dim - 1)); },
          [&](const SpecialLipschitz& g) {
            const double s = x(0);
            const double y = x(g.dim - 1);
            if (!(y > polyline_value(g.breakpoints, s))) return 0.0;
            return dist_to_graph(g, s, y);
          },
          [&](const IntervalComplement& ic) {
            double best = kInf;
            for (const auto& [a, b] : ic.intervals) {
              if (x(0) >= a && x(0) <= b) return 0.0;
              best = std::min(best, x(0) < a ? a - x(0) : x(0) - b);
            }
            return best;
          },
          [&](const BallUnionExteriorBall& b) {
            const double rho = (x - b.center).norm();
            if (rho < b.inner_radius) return b.inner_radius - rho;
            if (rho > b.outer_radius) return rho - b.outer_radius;
            return 0.0;
          }},
      domain.shape());
}

bool contains(const Domain& domain, const Point& x) { return dist_to_complement(domain, x) > 0.0; }

double declared_kappa(const Domain& domain) {
  return std::visit(overloaded{[](const CircularCone& c) {
                                 const double s = std::sin(c.half_angle);
                                 return s / (1.0 + s);
                               },
                               [](const SpecialLipschitz& g) {
                                 return 1.0 / (2.0 * std::sqrt(1.0 + g.lipschitz_constant * g.lipschitz_constant));
                               },
                               [](const auto&) { return 0.5; }},
                    domain.shape());
}

namespace {

// A_r(x) for a ball B(c, R) and x in its closure; kappa = 1/2 up to r = 2R.
std::optional<FatWitness> ball_witness(const Point& c, double R, const Point& x, double r) {
  if (r > 2.0 * R) return std::nullopt;
  const double rho = (x - c).norm();
  Point a = x;
  if (rho > 0.0) a = x + std::min(r / 2.0, rho) * (c - x) / rho;
  return FatWitness{a, 0.5, r};
}

std::optional<FatWitness> exterior_witness(const Point& c, double R, const Point& x, double r) {
  const double rho = (x - c).norm();
  const double shift = std::max(0.0, R + r / 2.0 - rho);
  return FatWitness{Point(x + shift * (x - c) / rho), 0.5, r};
}

}  // namespace

std::optional<FatWitness> fat_witness(const Domain& domain, const Point& x, double r) {
  if (!(r > 0.0)) throw DomainError("fat_witness requires r > 0");
  if (x.size() != domain.dim()) throw DomainError("point dimension does not match the domain");
  const double delta = dist_to_complement(domain, x);
  if (delta >= r) return FatWitness{x, 1.0, r};

  return std::visit(
      overloaded{
          [&](const Ball& b) -> std::optional<FatWitness> {
            require((x - b.center).norm() <= b.radius * (1.0 + 1e-12), "fat_witness: x outside the closed ball");
            return ball_witness(b.center, b.radius, x, r);
          },
          [&](const HalfSpace& h) -> std::optional<FatWitness> {
            require((x - h.origin).dot(h.normal) >= -1e-12, "fat_witness: x outside the closed half-space");
            const double shift = std::max(0.0, r / 2.0 - delta);
            return FatWitness{Point(x + shift * h.normal), 0.5, r};
          },
          [&](const ExteriorBall& b) -> std::optional<FatWitness> {
            require((x - b.center).norm() >= b.radius * (1.0 - 1e-12), "fat_witness: x inside the excluded ball");
            return exterior_witness(b.center, b.radius, x, r);
          },
          [&](const CircularCone& c) -> std::optional<FatWitness> {
            require(cone_angle(c, x) <= c.half_angle + 1e-12 || x.norm() == 0.0,
                    "fat_witness: x outside the closed cone");
            const double s = std::sin(c.half_angle);
            const double step = r / (1.0 + s);
            return FatWitness{Point(x + step * c.axis), s / (1.0 + s), r};
          },
          [&](const HyperplaneComplement& h) -> std::optional<FatWitness> {
            const double xd = x(h.dim - 1);
            const double sign = xd >= 0.0 ? 1.0 : -1.0;
            Point a = x;
            a(h.dim - 1) = sign * std::max(std::abs(xd), r / 2.0);
            return FatWitness{a, 0.5, r};
          },
          [&](const SpecialLipschitz& g) -> std::optional<FatWitness> {
            require(x(g.dim - 1) >= polyline_value(g.breakpoints, x(0)) - 1e-12,
                    "fat_witness: x below the Lipschitz graph");
            Point a = x;
            a(g.dim - 1) += r / 2.0;
            return FatWitness{a, declared_kappa(domain), r};
          },
          [&](const IntervalComplement& ic) -> std::optional<FatWitness> {
            const double xc = x(0);
            for (const auto& [lo, hi] : ic.intervals) {
              require(!(xc > lo && xc < hi), "fat_witness: x inside a removed interval");
            }
            // Free pieces of (x - r, x + r); keep those long enough for a ball of radius r/2.
            std::vector<std::pair<double, double>> free;
            double cursor = xc - r;
            for (const auto& [lo, hi] : ic.intervals) {
              if (hi <= cursor) continue;
              if (lo >= xc + r) break;
              if (lo > cursor) free.emplace_back(cursor, lo);
              cursor = std::max(cursor, hi);
            }
            if (cursor < xc + r) free.emplace_back(cursor, xc + r);
            std::optional<FatWitness> best;
            double best_dist = kInf;
            for (const auto& [lo, hi] : free) {
              if (hi - lo < r) continue;
              const double centre = std::clamp(xc, lo + r / 2.0, hi - r / 2.0);
              if (std::abs(centre - xc) < best_dist) {
                best_dist = std::abs(centre - xc);
                Point a(1);
                a(0) = centre;
                best = FatWitness{a, 0.5, r};
              }
            }
            return best;
          },
          [&](const BallUnionExteriorBall& b) -> std::optional<FatWitness> {
            const double rho = (x - b.center).norm();
            if (rho <= b.inner_radius * (1.0 + 1e-12)) return ball_witness(b.center, b.inner_radius, x, r);
            require(rho >= b.outer_radius * (1.0 - 1e-12), "fat_witness: x inside the removed annulus");
            return exterior_witness(b.center, b.outer_radius, x, r);
          }},
      domain.shape());
}

Domain scale_domain(const Domain& domain, double r) {
  if (!(r > 0.0) || !std::isfinite(r)) throw DomainError("scale factor must be positive");
  return std::visit(
      overloaded{
          [&](const Ball& b) { return Domain::ball(r * b.center, r * b.radius); },
          [&](const HalfSpace& h) { return Domain::half_space(h.normal, r * h.origin); },
          [&](const ExteriorBall& b) { return Domain::exterior_ball(r * b.center, r * b.radius); },
          [&](const CircularCone& c) { return Domain(c); },
          [&](const HyperplaneComplement& h) { return Domain(h); },
          [&](const SpecialLipschitz& g) {
            auto bp = g.breakpoints;
            for (auto& [s, v] : bp) {
              s *= r;
              v *= r;
            }
            return Domain::special_lipschitz(g.dim, std::move(bp), g.lipschitz_constant);
          },
          [&](const IntervalComplement& ic) {
            auto iv = ic.intervals;
            for (auto& [a, b] : iv) {
              a *= r;
              b *= r;
            }
            return Domain::interval_complement(std::move(iv));
          },
          [&](const BallUnionExteriorBall& b) {
            return Domain::ball_union_exterior_ball(r * b.center, r * b.inner_radius, r * b.outer_radius);
          }},
      domain.shape());
}

std::optional<double> c11_scale(const Domain& domain) {
  return std::visit(
      overloaded{[](const Ball& b) -> std::optional<double> { return b.radius; },
                 [](const HalfSpace&) -> std::optional<double> { return kInf; },
                 [](const ExteriorBall& b) -> std::optional<double> { return b.radius; },
                 [](const CircularCone& c) -> std::optional<double> {
                   if (c.half_angle == pi / 2.0) return kInf;
                   return std::nullopt;
                 },
                 [](const HyperplaneComplement&) -> std::optional<double> { return std::nullopt; },
                 [](const SpecialLipschitz& g) -> std::optional<double> {
                   const auto slopes = polyline_slopes(g.breakpoints);
                   for (double s : slopes) {
                     if (s != slopes.front()) return std::nullopt;
                   }
                   return kInf;
                 },
                 [](const IntervalComplement& ic) -> std::optional<double> {
                   double scale = kInf;
                   for (std::size_t i = 0; i < ic.intervals.size(); ++i) {
                     scale = std::min(scale, (ic.intervals[i].second - ic.intervals[i].first) / 2.0);
                     if (i > 0) scale = std::min(scale, (ic.intervals[i].first - ic.intervals[i - 1].second) / 2.0);
                   }
                   return scale;
                 },
                 [](const BallUnionExteriorBall& b) -> std::optional<double> {
                   return std::min(b.inner_radius, (b.outer_radius - b.inner_radius) / 2.0);
                 }},
      domain.shape());
}

}  // namespace fracheat
