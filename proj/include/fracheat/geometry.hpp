#pragma once

// The domain catalog: open sets D with exact membership, exact distance to the
// complement, canonical fat-point witnesses and scaling.

#include "fracheat/stable_core.hpp"

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace fracheat {

struct Ball {
  Point center;
  double radius;
};

/// {x : <x - origin, normal> > 0}; the canonical half-space is normal = e_d, origin = 0.
struct HalfSpace {
  Point normal;
  Point origin;
};

struct ExteriorBall {
  Point center;
  double radius;
};

/// {x != 0 : angle(x, axis) < half_angle}, vertex at the origin.
struct CircularCone {
  double half_angle;
  Point axis;
  std::optional<double> beta;  ///< Martin-kernel homogeneity exponent, if known.
};

/// {x : x_d != 0}.
struct HyperplaneComplement {
  int dim;
};

/// {x : x_d > gamma(x_1)} with gamma piecewise linear through the breakpoints
/// and extended linearly beyond the first and last breakpoint.
struct SpecialLipschitz {
  int dim;
  std::vector<std::pair<double, double>> breakpoints;  ///< (x_1, gamma(x_1)), sorted by x_1
  double lipschitz_constant;
};

/// R minus a finite union of disjoint closed intervals (d = 1).
struct IntervalComplement {
  std::vector<std::pair<double, double>> intervals;  ///< sorted, disjoint, a < b
};

/// B(center, inner_radius) union {|x - center| > outer_radius}.
struct BallUnionExteriorBall {
  Point center;
  double inner_radius;
  double outer_radius;
};

using DomainShape = std::variant<Ball, HalfSpace, ExteriorBall, CircularCone, HyperplaneComplement,
                                 SpecialLipschitz, IntervalComplement, BallUnionExteriorBall>;

/// A validated catalog domain. Construction checks every variant invariant
/// (radii > 0, disjoint intervals, r < R, unit axis, Lipschitz bound).
class Domain {
 public:
  explicit Domain(DomainShape shape);

  static Domain ball(Point center, double radius);
  static Domain half_space(int d);  ///< {x_d > 0}
  static Domain half_space(Point normal, Point origin);
  static Domain exterior_ball(Point center, double radius);
  static Domain cone(int d, double half_angle, std::optional<double> beta = std::nullopt);
  static Domain cone(Point axis, double half_angle, std::optional<double> beta = std::nullopt);
  static Domain hyperplane_complement(int d);
  static Domain special_lipschitz(int d, std::vector<std::pair<double, double>> breakpoints,
                                  double lipschitz_constant);
  static Domain interval_complement(std::vector<std::pair<double, double>> intervals);
  static Domain ball_union_exterior_ball(Point center, double inner_radius, double outer_radius);

  const DomainShape& shape() const noexcept { return shape_; }
  int dim() const noexcept { return dim_; }
  /// Short type tag used in documents and reports ("ball", "halfspace", ...).
  std::string type_name() const;
  /// Human-readable descriptor including parameters.
  std::string describe() const;

  /// diam(D^c); +inf when the complement is unbounded.
  double complement_diameter() const;
  /// True when the complement has empty interior (hyperplanes, points).
  bool complement_is_thin() const;
  /// True when rD = D for all r > 0.
  bool is_scale_invariant() const;

 private:
  DomainShape shape_;
  int dim_;
};

/// delta_D(x) = dist(x, D^c); zero for x outside D and on the boundary.
double dist_to_complement(const Domain& domain, const Point& x);

/// Membership in the open set D.
bool contains(const Domain& domain, const Point& x);

/// B(center, kappa r) subset of D intersect B(x, r).
struct FatWitness {
  Point center;
  double kappa;
  double r;
};

/// Constant kappa the variant declares for its fat witnesses.
double declared_kappa(const Domain& domain);

/// Canonical witness A_r(x). Returns nullopt when the variant is not
/// (kappa, r)-fat at x for its declared kappa. Requires x in the closure of D.
std::optional<FatWitness> fat_witness(const Domain& domain, const Point& x, double r);

/// rD.
Domain scale_domain(const Domain& domain, double r);

/// Largest C^{1,1} scale. +inf for flat boundaries, nullopt for domains with corners.
std::optional<double> c11_scale(const Domain& domain);

}  // namespace fracheat
