#pragma once

// Verification of exact identities at quadrature tolerance and empirical
// measurement of the comparability constants of the two-sided estimates.

#include "fracheat/closed_kernels.hpp"
#include "fracheat/geometry.hpp"
#include "fracheat/montecarlo.hpp"
#include "fracheat/stable_core.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fracheat {

struct IdentityCheck {
  std::string name;
  double error = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string detail;
};

struct IdentityReport {
  int d = 1;
  double alpha = 1.0;
  std::vector<IdentityCheck> checks;
  bool pass() const;
};

struct IdentityOptions {
  double tol = 1e-6;
  double scaling_tol = 1e-10;
  double levy_tol = 1e-4;
  /// Monte Carlo identities (symmetry, domination, clock factor) run when mc_n > 0.
  long long mc_n = 0;
  std::uint64_t seed = 1;
  int workers = 0;
};

/// Poisson normalization, Green mass against the exit time, exit tail, scaling
/// residuals, Levy normalization, p_1(0) and the total mass of p_1.
IdentityReport verify_identities(const StableParams& params, const IdentityOptions& opts = {});

/// Quadrature helpers, also used by the tests.
double ball_poisson_mass(const StableParams& params, const Point& x, double R);  ///< int_{|y|>R} P_{B(0,1)}(x,y) dy
double ball_green_mass(const StableParams& params, const Point& x);              ///< int_{B(0,1)} G(x,v) dv
double levy_symbol_quadrature(const StableParams& params, double xi);           ///< int (1 - cos xi y_1) nu(y) dy
double stable_density_mass(const StableParams& params);                         ///< int p_1

struct RatioCell {
  double t = 0.0;
  Point x;
  Point y;  ///< equals x for survival cells
  double ratio = 0.0;
  double std_err = 0.0;
  bool noisy = false;
  bool near_boundary = false;
  bool outside_range = false;  ///< outside the time range the estimate is asserted for; annotated only
  double lower_ratio = 0.0;    ///< bracket profiles: estimate / lower comparator
};

struct RatioReport {
  std::string kind;  ///< factorization | profile | bhp
  std::string domain;
  int d = 1;
  double alpha = 1.0;
  std::vector<double> times;
  std::vector<Point> points;
  long long n = 0;
  std::uint64_t seed = 0;
  std::vector<RatioCell> cells;

  double min_ratio = 0.0;
  double max_ratio = 0.0;
  double q05 = 0.0, q50 = 0.0, q95 = 0.0;
  double empirical_C = 0.0;
  int stderr_flags = 0;
  int outside_range = 0;

  /// Measured at half the samples when the sweep ran with n doubling.
  std::optional<double> empirical_C_half;
  /// 95% quantile of near-boundary cells, when there are any.
  std::optional<double> near_boundary_q95;
  /// Largest factor between the near-boundary 95% quantile and the median of the same time slice.
  std::optional<double> boundary_factor;
  std::optional<double> diagonal_C;
  std::optional<double> off_diagonal_C;

  bool finite() const;
  /// |C_n - C_2n| <= tol C_2n.
  bool stable(double tol = 0.15) const;
  /// Near-boundary 95% quantile within a factor 2 of the median, per time slice.
  bool boundary_ok() const;
};

/// Recomputes the summary statistics from the cells (noisy and outside-range cells excluded).
void summarize(RatioReport& report);

struct SweepConfig {
  std::vector<double> times;
  std::vector<Point> points;
  long long n = 100000;
  std::uint64_t seed = 1;
  int workers = 0;
  /// Step for t = 1; multiplied by t when scale_step_with_time.
  StepPolicy step;
  bool scale_step_with_time = false;
  /// Scale-invariant domains: use t^{1/alpha} x instead of x at time t.
  bool scale_points_with_time = false;
  /// Simulate 2n paths and also summarize the first n.
  bool n_doubling = true;
  /// Use Monte Carlo survival in the factorization denominator; otherwise the closed profile.
  bool theorem_form = true;
  ProfileOptions profile;
  double noise_threshold = 0.25;
  /// Cells with delta_D <= this are near-boundary cells.
  double near_boundary = 0.1;
  /// Cells with t below this are annotated as outside the asserted range.
  double min_valid_time = 0.0;
};

/// p_D(t,x,y) / (S(t,x) p(t,x,y) S(t,y)) over all ordered pairs of points.
RatioReport factorization_sweep(const Domain& domain, const StableParams& params, const SweepConfig& cfg);

/// P^x(tau_D > t) / profile(t, x); bracket profiles report estimate / upper with the
/// lower comparator ratio alongside.
RatioReport profile_sweep(const Domain& domain, const StableParams& params, const SweepConfig& cfg);

struct BhpConfiguration {
  Domain domain;
  Point x0;
  double r = 1.0;
  Point x1;
  Point x2;
  RegionFn target1;
  RegionFn target2;
  std::string label;
};

RatioReport bhp_sweep(const std::vector<BhpConfiguration>& configurations, const StableParams& params, long long n,
                      std::uint64_t seed, int workers = 0);

/// Interval configurations in d = 1 for D = R \ [-1, 1], x0 = 1, r = 1, U = (1, 2):
/// x1 = 1 + p/2, x2 = 1 + 0.05, targets [2.5, 4] and (-inf, -2].
BhpConfiguration interval_bhp_configuration(double p);

/// Exact cross-ratio of an interval configuration from the Poisson kernel of U.
double interval_bhp_exact(const StableParams& params, const BhpConfiguration& config,
                          std::pair<double, double> target1, std::pair<double, double> target2);

}  // namespace fracheat
