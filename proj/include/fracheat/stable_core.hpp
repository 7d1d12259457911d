#pragma once

// Isotropic alpha-stable laws on R^d: constants, the Levy density and the
// free transition density p_t(z) with characteristic function exp(-t|xi|^alpha).

#include <Eigen/Core>

#include <initializer_list>

namespace fracheat {

inline constexpr int kMaxDim = 8;

/// Points in R^d, d <= kMaxDim. Stored inline, never heap allocated.
using Point = Eigen::Matrix<double, Eigen::Dynamic, 1, Eigen::ColMajor, kMaxDim, 1>;

Point make_point(std::initializer_list<double> coords);
Point zero_point(int d);

/// Space dimension and stability index. Construction validates 1 <= d <= kMaxDim
/// and 0 < alpha < 2; alpha = 2 (the Gaussian case) is rejected.
class StableParams {
 public:
  StableParams(int d, double alpha);

  int d() const noexcept { return d_; }
  double alpha() const noexcept { return alpha_; }

  /// A_{d,alpha}: nu(y) = A |y|^{-d-alpha}.
  double levy_constant() const noexcept { return levy_const_; }
  /// B_{d,alpha} in the ball Green function.
  double green_constant() const noexcept { return green_const_; }
  /// C_{d,alpha} in the ball Poisson kernel.
  double poisson_constant() const noexcept { return poisson_const_; }
  /// Constant k with E^x tau_B = k (r^2 - |x - x0|^2)^{alpha/2}.
  double exit_time_constant() const noexcept { return exit_const_; }
  /// p_1(0) = Gamma(d/alpha) / (alpha 2^{d-1} pi^{d/2} Gamma(d/2)).
  double density_at_origin() const noexcept { return p1_origin_; }

  bool operator==(const StableParams& o) const noexcept { return d_ == o.d_ && alpha_ == o.alpha_; }

 private:
  int d_;
  double alpha_;
  double levy_const_;
  double green_const_;
  double poisson_const_;
  double exit_const_;
  double p1_origin_;
};

/// Value of a density together with the quadrature error estimate.
struct DensityEval {
  double value = 0.0;
  double rel_err = 0.0;
};

struct DensityOptions {
  double abs_tol = 1e-10;
  double rel_tol = 1e-8;
  /// Use the Cauchy closed form when alpha == 1. Disable to exercise quadrature.
  bool use_closed_forms = true;
  /// Relative size of the smallest retained term for the tail series to be used.
  double series_tol = 1e-15;
};

/// nu(y) = A_{d,alpha} |y|^{-d-alpha}. Throws DomainError at y = 0.
double levy_density(const StableParams& params, const Point& y);

/// Radial profile of p_1, i.e. p_1(z) for |z| = r.
DensityEval stable_density_radial(const StableParams& params, double r,
                                  const DensityOptions& opts = {});

/// p(t, x, y) = p_t(y - x) = t^{-d/alpha} p_1(t^{-1/alpha}(y - x)).
DensityEval free_density(const StableParams& params, double t, const Point& x, const Point& y,
                         const DensityOptions& opts = {});

/// Faster scalar overload on the distance |y - x|.
double free_density_value(const StableParams& params, double t, double dist);

/// min(t |z|^{-d-alpha}, t^{-d/alpha}).
double free_density_bound(const StableParams& params, double t, const Point& z);

/// int_0^w s^{a-1} (1+s)^{-b} ds for a, b > 0, w >= 0 (w may be +inf when b > a).
double incomplete_kernel_integral(double a, double b, double w);

/// Large-|z| series for p_1; returns a value with rel_err = +inf when it has
/// not converged to opts.series_tol at this radius.
DensityEval stable_density_tail_series(const StableParams& params, double r,
                                       const DensityOptions& opts = {});

/// Radial inversion integral for p_1 without the series switch.
DensityEval stable_density_quadrature(const StableParams& params, double r,
                                      const DensityOptions& opts = {});

}  // namespace fracheat
