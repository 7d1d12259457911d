#pragma once

// Closed-form kernels of the killed stable process and the catalog of
// survival-probability comparability profiles.

#include "fracheat/geometry.hpp"
#include "fracheat/stable_core.hpp"

#include <optional>
#include <string>

namespace fracheat {

struct Bracket {
  double lower = 0.0;
  double upper = 0.0;
};

/// Green function of B(center, radius). +inf on the diagonal when d >= alpha.
double ball_green(const StableParams& params, const Point& center, double radius, const Point& x,
                  const Point& v);

/// Poisson kernel (exit-position density) of B(center, radius); y must lie outside the closed ball.
double ball_poisson(const StableParams& params, const Point& center, double radius, const Point& x,
                    const Point& y);

/// P^x(|X_tau| > R) for the unit ball at the origin, |x| < 1, R >= 1.
double ball_exit_tail_exact(const StableParams& params, const Point& x, double R);

/// P^x(X_tau > R) for the unit interval (-1, 1), d = 1, R >= 1.
double ball_exit_side_tail(const StableParams& params, double x, double R);

/// Distribution function of X_tau for (-1, 1) started at x, d = 1.
double ball_exit_cdf_1d(const StableParams& params, double x, double y);

/// Comparator (1 - |x|)^{alpha/2} R^{-alpha} scaled by the lower/upper constants measured
/// for (d, alpha) on a fixed (|x|, R) grid.
Bracket ball_exit_tail(const StableParams& params, const Point& x, double R);

/// The measured constants c1 <= exact tail / comparator <= c2.
Bracket ball_exit_tail_constants(const StableParams& params);

/// E^x tau_B for B(center, radius).
double expected_exit_time_ball(const StableParams& params, const Point& center, double radius,
                               const Point& x);

/// int_0^{|x|^2 - 1} s^{alpha/2-1} (s+1)^{-d/2} ds for the exterior of the unit ball.
double exterior_ball_martin_raw(const StableParams& params, const Point& x);

/// Martin kernel with pole at infinity of {|x| > 1}, normalized to 1 at |x| = 2. Requires d > alpha.
double exterior_ball_martin(const StableParams& params, const Point& x);

/// Green function of R \ {0} for 1 < alpha < 2.
double punctured_line_green(double alpha, double x, double y);

enum class ProfileForm {
  Ball,
  HalfSpace,
  ExteriorBall,
  ExteriorBallLog,
  ExteriorBallLine,
  Cone,
  HyperplaneComplement,
  C11Bracket,
  IntervalComplement,
};

struct ProfileOptions {
  /// Principal Dirichlet eigenvalue of the unit ball; enables the exp(-lambda1 t / r^alpha) factor.
  std::optional<double> lambda1;
  /// Cone exponent; overrides the value stored in the domain.
  std::optional<double> beta;
  /// Use the C^{1,1} bracket even when a sharper single-valued profile exists.
  bool force_c11 = false;
};

class SurvivalProfile {
 public:
  SurvivalProfile(Domain domain, StableParams params, ProfileForm form, ProfileOptions opts);

  const Domain& domain() const noexcept { return domain_; }
  const StableParams& params() const noexcept { return params_; }
  ProfileForm form() const noexcept { return form_; }
  std::string form_name() const;
  bool is_bracket() const noexcept { return form_ == ProfileForm::C11Bracket; }

  /// Lower and upper comparators; equal for single-valued forms. Zero outside D.
  Bracket bounds(double t, const Point& x) const;
  /// Single-valued forms only.
  double evaluate(double t, const Point& x) const;

 private:
  double single(double t, const Point& x, double delta) const;

  Domain domain_;
  StableParams params_;
  ProfileForm form_;
  ProfileOptions opts_;
  double beta_ = 0.0;
  double c11_r_ = 0.0;
};

SurvivalProfile survival_profile(const Domain& domain, const StableParams& params,
                                 const ProfileOptions& opts = {});

/// S(t,x) p(t,x,y) S(t,y) with the profile's lower and upper comparators.
Bracket heat_kernel_profile(const SurvivalProfile& profile, double t, const Point& x, const Point& y);
Bracket heat_kernel_profile(const Domain& domain, const StableParams& params, double t, const Point& x,
                            const Point& y, const ProfileOptions& opts = {});

}  // namespace fracheat
