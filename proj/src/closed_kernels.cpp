#include "fracheat/closed_kernels.hpp"

#include "fracheat/error.hpp"
#include "quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>

namespace fracheat {

namespace {

using std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

void check_dim(const StableParams& params, const Point& p, const char* name) {
  if (p.size() != params.d()) {
    throw DomainError(std::string(name) + " has dimension " + std::to_string(p.size()) + ", expected " +
                      std::to_string(params.d()));
  }
}

double sphere_area(int d) { return 2.0 * std::pow(pi, d / 2.0) / std::tgamma(d / 2.0); }

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

double ball_green(const StableParams& params, const Point& center, double radius, const Point& x,
                  const Point& v) {
  check_dim(params, center, "center");
  check_dim(params, x, "x");
  check_dim(params, v, "v");
  const double r2 = radius * radius;
  const double ax = r2 - (x - center).squaredNorm();
  const double av = r2 - (v - center).squaredNorm();
  if (!(ax > 0.0) || !(av > 0.0)) throw DomainError("ball_green requires x and v inside the open ball");
  const double a = params.alpha();
  const int d = params.d();
  const double dist2 = (x - v).squaredNorm();
  if (dist2 == 0.0) {
    if (d >= a) return kInf;
    return params.green_constant() * 2.0 / (a - 1.0) * std::pow(ax / radius, a - 1.0);
  }
  const double w = ax * av / (r2 * dist2);
  return params.green_constant() * std::pow(dist2, (a - d) / 2.0) * incomplete_kernel_integral(a / 2.0, d / 2.0, w);
}

double ball_poisson(const StableParams& params, const Point& center, double radius, const Point& x,
                    const Point& y) {
  check_dim(params, center, "center");
  check_dim(params, x, "x");
  check_dim(params, y, "y");
  const double r2 = radius * radius;
  const double ax = r2 - (x - center).squaredNorm();
  const double ay = (y - center).squaredNorm() - r2;
  if (!(ax > 0.0)) throw DomainError("ball_poisson requires x inside the open ball");
  if (!(ay > 0.0)) throw DomainError("ball_poisson requires y outside the closed ball");
  return params.poisson_constant() * std::pow(ax / ay, params.alpha() / 2.0) *
         std::pow((x - y).norm(), -static_cast<double>(params.d()));
}

double ball_exit_tail_exact(const StableParams& params, const Point& x, double R) {
  check_dim(params, x, "x");
  const double s2 = x.squaredNorm();
  if (!(s2 < 1.0)) throw DomainError("ball_exit_tail_exact requires |x| < 1");
  if (!(R >= 1.0)) throw DomainError("ball_exit_tail_exact requires R >= 1");
  if (std::isinf(R)) return 0.0;
  const double a = params.alpha();
  // Radial tail of the Poisson kernel after u = 1/|y| and u = v^{1/alpha}; the
  // angular integral is the classical Poisson-kernel mass |S^{d-1}| / (1 - u^2 |x|^2).
  const double top = std::pow(R, -a);
  auto f = [&](double v, double vc) {
    const double u = std::pow(v, 1.0 / a);
    // 1 - u from the distance to the upper endpoint, accurate as v -> 1.
    const double one_minus_u = R == 1.0 && vc > 0.0 ? -std::expm1(std::log1p(-vc) / a) : 1.0 - u;
    return std::pow(one_minus_u * (1.0 + u), -a / 2.0) / (1.0 - u * u * s2) / a;
  };
  const double integral = detail::tanh_sinh_rule().integrate(f, 0.0, top, 1e-13);
  return params.poisson_constant() * sphere_area(params.d()) * std::pow(1.0 - s2, a / 2.0) * integral;
}

double ball_exit_side_tail(const StableParams& params, double x, double R) {
  if (params.d() != 1) throw UnsupportedRegime("ball_exit_side_tail is one-dimensional");
  if (!(std::abs(x) < 1.0)) throw DomainError("ball_exit_side_tail requires |x| < 1");
  if (!(R >= 1.0)) throw DomainError("ball_exit_side_tail requires R >= 1");
  if (std::isinf(R)) return 0.0;
  const double a = params.alpha();
  const double top = std::pow(R, -a);
  auto f = [&](double v, double vc) {
    const double u = std::pow(v, 1.0 / a);
    const double one_minus_u = R == 1.0 && vc > 0.0 ? -std::expm1(std::log1p(-vc) / a) : 1.0 - u;
    return std::pow(one_minus_u * (1.0 + u), -a / 2.0) / (1.0 - x * u) / a;
  };
  const double integral = detail::tanh_sinh_rule().integrate(f, 0.0, top, 1e-13);
  return params.poisson_constant() * std::pow(1.0 - x * x, a / 2.0) * integral;
}

double ball_exit_cdf_1d(const StableParams& params, double x, double y) {
  if (std::abs(y) <= 1.0) return y < 0.0 ? ball_exit_side_tail(params, -x, 1.0) : 1.0 - ball_exit_side_tail(params, x, 1.0);
  if (y < 0.0) return ball_exit_side_tail(params, -x, -y);
  return 1.0 - ball_exit_side_tail(params, x, y);
}

Bracket ball_exit_tail_constants(const StableParams& params) {
  static std::mutex mu;
  static std::map<std::pair<int, double>, Bracket> cache;
  const auto key = std::make_pair(params.d(), params.alpha());
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  Bracket c{kInf, 0.0};
  const double a = params.alpha();
  for (double s : {0.0, 0.25, 0.5, 0.75, 0.9, 0.99, 0.999, 0.9999}) {
    Point x = Point::Zero(params.d());
    x(0) = s;
    for (double R : {2.0, 3.0, 4.0, 8.0, 16.0, 64.0, 256.0, 4096.0, 65536.0}) {
      const double ratio = ball_exit_tail_exact(params, x, R) / (std::pow(1.0 - s, a / 2.0) * std::pow(R, -a));
      c.lower = std::min(c.lower, ratio);
      c.upper = std::max(c.upper, ratio);
    }
  }
  std::lock_guard lock(mu);
  cache.emplace(key, c);
  return c;
}

Bracket ball_exit_tail(const StableParams& params, const Point& x, double R) {
  check_dim(params, x, "x");
  if (!(x.norm() < 1.0)) throw DomainError("ball_exit_tail requires |x| < 1");
  if (!(R >= 2.0)) throw DomainError("ball_exit_tail requires R >= 2");
  const double v = std::pow(1.0 - x.norm(), params.alpha() / 2.0) * std::pow(R, -params.alpha());
  const Bracket c = ball_exit_tail_constants(params);
  return {c.lower * v, c.upper * v};
}

double expected_exit_time_ball(const StableParams& params, const Point& center, double radius,
                               const Point& x) {
  check_dim(params, center, "center");
  check_dim(params, x, "x");
  const double gap = radius * radius - (x - center).squaredNorm();
  if (gap < 0.0) throw DomainError("expected_exit_time_ball requires x in the closed ball");
  return params.exit_time_constant() * std::pow(gap, params.alpha() / 2.0);
}

double exterior_ball_martin_raw(const StableParams& params, const Point& x) {
  check_dim(params, x, "x");
  const double n2 = x.squaredNorm();
  if (n2 < 1.0) throw DomainError("exterior_ball_martin requires |x| >= 1");
  return incomplete_kernel_integral(params.alpha() / 2.0, params.d() / 2.0, n2 - 1.0);
}

double exterior_ball_martin(const StableParams& params, const Point& x) {
  if (!(params.d() > params.alpha())) {
    throw UnsupportedRegime("exterior_ball_martin requires d > alpha; use the d = 1 profiles instead");
  }
  const double raw = exterior_ball_martin_raw(params, x);
  const double norm = incomplete_kernel_integral(params.alpha() / 2.0, params.d() / 2.0, 3.0);
  return raw / norm;
}

double punctured_line_green(double alpha, double x, double y) {
  if (!(alpha > 1.0 && alpha < 2.0)) throw UnsupportedRegime("punctured_line_green requires 1 < alpha < 2");
  const double c = 1.0 / (-2.0 * std::tgamma(alpha) * std::cos(pi * alpha / 2.0));
  const double e = alpha - 1.0;
  return c * (std::pow(std::abs(y), e) + std::pow(std::abs(x), e) - std::pow(std::abs(y - x), e));
}

SurvivalProfile::SurvivalProfile(Domain domain, StableParams params, ProfileForm form, ProfileOptions opts)
    : domain_(std::move(domain)), params_(params), form_(form), opts_(opts) {
  if (domain_.dim() != params_.d()) throw DomainError("domain dimension does not match d");
  if (form_ == ProfileForm::Cone) {
    const auto* cone = std::get_if<CircularCone>(&domain_.shape());
    if (cone == nullptr) throw DomainError("cone profile requires a cone domain");
    if (opts_.beta) {
      beta_ = *opts_.beta;
    } else if (cone->beta) {
      beta_ = *cone->beta;
    } else if (cone->half_angle == pi / 2.0) {
      beta_ = params_.alpha() / 2.0;
    } else {
      throw MissingParameter("cone profile needs the exponent beta; run calibrate beta or pass it explicitly");
    }
  }
  if (form_ == ProfileForm::C11Bracket) {
    const auto r = c11_scale(domain_);
    if (!r) throw UnsupportedRegime(domain_.type_name() + " is not C^{1,1} at any scale");
    c11_r_ = *r;
    const bool has_diam = params_.d() > params_.alpha() && std::isfinite(domain_.complement_diameter());
    if (!opts_.lambda1 && !has_diam && std::isfinite(c11_r_)) {
      throw MissingParameter("the C^{1,1} lower bound needs lambda1 for this domain");
    }
  }
}

std::string SurvivalProfile::form_name() const {
  switch (form_) {
    case ProfileForm::Ball: return "ball";
    case ProfileForm::HalfSpace: return "halfspace";
    case ProfileForm::ExteriorBall: return "exterior_ball";
    case ProfileForm::ExteriorBallLog: return "exterior_ball_log";
    case ProfileForm::ExteriorBallLine: return "exterior_ball_line";
    case ProfileForm::Cone: return "cone";
    case ProfileForm::HyperplaneComplement: return "hyperplane_complement";
    case ProfileForm::C11Bracket: return "c11_bracket";
    case ProfileForm::IntervalComplement: return "interval_complement";
  }
  return "unknown";
}

double SurvivalProfile::single(double t, const Point& x, double delta) const {
  const double a = params_.alpha();
  const double s = std::pow(t, 1.0 / a);
  const auto clamp_power = [](double ratio, double p) { return std::pow(std::min(1.0, ratio), p); };
  switch (form_) {
    case ProfileForm::Ball: {
      const double R = std::get<Ball>(domain_.shape()).radius;
      double v = clamp_power(delta / std::min(R, s), a / 2.0);
      if (opts_.lambda1) v *= std::exp(-*opts_.lambda1 * t / std::pow(R, a));
      return v;
    }
    case ProfileForm::HalfSpace:
      return clamp_power(delta / s, a / 2.0);
    case ProfileForm::ExteriorBall: {
      const double R = std::get<ExteriorBall>(domain_.shape()).radius;
      return clamp_power(delta / std::min(R, s), a / 2.0);
    }
    case ProfileForm::ExteriorBallLog: {
      const double R = std::get<ExteriorBall>(domain_.shape()).radius;
      const double u = delta / R;
      const double tau = t / std::pow(R, a);
      return std::min(1.0, std::log1p(std::sqrt(u)) / std::log1p(std::sqrt(tau)));
    }
    case ProfileForm::ExteriorBallLine: {
      const double R = std::get<ExteriorBall>(domain_.shape()).radius;
      const auto f = [a](double z) { return std::min(std::pow(z, a - 1.0), std::pow(z, a / 2.0)); };
      const double u = delta / R;
      return f(u) / f(std::max(s / R, u));
    }
    case ProfileForm::Cone: {
      const double v = clamp_power(delta / s, a / 2.0) * clamp_power(x.norm() / s, beta_ - a / 2.0);
      return std::min(1.0, v);
    }
    case ProfileForm::HyperplaneComplement:
      return clamp_power(delta / s, a - 1.0);
    case ProfileForm::IntervalComplement: {
      if (a == 1.0) return std::min(1.0, std::log1p(std::sqrt(delta)) / std::log1p(std::sqrt(t)));
      const double num = std::min(std::pow(delta, a - 1.0), std::pow(delta, a / 2.0));
      const double den = std::min(std::pow(t, 1.0 - 1.0 / a), std::sqrt(t));
      return std::min(1.0, num / den);
    }
    case ProfileForm::C11Bracket:
      break;
  }
  throw UnsupportedRegime("profile form is bracket-valued");
}

Bracket SurvivalProfile::bounds(double t, const Point& x) const {
  if (!(t > 0.0)) throw DomainError("survival profiles require t > 0");
  const double delta = dist_to_complement(domain_, x);
  if (delta <= 0.0) return {0.0, 0.0};
  if (form_ != ProfileForm::C11Bracket) {
    const double v = single(t, x, delta);
    return {v, v};
  }
  const double a = params_.alpha();
  const double s = std::pow(t, 1.0 / a);
  const double upper = std::pow(std::min(1.0, delta / std::min(c11_r_, s)), a / 2.0);
  double lower = 0.0;
  const double big = std::max(c11_r_, delta);
  if (std::isinf(big)) {
    lower = upper;
  } else if (opts_.lambda1) {
    lower = std::exp(-*opts_.lambda1 * t / std::pow(big, a)) * upper;
  }
  const double diam = domain_.complement_diameter();
  if (params_.d() > a && std::isfinite(diam)) lower = std::max(lower, std::pow(c11_r_ / diam, a) * upper);
  return {lower, upper};
}

double SurvivalProfile::evaluate(double t, const Point& x) const {
  if (is_bracket()) throw UnsupportedRegime("the C^{1,1} profile is a bracket; use bounds()");
  return bounds(t, x).upper;
}

SurvivalProfile survival_profile(const Domain& domain, const StableParams& params, const ProfileOptions& opts) {
  if (domain.dim() != params.d()) throw DomainError("domain dimension does not match d");
  const double a = params.alpha();
  const int d = params.d();
  if (opts.force_c11) return SurvivalProfile(domain, params, ProfileForm::C11Bracket, opts);
  const ProfileForm form = std::visit(
      overloaded{
          [](const Ball&) { return ProfileForm::Ball; },
          [](const HalfSpace&) { return ProfileForm::HalfSpace; },
          [&](const ExteriorBall&) {
            if (d > a) return ProfileForm::ExteriorBall;
            return a == 1.0 ? ProfileForm::ExteriorBallLog : ProfileForm::ExteriorBallLine;
          },
          [](const CircularCone&) { return ProfileForm::Cone; },
          [&](const HyperplaneComplement&) {
            if (!(a > 1.0)) throw UnsupportedRegime("hyperplane complement profile requires 1 < alpha < 2");
            return ProfileForm::HyperplaneComplement;
          },
          [](const SpecialLipschitz&) -> ProfileForm {
            throw UnsupportedRegime("special Lipschitz domains have no closed survival profile");
          },
          [&](const IntervalComplement&) {
            return a >= 1.0 ? ProfileForm::IntervalComplement : ProfileForm::C11Bracket;
          },
          [](const BallUnionExteriorBall&) { return ProfileForm::C11Bracket; }},
      domain.shape());
  return SurvivalProfile(domain, params, form, opts);
}

Bracket heat_kernel_profile(const SurvivalProfile& profile, double t, const Point& x, const Point& y) {
  const double p = free_density(profile.params(), t, x, y).value;
  const Bracket sx = profile.bounds(t, x);
  const Bracket sy = profile.bounds(t, y);
  return {sx.lower * p * sy.lower, sx.upper * p * sy.upper};
}

Bracket heat_kernel_profile(const Domain& domain, const StableParams& params, double t, const Point& x,
                            const Point& y, const ProfileOptions& opts) {
  return heat_kernel_profile(survival_profile(domain, params, opts), t, x, y);
}

}  // namespace fracheat
