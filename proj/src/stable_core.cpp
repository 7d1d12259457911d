#include "fracheat/stable_core.hpp"

#include "fracheat/error.hpp"

#include "quadrature.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <string>

namespace fracheat {

namespace {

using std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

using detail::exp_sinh_rule;
using detail::tanh_sinh_rule;

double checked_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 2.0)) {
    throw DomainError("stability index must satisfy 0 < alpha < 2, got " + std::to_string(alpha));
  }
  return alpha;
}

// Rotation angle for k -> s e^{i phi}: keeps Re(k^alpha) >= cos(pi/4) |k|^alpha
// and Im(k) > 0, so exp(-k^alpha + i k u) decays along the ray.
double rotation_angle(double alpha) { return std::min(pi / 2.0, pi / (4.0 * alpha)); }

struct ContourResult {
  std::complex<double> value;
  double error = 0.0;
};

// int_0^inf k^m exp(-k^alpha) exp(i k u) dk for u > 0, along the rotated ray.
ContourResult fourier_moment(double alpha, int m, double u, double tol) {
  const double phi = rotation_angle(alpha);
  const std::complex<double> rot = std::polar(1.0, phi);
  const std::complex<double> rot_alpha = std::polar(1.0, alpha * phi);
  const double damp_a = std::cos(alpha * phi);
  const double damp_u = u * std::sin(phi);

  // Truncate where the modulus of the integrand drops below e^{-46}.
  auto budget = [&](double s) { return 46.0 + std::max(0.0, m * std::log(s)); };
  double s_max = std::min(std::pow(46.0 / damp_a, 1.0 / alpha), 46.0 / damp_u);
  for (int it = 0; it < 6; ++it) {
    s_max = std::min(std::pow(budget(s_max) / damp_a, 1.0 / alpha), budget(s_max) / damp_u);
  }

  const std::complex<double> pre = std::pow(rot, m + 1);
  auto integrand = [&](double s) {
    if (s <= 0.0) return std::complex<double>(m == 0 ? 1.0 : 0.0, 0.0);
    const std::complex<double> k = s * rot;
    const std::complex<double> e = -std::pow(s, alpha) * rot_alpha + std::complex<double>(0.0, u) * k;
    return std::pow(s, m) * std::exp(e);
  };

  double err_re = 0.0, err_im = 0.0;
  // Split the range so each piece holds a handful of oscillations.
  const int pieces = 8;
  double re = 0.0, im = 0.0;
  for (int p = 0; p < pieces; ++p) {
    // Finer pieces near the origin where s^alpha is not smooth.
    const double a = s_max * std::pow(static_cast<double>(p) / pieces, 2.0);
    const double b = s_max * std::pow(static_cast<double>(p + 1) / pieces, 2.0);
    double e1 = 0.0, e2 = 0.0;
    re += tanh_sinh_rule().integrate([&](double s) { return (pre * integrand(s)).real(); }, a, b, tol,
                                     &e1);
    im += tanh_sinh_rule().integrate([&](double s) { return (pre * integrand(s)).imag(); }, a, b, tol,
                                     &e2);
    err_re += e1;
    err_im += e2;
  }
  return {std::complex<double>(re, im), std::hypot(err_re, err_im)};
}

double lgamma_checked(double x) { return std::lgamma(x); }

}  // namespace

Point make_point(std::initializer_list<double> coords) {
  if (coords.size() == 0 || coords.size() > static_cast<std::size_t>(kMaxDim)) {
    throw DomainError("point dimension must be between 1 and " + std::to_string(kMaxDim));
  }
  Point p(static_cast<Eigen::Index>(coords.size()));
  Eigen::Index i = 0;
  for (double c : coords) p(i++) = c;
  return p;
}

Point zero_point(int d) { return Point::Zero(d); }

StableParams::StableParams(int d, double alpha) : d_(d), alpha_(checked_alpha(alpha)) {
  if (d < 1 || d > kMaxDim) {
    throw DomainError("dimension must satisfy 1 <= d <= " + std::to_string(kMaxDim) + ", got " +
                      std::to_string(d));
  }
  const double dd = d;
  const double a = alpha;
  levy_const_ = std::pow(2.0, a) * std::tgamma((dd + a) / 2.0) /
                (std::pow(pi, dd / 2.0) * std::abs(std::tgamma(-a / 2.0)));
  green_const_ = std::tgamma(dd / 2.0) /
                 (std::pow(2.0, a) * std::pow(pi, dd / 2.0) * std::pow(std::tgamma(a / 2.0), 2));
  poisson_const_ = std::tgamma(dd / 2.0) * std::pow(pi, -1.0 - dd / 2.0) * std::sin(pi * a / 2.0);
  exit_const_ = std::pow(2.0, 1.0 - a) * std::tgamma(dd / 2.0) /
                (a * std::tgamma((dd + a) / 2.0) * std::tgamma(a / 2.0));
  p1_origin_ = std::tgamma(dd / a) /
               (a * std::pow(2.0, dd - 1.0) * std::pow(pi, dd / 2.0) * std::tgamma(dd / 2.0));
}

double levy_density(const StableParams& params, const Point& y) {
  const double r = y.norm();
  if (r == 0.0) throw DomainError("Levy density is singular at the origin");
  return params.levy_constant() * std::pow(r, -params.d() - params.alpha());
}

DensityEval stable_density_tail_series(const StableParams& params, double r,
                                       const DensityOptions& opts) {
  if (!(r > 0.0)) return {0.0, kInf};
  const double a = params.alpha();
  const double d = params.d();
  const double log_r = std::log(r);
  double sum = 0.0;
  double prev_mag = kInf;
  for (int k = 1; k <= 400; ++k) {
    const double ak = a * k;
    const double log_mag = ak * std::log(2.0) - (d / 2.0 + 1.0) * std::log(pi) +
                           lgamma_checked(ak / 2.0 + 1.0) + lgamma_checked((ak + d) / 2.0) -
                           lgamma_checked(k + 1.0) - (ak + d) * log_r;
    const double mag = std::exp(log_mag);
    const double s = std::sin(pi * ak / 2.0);
    // Exact zeros of sin (alpha k even) contribute nothing.
    const double term = (k % 2 == 1 ? 1.0 : -1.0) * mag * s;
    sum += term;
    if (mag > prev_mag && k > 2) break;  // asymptotic series started to diverge
    prev_mag = mag;
    if (sum != 0.0 && mag <= opts.series_tol * std::abs(sum)) {
      return {sum, mag / std::abs(sum)};
    }
  }
  return {sum, kInf};
}

DensityEval stable_density_quadrature(const StableParams& params, double r,
                                      const DensityOptions& opts) {
  const double a = params.alpha();
  const int d = params.d();
  if (r == 0.0) return {params.density_at_origin(), 0.0};
  const double tol = std::min(opts.rel_tol * 1e-3, 1e-12);

  if (d == 1) {
    const auto res = fourier_moment(a, 0, r, tol);
    const double v = res.value.real() / pi;
    return {v, std::abs(res.error / pi / v)};
  }
  if (d == 3) {
    const auto res = fourier_moment(a, 1, r, tol);
    const double c = 1.0 / (2.0 * pi * pi * r);
    const double v = c * res.value.imag();
    return {v, std::abs(c * res.error / v)};
  }
  if (d == 2) {
    // Projection of the three-dimensional radial density onto the plane.
    const StableParams p3(3, a);
    double max_err = 0.0;
    auto integrand = [&](double s) {
      const DensityEval e = stable_density_radial(p3, std::hypot(r, s), opts);
      max_err = std::max(max_err, e.rel_err);
      return e.value;
    };
    double err = 0.0, l1 = 0.0;
    const double v = 2.0 * exp_sinh_rule().integrate(integrand, 0.0, kInf, tol, &err, &l1);
    return {v, std::max(2.0 * err / std::abs(v), max_err)};
  }
  // d >= 4: Poisson integral for J_{d/2-1} turns the Hankel transform into an
  // average of one-dimensional cosine moments.
  const double dd = d;
  const double cd = std::pow(2.0 * pi, -dd / 2.0) * std::pow(2.0, 2.0 - dd / 2.0) /
                    (std::tgamma((dd - 1.0) / 2.0) * std::sqrt(pi));
  double worst = 0.0;
  auto integrand = [&](double theta) {
    const double u = r * std::cos(theta);
    double moment;
    if (u <= 0.0) {
      moment = std::tgamma(dd / a) / a;
    } else {
      const auto res = fourier_moment(a, d - 1, u, tol);
      worst = std::max(worst, res.error);
      moment = res.value.real();
    }
    return std::pow(std::sin(theta), d - 2) * moment;
  };
  double err = 0.0;
  const double v = cd * boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
                            integrand, 0.0, pi / 2.0, 10, tol, &err);
  return {v, std::abs((cd * err + cd * worst) / v)};
}

DensityEval stable_density_radial(const StableParams& params, double r, const DensityOptions& opts) {
  r = std::abs(r);
  if (r == 0.0) return {params.density_at_origin(), 0.0};
  if (opts.use_closed_forms && params.alpha() == 1.0) {
    const double dd = params.d();
    const double c = std::tgamma((dd + 1.0) / 2.0) / std::pow(pi, (dd + 1.0) / 2.0);
    return {c * std::pow(1.0 + r * r, -(dd + 1.0) / 2.0), 0.0};
  }
  // The series is only attempted where it can possibly converge fast.
  if (r > 2.0) {
    const DensityEval tail = stable_density_tail_series(params, r, opts);
    if (std::isfinite(tail.rel_err)) return tail;
  }
  return stable_density_quadrature(params, r, opts);
}

DensityEval free_density(const StableParams& params, double t, const Point& x, const Point& y,
                         const DensityOptions& opts) {
  if (!(t > 0.0)) throw DomainError("free_density requires t > 0, got t = " + std::to_string(t));
  if (x.size() != params.d() || y.size() != params.d()) {
    throw DomainError("point dimension does not match d");
  }
  const double a = params.alpha();
  const double scale = std::pow(t, -1.0 / a);
  const DensityEval unit = stable_density_radial(params, (y - x).norm() * scale, opts);
  return {std::pow(scale, params.d()) * unit.value, unit.rel_err};
}

double free_density_value(const StableParams& params, double t, double dist) {
  if (!(t > 0.0)) throw DomainError("free_density requires t > 0");
  const double a = params.alpha();
  if (a == 1.0) {
    const double dd = params.d();
    const double c = std::tgamma((dd + 1.0) / 2.0) / std::pow(pi, (dd + 1.0) / 2.0);
    return c * t * std::pow(t * t + dist * dist, -(dd + 1.0) / 2.0);
  }
  const double scale = std::pow(t, -1.0 / a);
  return std::pow(scale, params.d()) * stable_density_radial(params, dist * scale).value;
}

double free_density_bound(const StableParams& params, double t, const Point& z) {
  if (!(t > 0.0)) throw DomainError("free_density_bound requires t > 0");
  const double on_diag = std::pow(t, -params.d() / params.alpha());
  const double r = z.norm();
  if (r == 0.0) return on_diag;
  return std::min(t * std::pow(r, -params.d() - params.alpha()), on_diag);
}

double incomplete_kernel_integral(double a, double b, double w) {
  if (!(a > 0.0) || !(b > 0.0)) throw DomainError("incomplete_kernel_integral requires a, b > 0");
  if (std::isnan(w) || w < 0.0) throw DomainError("incomplete_kernel_integral requires w >= 0");
  if (w == 0.0) return 0.0;
  if (std::isinf(w) && !(b > a)) return kInf;

  // With s = x / (1 - x) the integral is int_0^X x^{a-1} (1-x)^{b-a-1} dx,
  // X = w / (1 + w). The lower part uses x = v^{1/a}, which removes the
  // x^{a-1} singularity; the upper part uses 1 - x = e^u.
  const double tol = 1e-14;
  const double x_split = 0.5;
  const double x_top = std::isinf(w) ? 1.0 : w / (1.0 + w);
  const double x_low = std::min(x_top, x_split);

  auto lower = [&](double v) {
    const double x = std::pow(v, 1.0 / a);
    return std::pow(1.0 - x, b - a - 1.0) / a;
  };
  double total = tanh_sinh_rule().integrate(lower, 0.0, std::pow(x_low, a), tol);
  if (x_top > x_split) {
    const double u_top = std::log(1.0 - x_split);
    auto upper = [&](double u) {
      const double y = std::exp(u);
      return std::pow(1.0 - y, a - 1.0) * std::exp(u * (b - a));
    };
    if (std::isinf(w)) {
      // exp_sinh integrates over (u_top, inf); reflect u -> 2 u_top - u.
      total += exp_sinh_rule().integrate([&](double v) { return upper(2.0 * u_top - v); }, u_top,
                                         kInf, tol);
    } else {
      double u_low = -std::log1p(w);
      // Below u_top - 40 / (b - a) the integrand is under e^{-40} of its peak.
      if (b > a) u_low = std::max(u_low, u_top - 40.0 / (b - a));
      total += boost::math::quadrature::gauss_kronrod<double, 31>::integrate(upper, u_low, u_top, 15,
                                                                            1e-12);
    }
  }
  return total;
}

}  // namespace fracheat
