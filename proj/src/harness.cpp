#include "fracheat/harness.hpp"

#include "fracheat/error.hpp"
#include "fracheat/stats.hpp"
#include "quadrature.hpp"

#include <boost/math/special_functions/bessel.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>

namespace fracheat {

namespace {

using std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

double sphere_area(int d) { return 2.0 * std::pow(pi, d / 2.0) / std::tgamma(d / 2.0); }

Point axis_point(int d, double s) {
  Point x = Point::Zero(d);
  x(0) = s;
  return x;
}

// Point at radius rho in direction angle phi from e_1 (in the e_1, e_2 plane).
Point polar_point(int d, double rho, double phi) {
  Point y = Point::Zero(d);
  y(0) = rho * std::cos(phi);
  if (d > 1) y(1) = rho * std::sin(phi);
  return y;
}

// int over S^{d-1} of f(theta) for f depending on the angle to e_1 only.
template <class F>
double axial_sphere_integral(int d, F&& f, double tol) {
  if (d == 1) return f(0.0) + f(pi);
  const double w = sphere_area(d - 1);
  auto g = [&](double phi) { return w * std::pow(std::sin(phi), d - 2) * f(phi); };
  return detail::gauss_kronrod(g, 0.0, pi, tol);
}

// Poisson kernel of the unit ball written through the exact gap |y|^2 - 1, so the
// sphere singularity is resolved without cancellation.
double poisson_with_gap(const StableParams& params, const Point& x, const Point& y, double gap) {
  if (gap > 1e-6) return ball_poisson(params, Point::Zero(params.d()), 1.0, x, y);
  return params.poisson_constant() * std::pow(1.0 - x.squaredNorm(), params.alpha() / 2.0) * std::pow(gap, -params.alpha() / 2.0) *
         std::pow((x - y).norm(), -static_cast<double>(params.d()));
}

IdentityCheck make_check(std::string name, double error, double tol, std::string detail = {}) {
  IdentityCheck c;
  c.name = std::move(name);
  c.error = error;
  c.tolerance = tol;
  c.pass = std::isfinite(error) && error <= tol;
  c.detail = std::move(detail);
  return c;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(9);
  os << v;
  return os.str();
}

}  // namespace

bool IdentityReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.pass; });
}

double ball_poisson_mass(const StableParams& params, const Point& x, double R) {
  if (!(R >= 1.0)) throw DomainError("ball_poisson_mass requires R >= 1");
  const int d = params.d();
  const double tol = 1e-12;
  // The kernel is rotation invariant; put x on the first axis so the shells are axially symmetric.
  const Point xa = axis_point(d, x.norm());
  // |y|^2 = 1 + g; dy = (1/2) (1+g)^{(d-2)/2} dg dsigma.
  auto radial = [&](double g) {
    if (!(g > 0.0)) return 0.0;
    const double rho = std::sqrt(1.0 + g);
    const double shell = axial_sphere_integral(
        d, [&](double phi) { return poisson_with_gap(params, xa, polar_point(d, rho, phi), g); }, tol);
    return 0.5 * std::pow(1.0 + g, (d - 2) / 2.0) * shell;
  };
  const double g0 = R * R - 1.0;
  double near = 0.0;
  if (g0 == 0.0) {
    near = detail::tanh_sinh_rule<1>().integrate(
        [&](double g, double gc) { return radial(g < 0.5 ? (gc < 0.0 ? -gc : g) : g); }, 0.0, 1.0, tol);
  } else {
    near = detail::gauss_kronrod(radial, g0, g0 + 1.0, tol);
  }
  const double far = detail::exp_sinh_rule<1>().integrate(radial, g0 + 1.0, kInf, tol);
  return near + far;
}

double ball_green_mass(const StableParams& params, const Point& x) {
  const int d = params.d();
  const Point center = Point::Zero(d);
  const double s = x.norm();
  if (!(s < 1.0)) throw DomainError("ball_green_mass requires |x| < 1");
  const double tol = 1e-11;
  auto green = [&](const Point& v) {
    if (!(v.squaredNorm() < 1.0) || !((v - x).squaredNorm() > 1e-280)) return 0.0;
    return ball_green(params, center, 1.0, x, v);
  };
  if (d == 1) {
    auto& ts = detail::tanh_sinh_rule<1>();
    const double left = ts.integrate([&](double v) { return green(axis_point(1, v)); }, -1.0, x(0), tol);
    const double right = ts.integrate([&](double v) { return green(axis_point(1, v)); }, x(0), 1.0, tol);
    return left + right;
  }
  // Polar coordinates around x: v = x + r theta, r up to the sphere.
  const double near_coef =
      params.green_constant() * incomplete_kernel_integral(params.alpha() / 2.0, d / 2.0, kInf);
  const Point e1 = x.norm() > 0.0 ? Point(x / s) : axis_point(d, 1.0);
  auto shell = [&](double phi) {
    const double c = std::cos(phi);
    const double rmax = -s * c + std::sqrt(s * s * c * c + 1.0 - s * s);
    Point dir = Point::Zero(d);
    dir(0) = c;
    if (d > 1) dir(1) = std::sin(phi);
    // Rotate so that e_1 maps to x / |x|; only the angle to x matters.
    Point theta = Point::Zero(d);
    if (x.norm() > 0.0) {
      Point perp = Point::Zero(d);
      perp(std::abs(e1(0)) < 0.9 ? 0 : 1) = 1.0;
      perp -= perp.dot(e1) * e1;
      perp.normalize();
      theta = c * e1 + std::sin(phi) * perp;
    } else {
      theta = dir;
    }
    // Close to x the kernel is B r^{alpha-d} times the complete integral, to relative order r^{d-alpha};
    // forming x + r theta there would lose the distance to rounding.
    auto radial = [&](double r) {
      if (r < 1e-6) return near_coef * std::pow(r, params.alpha() - 1.0);
      return std::pow(r, d - 1) * green(Point(x + r * theta));
    };
    return detail::tanh_sinh_rule<1>().integrate(radial, 0.0, rmax, tol);
  };
  return axial_sphere_integral(d, shell, 1e-9);
}

double levy_symbol_quadrature(const StableParams& params, double xi) {
  const int d = params.d();
  const double a = params.alpha();
  const double nu = d / 2.0 - 1.0;
  // Spherical mean of 1 - cos(z theta_1).
  auto one_minus_mean_cos = [&](double z) {
    if (z < 1e-4) return z * z / (2.0 * d);
    if (d == 1) return 1.0 - std::cos(z);
    return 1.0 - std::tgamma(d / 2.0) * std::pow(2.0 / z, nu) * boost::math::cyl_bessel_j(nu, z);
  };
  auto f = [&](double rho) {
    const double z = rho * std::abs(xi);
    if (z < 1e-4) return std::pow(rho, 1.0 - a) * xi * xi / (2.0 * d);
    return std::pow(rho, -1.0 - a) * one_minus_mean_cos(z);
  };
  const double period = 2.0 * pi / std::abs(xi);
  double total = detail::tanh_sinh_rule<1>().integrate(f, 0.0, period, 1e-13);
  const double L = std::max(period, std::pow(1e-7, -1.0 / (1.0 + a)));
  double lo = period;
  while (lo < L) {
    const double hi = lo + period;
    total += boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, lo, hi, 0, 0.0);
    lo = hi;
  }
  // Beyond L the oscillating part is below the target accuracy.
  total += std::pow(lo, -a) / a;
  return params.levy_constant() * sphere_area(d) * total;
}

double stable_density_mass(const StableParams& params) {
  const int d = params.d();
  const double a = params.alpha();
  auto p = [&](double r) { return stable_density_radial(params, r).value; };
  auto inner = [&](double r) { return std::pow(r, d - 1) * p(r); };
  double total = 0.0;
  const double edges[] = {0.0, 0.5, 1.0, 2.0, 4.0};
  for (int i = 0; i + 1 < 5; ++i) total += detail::gauss_kronrod(inner, edges[i], edges[i + 1], 1e-11);
  // r = u^{-1/alpha} makes the heavy tail a bounded integrand on (0, 4^{-alpha}).
  auto tail = [&](double u) {
    if (!(u > 0.0)) return 0.0;
    const double r = std::pow(u, -1.0 / a);
    if (!std::isfinite(r)) return 0.0;
    return std::pow(u, -d / a - 1.0) * p(r) / a;
  };
  total += detail::gauss_kronrod(tail, 0.0, std::pow(4.0, -a), 1e-11);
  return sphere_area(d) * total;
}

IdentityReport verify_identities(const StableParams& params, const IdentityOptions& opts) {
  IdentityReport rep;
  rep.d = params.d();
  rep.alpha = params.alpha();
  const int d = params.d();
  const double a = params.alpha();
  const Point origin = Point::Zero(d);

  for (double s : {0.0, 0.5, 0.9}) {
    const double mass = ball_poisson_mass(params, axis_point(d, s), 1.0);
    rep.checks.push_back(make_check("poisson_normalization |x|=" + fmt(s), std::abs(mass - 1.0), opts.tol,
                                    "mass=" + fmt(mass)));
  }
  for (double s : {0.0, 0.5, 0.9}) {
    const Point x = axis_point(d, s);
    const double mass = ball_green_mass(params, x);
    const double et = expected_exit_time_ball(params, origin, 1.0, x);
    rep.checks.push_back(make_check("green_mass_vs_exit_time |x|=" + fmt(s), std::abs(mass - et) / et, opts.tol,
                                    "int G=" + fmt(mass) + " E tau=" + fmt(et)));
  }
  if (d == 1 && a == 1.0) {
    const double et = expected_exit_time_ball(params, origin, 1.0, origin);
    rep.checks.push_back(make_check("exit_time_unit_interval", std::abs(et - 1.0), opts.tol, "E tau=" + fmt(et)));
  }
  {
    const double quad = ball_poisson_mass(params, origin, 2.0);
    const double exact = ball_exit_tail_exact(params, origin, 2.0);
    rep.checks.push_back(make_check("exit_tail_R=2", std::abs(quad - exact), opts.tol,
                                    "quadrature=" + fmt(quad) + " closed=" + fmt(exact)));
    if (d == 1 && a == 1.0) {
      rep.checks.push_back(make_check("exit_tail_value_one_third", std::abs(quad - 1.0 / 3.0), opts.tol));
    }
    const double quad_off = ball_poisson_mass(params, axis_point(d, 0.6), 3.0);
    const double exact_off = ball_exit_tail_exact(params, axis_point(d, 0.6), 3.0);
    rep.checks.push_back(make_check("exit_tail_R=3 |x|=0.6", std::abs(quad_off - exact_off), opts.tol,
                                    "quadrature=" + fmt(quad_off) + " closed=" + fmt(exact_off)));
  }

  // Scaling residuals.
  {
    double worst = 0.0;
    for (double t : {0.01, 1.0, 100.0}) {
      for (double z : {0.0, 0.3, 1.7, 12.0}) {
        const Point y = axis_point(d, z);
        const double direct = free_density(params, t, origin, y).value;
        const double scaled = std::pow(t, -d / a) * stable_density_radial(params, z * std::pow(t, -1.0 / a)).value;
        worst = std::max(worst, std::abs(direct - scaled) / scaled);
      }
    }
    rep.checks.push_back(make_check("density_scaling", worst, opts.scaling_tol));
  }
  {
    double worst = 0.0;
    const double r = 3.0;
    const Point x = axis_point(d, 0.2), v = axis_point(d, -0.45), y = axis_point(d, 1.8);
    const double g1 = ball_green(params, origin, 1.0, x, v);
    const double g3 = ball_green(params, origin, r, r * x, r * v);
    worst = std::max(worst, std::abs(g3 - std::pow(r, a - d) * g1) / g3);
    const double p1 = ball_poisson(params, origin, 1.0, x, y);
    const double p3 = ball_poisson(params, origin, r, r * x, r * y);
    worst = std::max(worst, std::abs(p3 - std::pow(r, -d) * p1) / p3);
    const double e1 = expected_exit_time_ball(params, origin, 1.0, x);
    const double e3 = expected_exit_time_ball(params, origin, r, r * x);
    worst = std::max(worst, std::abs(e3 - std::pow(r, a) * e1) / e3);
    const Domain D = Domain::ball(origin, 1.0);
    const double dd = dist_to_complement(scale_domain(D, r), r * x) - r * dist_to_complement(D, x);
    worst = std::max(worst, std::abs(dd));
    const Domain hs = Domain::half_space(d);
    const SurvivalProfile ph = survival_profile(hs, params);
    const Point xh = axis_point(d, 0.0) + Point::Unit(d, d - 1) * 0.7;
    worst = std::max(worst, std::abs(ph.evaluate(std::pow(r, a) * 0.4, r * xh) - ph.evaluate(0.4, xh)));
    rep.checks.push_back(make_check("domain_and_kernel_scaling", worst, opts.scaling_tol));
  }
  {
    double worst = 0.0;
    for (double xi : {0.5, 1.0, 2.0}) {
      const double q = levy_symbol_quadrature(params, xi);
      worst = std::max(worst, std::abs(q - std::pow(xi, a)) / std::pow(xi, a));
    }
    rep.checks.push_back(make_check("levy_normalization", worst, opts.levy_tol));
  }
  {
    DensityOptions o;
    o.use_closed_forms = false;
    const double quad = stable_density_quadrature(params, 0.0, o).value;
    const double closed = params.density_at_origin();
    rep.checks.push_back(make_check("density_at_origin", std::abs(quad - closed) / closed, opts.tol,
                                    "quadrature=" + fmt(quad) + " closed=" + fmt(closed)));
  }
  {
    const double mass = stable_density_mass(params);
    rep.checks.push_back(make_check("density_normalization", std::abs(mass - 1.0), opts.tol, "mass=" + fmt(mass)));
  }
  {
    const Point x = axis_point(d, 0.1), v = axis_point(d, -0.7);
    const double gxv = ball_green(params, origin, 1.0, x, v);
    const double gvx = ball_green(params, origin, 1.0, v, x);
    const double pxy = free_density(params, 0.7, x, v).value;
    const double pyx = free_density(params, 0.7, v, x).value;
    rep.checks.push_back(make_check("green_and_density_symmetry", std::abs(gxv - gvx) + std::abs(pxy - pyx), 0.0));
  }

  if (opts.mc_n > 0) {
    McConfig cfg;
    cfg.n = opts.mc_n;
    cfg.seed = opts.seed;
    cfg.workers = opts.workers;
    const Domain ball = Domain::ball(origin, 1.0);
    const Point x = axis_point(d, -0.3), y = axis_point(d, 0.4);
    const double t = 0.5;
    // Heat-kernel identities need one density evaluation per path; they run where it is cheap.
    if (a == 1.0 || d != 2) {
      const MCEstimate pxy = estimate_heat_kernel(ball, params, x, y, t, cfg);
      McConfig cfg2 = cfg;
      cfg2.seed = splitmix64_mix(opts.seed);
      const MCEstimate pyx = estimate_heat_kernel(ball, params, y, x, t, cfg2);
      const double comb = std::hypot(pxy.std_err, pyx.std_err);
      rep.checks.push_back(make_check("mc_heat_kernel_symmetry", std::abs(pxy.mean - pyx.mean) / comb, 3.0,
                                      "p(x,y)=" + fmt(pxy.mean) + " p(y,x)=" + fmt(pyx.mean)));
      const double free = free_density_value(params, t, (x - y).norm());
      rep.checks.push_back(make_check("mc_domination", std::max(0.0, pxy.mean - free) / pxy.std_err, 3.0,
                                      "p_D=" + fmt(pxy.mean) + " p=" + fmt(free)));
    }
    {
      const MCEstimate s1 = estimate_survival(ball, params, x, 0.5, cfg);
      McConfig c2 = cfg;
      c2.seed = splitmix64_mix(opts.seed + 1);
      c2.step.clock = 2.0;
      c2.step.h = cfg.step.h / 2.0;
      const MCEstimate s2 = estimate_survival(ball, params, x, 0.25, c2);
      rep.checks.push_back(make_check("mc_clock_factor", std::abs(s1.mean - s2.mean) / std::hypot(s1.std_err, s2.std_err),
                                      3.0, "S(0.5)=" + fmt(s1.mean) + " S_c2(0.25)=" + fmt(s2.mean)));
      McConfig c3 = cfg;
      c3.seed = splitmix64_mix(opts.seed + 2);
      const double r = 2.0;
      c3.step.h = cfg.step.h * std::pow(r, a);
      const MCEstimate s3 = estimate_survival(scale_domain(ball, r), params, r * x, 0.5 * std::pow(r, a), c3);
      rep.checks.push_back(make_check("mc_survival_scaling", std::abs(s1.mean - s3.mean) / std::hypot(s1.std_err, s3.std_err),
                                      3.0, "S=" + fmt(s1.mean) + " S_scaled=" + fmt(s3.mean)));
      rep.checks.push_back(make_check("mc_sub_probability", std::max(0.0, s1.mean - 1.0), 0.0));
    }
  }
  return rep;
}

bool RatioReport::finite() const {
  return std::isfinite(empirical_C) && empirical_C >= 1.0 && std::isfinite(min_ratio) && min_ratio > 0.0;
}

bool RatioReport::stable(double tol) const {
  if (!empirical_C_half) return false;
  return std::abs(*empirical_C_half - empirical_C) <= tol * empirical_C;
}

bool RatioReport::boundary_ok() const {
  return !boundary_factor || *boundary_factor <= 2.0;
}

void summarize(RatioReport& report) {
  std::vector<double> ratios, near, diag, offdiag;
  double c = 1.0;
  double c_diag = 1.0, c_off = 1.0;
  report.stderr_flags = 0;
  report.outside_range = 0;
  long long in_range = 0;
  for (const RatioCell& cell : report.cells) {
    if (cell.outside_range) {
      ++report.outside_range;
      continue;
    }
    ++in_range;
    if (cell.noisy) {
      ++report.stderr_flags;
      continue;
    }
    ratios.push_back(cell.ratio);
    const double low = cell.lower_ratio > 0.0 ? cell.lower_ratio : cell.ratio;
    const double cc = std::max(cell.ratio, 1.0 / low);
    c = std::max(c, cc);
    if (cell.near_boundary) near.push_back(cell.ratio);
    if (report.kind == "factorization") {
      if (cell.x == cell.y) {
        diag.push_back(cc);
        c_diag = std::max(c_diag, cc);
      } else {
        offdiag.push_back(cc);
        c_off = std::max(c_off, cc);
      }
    }
  }
  if (ratios.empty()) {
    report.min_ratio = report.max_ratio = report.q05 = report.q50 = report.q95 = std::nan("");
    report.empirical_C = kInf;
    return;
  }
  report.min_ratio = *std::min_element(ratios.begin(), ratios.end());
  report.max_ratio = *std::max_element(ratios.begin(), ratios.end());
  report.q05 = quantile(ratios, 0.05);
  report.q50 = quantile(ratios, 0.5);
  report.q95 = quantile(ratios, 0.95);
  report.empirical_C = c;
  report.near_boundary_q95 = near.empty() ? std::nullopt : std::optional<double>(quantile(near, 0.95));
  report.boundary_factor.reset();
  std::map<double, std::pair<std::vector<double>, std::vector<double>>> slices;
  for (const RatioCell& cell : report.cells) {
    if (cell.outside_range || cell.noisy) continue;
    auto& [all, edge] = slices[cell.t];
    all.push_back(cell.ratio);
    if (cell.near_boundary) edge.push_back(cell.ratio);
  }
  for (const auto& [t, slice] : slices) {
    if (slice.second.empty()) continue;
    const double q = quantile(slice.second, 0.95), m = quantile(slice.first, 0.5);
    const double f = std::max(q / m, m / q);
    report.boundary_factor = std::max(report.boundary_factor.value_or(1.0), f);
  }
  if (!diag.empty()) report.diagonal_C = c_diag;
  if (!offdiag.empty()) report.off_diagonal_C = c_off;
  (void)in_range;
}

namespace {

std::uint64_t batch_seed(std::uint64_t seed, std::size_t point, std::size_t time) {
  return splitmix64_mix(seed ^ splitmix64_mix((static_cast<std::uint64_t>(point) << 20) + time + 1));
}

void check_inconclusive(const RatioReport& report, const std::vector<double>& noisy_rel, double threshold) {
  const long long in_range = static_cast<long long>(report.cells.size()) - report.outside_range;
  if (in_range > 0 && 2 * report.stderr_flags > in_range) {
    const double worst = noisy_rel.empty() ? 1.0 : quantile(noisy_rel, 0.5);
    const double factor = std::isfinite(worst) ? std::max(2.0, (worst / threshold) * (worst / threshold)) : 100.0;
    throw InconclusiveReport("more than half of the grid cells are dominated by Monte Carlo noise",
                             static_cast<long long>(std::ceil(report.n * factor)));
  }
}

struct BatchGrid {
  // batches[point][time] (a single time column when the times share a batch)
  std::vector<std::vector<ExitBatch>> batches;
  bool per_time = false;
  ExitBatch& at(std::size_t i, std::size_t j) { return batches[i][per_time ? j : 0]; }
};

Point point_at(const SweepConfig& cfg, const StableParams& params, std::size_t i, double t) {
  if (!cfg.scale_points_with_time) return cfg.points[i];
  return cfg.points[i] * std::pow(t, 1.0 / params.alpha());
}

BatchGrid run_batches(const Domain& domain, const StableParams& params, const SweepConfig& cfg) {
  if (cfg.times.empty() || cfg.points.empty()) throw DomainError("sweeps need at least one time and one point");
  for (const Point& p : cfg.points) {
    if (!contains(domain, p)) throw DomainError("sweep point outside the domain");
  }
  BatchGrid grid;
  grid.per_time = cfg.scale_points_with_time || cfg.scale_step_with_time;
  const double tmax = *std::max_element(cfg.times.begin(), cfg.times.end());
  McConfig mc;
  mc.n = cfg.n_doubling ? 2 * cfg.n : cfg.n;
  mc.workers = cfg.workers;
  grid.batches.resize(cfg.points.size());
  for (std::size_t i = 0; i < cfg.points.size(); ++i) {
    if (!grid.per_time) {
      mc.seed = batch_seed(cfg.seed, i, 0);
      mc.step = cfg.step;
      grid.batches[i].push_back(simulate_exit_batch(domain, params, cfg.points[i], tmax, mc));
      continue;
    }
    for (std::size_t j = 0; j < cfg.times.size(); ++j) {
      const double t = cfg.times[j];
      mc.seed = batch_seed(cfg.seed, i, j);
      mc.step = cfg.step;
      if (cfg.scale_step_with_time) mc.step.h = cfg.step.h * t;
      grid.batches[i].push_back(simulate_exit_batch(domain, params, point_at(cfg, params, i, t), t, mc));
    }
  }
  return grid;
}

RatioReport empty_report(const std::string& kind, const Domain& domain, const StableParams& params,
                         const SweepConfig& cfg) {
  RatioReport r;
  r.kind = kind;
  r.domain = domain.describe();
  r.d = params.d();
  r.alpha = params.alpha();
  r.times = cfg.times;
  r.points = cfg.points;
  r.n = cfg.n_doubling ? 2 * cfg.n : cfg.n;
  r.seed = cfg.seed;
  return r;
}

}  // namespace

RatioReport factorization_sweep(const Domain& domain, const StableParams& params, const SweepConfig& cfg) {
  BatchGrid grid = run_batches(domain, params, cfg);
  std::optional<SurvivalProfile> profile;
  if (!cfg.theorem_form) profile.emplace(survival_profile(domain, params, cfg.profile));
  RatioReport full = empty_report("factorization", domain, params, cfg);
  RatioReport half = full;
  half.n = cfg.n;
  std::vector<double> noisy_rel;
  for (std::size_t j = 0; j < cfg.times.size(); ++j) {
    const double t = cfg.times[j];
    for (std::size_t ix = 0; ix < cfg.points.size(); ++ix) {
      for (std::size_t iy = 0; iy < cfg.points.size(); ++iy) {
        const Point x = point_at(cfg, params, ix, t);
        const Point y = point_at(cfg, params, iy, t);
        const ExitBatch& bx = grid.at(ix, j);
        const ExitBatch& by = grid.at(iy, j);
        const double free = free_density_value(params, t, (x - y).norm());
        for (int pass = 0; pass < (cfg.n_doubling ? 2 : 1); ++pass) {
          const long long n_use = pass == 0 ? 0 : cfg.n;
          RatioCell cell;
          cell.t = t;
          cell.x = x;
          cell.y = y;
          const MCEstimate pd = heat_kernel_from_batch(bx, params, y, t, n_use);
          double sx, sy, rel2;
          if (cfg.theorem_form) {
            const MCEstimate ex = survival_from_batch(bx, t, n_use);
            const MCEstimate ey = survival_from_batch(by, t, n_use);
            sx = ex.mean;
            sy = ey.mean;
            rel2 = std::pow(ex.std_err / sx, 2) + std::pow(ey.std_err / sy, 2);
          } else {
            sx = profile->bounds(t, x).upper;
            sy = profile->bounds(t, y).upper;
            rel2 = 0.0;
          }
          rel2 += std::pow(pd.std_err / pd.mean, 2);
          cell.ratio = pd.mean / (sx * free * sy);
          const double rel = std::sqrt(rel2);
          cell.std_err = cell.ratio * rel;
          cell.noisy = !(pd.mean > 0.0) || !(sx > 0.0) || !(sy > 0.0) || !(rel <= cfg.noise_threshold);
          cell.near_boundary = dist_to_complement(domain, x) <= cfg.near_boundary * (cfg.scale_points_with_time ? std::pow(t, 1.0 / params.alpha()) : 1.0) ||
                               dist_to_complement(domain, y) <= cfg.near_boundary * (cfg.scale_points_with_time ? std::pow(t, 1.0 / params.alpha()) : 1.0);
          cell.outside_range = t < cfg.min_valid_time;
          if (pass == 0 && cell.noisy && !cell.outside_range) noisy_rel.push_back(std::isfinite(rel) ? rel : kInf);
          (pass == 0 ? full : half).cells.push_back(cell);
        }
      }
    }
  }
  summarize(full);
  check_inconclusive(full, noisy_rel, cfg.noise_threshold);
  if (cfg.n_doubling) {
    summarize(half);
    full.empirical_C_half = half.empirical_C;
  }
  return full;
}

RatioReport profile_sweep(const Domain& domain, const StableParams& params, const SweepConfig& cfg) {
  const SurvivalProfile profile = survival_profile(domain, params, cfg.profile);
  BatchGrid grid = run_batches(domain, params, cfg);
  RatioReport full = empty_report("profile", domain, params, cfg);
  RatioReport half = full;
  half.n = cfg.n;
  std::vector<double> noisy_rel;
  for (std::size_t j = 0; j < cfg.times.size(); ++j) {
    const double t = cfg.times[j];
    for (std::size_t ix = 0; ix < cfg.points.size(); ++ix) {
      const Point x = point_at(cfg, params, ix, t);
      const Bracket b = profile.bounds(t, x);
      for (int pass = 0; pass < (cfg.n_doubling ? 2 : 1); ++pass) {
        const long long n_use = pass == 0 ? 0 : cfg.n;
        const MCEstimate s = survival_from_batch(grid.at(ix, j), t, n_use);
        RatioCell cell;
        cell.t = t;
        cell.x = x;
        cell.y = x;
        cell.ratio = s.mean / b.upper;
        if (profile.is_bracket()) cell.lower_ratio = b.lower > 0.0 ? s.mean / b.lower : 0.0;
        const double rel = s.std_err / s.mean;
        cell.std_err = cell.ratio * rel;
        cell.noisy = !(s.mean > 0.0) || !(rel <= cfg.noise_threshold) || (profile.is_bracket() && !(b.lower > 0.0));
        const double scale = cfg.scale_points_with_time ? std::pow(t, 1.0 / params.alpha()) : 1.0;
        cell.near_boundary = dist_to_complement(domain, x) <= cfg.near_boundary * scale;
        cell.outside_range = t < cfg.min_valid_time;
        if (pass == 0 && cell.noisy && !cell.outside_range) noisy_rel.push_back(std::isfinite(rel) ? rel : kInf);
        (pass == 0 ? full : half).cells.push_back(cell);
      }
    }
  }
  summarize(full);
  check_inconclusive(full, noisy_rel, cfg.noise_threshold);
  if (cfg.n_doubling) {
    summarize(half);
    full.empirical_C_half = half.empirical_C;
  }
  return full;
}

BhpConfiguration interval_bhp_configuration(double p) {
  BhpConfiguration c{Domain::interval_complement({{-1.0, 1.0}}),
                     axis_point(1, 1.0),
                     1.0,
                     axis_point(1, 1.0 + p / 2.0),
                     axis_point(1, 1.05),
                     [](const Point& y) { return y(0) >= 2.5 && y(0) <= 4.0; },
                     [](const Point& y) { return y(0) <= -2.0; },
                     "interval p=" + fmt(p)};
  return c;
}

double interval_bhp_exact(const StableParams& params, const BhpConfiguration& config,
                          std::pair<double, double> target1, std::pair<double, double> target2) {
  if (params.d() != 1) throw UnsupportedRegime("interval BHP configurations are one-dimensional");
  // U = D intersect B(x0, r) is the interval (lo, hi) on the right of the removed interval.
  const auto& iv = std::get<IntervalComplement>(config.domain.shape()).intervals;
  double lo = config.x0(0) - config.r, hi = config.x0(0) + config.r;
  for (const auto& [a, b] : iv) {
    if (b <= config.x0(0)) lo = std::max(lo, b);
    if (a >= config.x0(0)) hi = std::min(hi, a);
  }
  const double c = 0.5 * (lo + hi), R = 0.5 * (hi - lo);
  auto mass = [&](double x, std::pair<double, double> T) {
    const double u = (x - c) / R;
    double m = 0.0;
    const double a = (T.first - c) / R, b = (T.second - c) / R;
    if (b > 1.0) m += ball_exit_side_tail(params, u, std::max(a, 1.0)) - ball_exit_side_tail(params, u, b);
    if (a < -1.0) m += ball_exit_side_tail(params, -u, std::max(-b, 1.0)) - ball_exit_side_tail(params, -u, -a);
    return m;
  };
  const double x1 = config.x1(0), x2 = config.x2(0);
  return mass(x1, target1) * mass(x2, target2) / (mass(x1, target2) * mass(x2, target1));
}

RatioReport bhp_sweep(const std::vector<BhpConfiguration>& configurations, const StableParams& params, long long n,
                      std::uint64_t seed, int workers) {
  RatioReport rep;
  rep.kind = "bhp";
  rep.d = params.d();
  rep.alpha = params.alpha();
  rep.n = n;
  rep.seed = seed;
  std::vector<double> noisy_rel;
  for (std::size_t i = 0; i < configurations.size(); ++i) {
    const auto& c = configurations[i];
    if (i == 0) rep.domain = c.domain.describe();
    const MCEstimate e = bhp_cross_ratio(params, c.domain, c.x0, c.r, c.x1, c.x2, c.target1, c.target2, n,
                                         batch_seed(seed, i, 0), workers);
    RatioCell cell;
    cell.x = c.x1;
    cell.y = c.x2;
    cell.ratio = e.mean;
    cell.std_err = e.std_err;
    const double rel = e.std_err / e.mean;
    cell.noisy = !(rel <= 0.25);
    if (cell.noisy) noisy_rel.push_back(rel);
    rep.points.push_back(c.x1);
    rep.cells.push_back(cell);
  }
  summarize(rep);
  check_inconclusive(rep, noisy_rel, 0.25);
  return rep;
}

}  // namespace fracheat
