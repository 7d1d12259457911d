#include "fracheat/montecarlo.hpp"

#include "fracheat/closed_kernels.hpp"
#include "fracheat/error.hpp"
#include "fracheat/stats.hpp"

#include <boost/math/tools/roots.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <numbers>
#include <thread>

namespace fracheat {

namespace {

using std::numbers::pi;
constexpr long long kBlock = 512;
constexpr long long kMaxWosSteps = 1000000;

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Point uniform_direction(int d, Rng& rng) {
  Point v(d);
  double n2 = 0.0;
  do {
    for (int i = 0; i < d; ++i) v(i) = rng.normal();
    n2 = v.squaredNorm();
  } while (n2 == 0.0);
  return v / std::sqrt(n2);
}

// Exit position of the unit ball started at its center: |Y|^{-2} ~ Beta(alpha/2, 1 - alpha/2).
Point centered_unit_exit(int d, double alpha, Rng& rng) {
  for (;;) {
    const double g1 = rng.gamma(alpha / 2.0);
    const double g2 = rng.gamma(1.0 - alpha / 2.0);
    const double b = g1 / (g1 + g2);
    if (b > 0.0 && b < 1.0) return uniform_direction(d, rng) / std::sqrt(b);
  }
}

// d = 1, unit interval, start u != 0: pick the side, then invert the one-sided tail.
double interval_exit_by_inversion(const StableParams& params, double u, Rng& rng) {
  const double right = ball_exit_side_tail(params, u, 1.0);
  const bool to_right = rng.uniform() < right;
  const double start = to_right ? u : -u;
  const double total = to_right ? right : 1.0 - right;
  const double target = rng.uniform() * total;
  const double a = params.alpha();
  // Tail mass beyond R = z^{-1/alpha} is increasing in z on (0, 1].
  auto f = [&](double z) {
    if (z <= 0.0) return -target;
    return ball_exit_side_tail(params, start, std::pow(z, -1.0 / a)) - target;
  };
  boost::uintmax_t iters = 200;
  const auto [lo, hi] = boost::math::tools::toms748_solve(f, 0.0, 1.0, -target, total - target,
                                                         boost::math::tools::eps_tolerance<double>(45), iters);
  const double z = std::clamp(0.5 * (lo + hi), 1e-300, 1.0);
  const double R = std::max(std::pow(z, -1.0 / a), std::nextafter(1.0, 2.0));
  return to_right ? R : -R;
}

double volume_of_ball(int d, double eps) { return std::pow(pi, d / 2.0) / std::tgamma(d / 2.0 + 1.0) * std::pow(eps, d); }

MCEstimate binomial_estimate(long long hits, long long n, const ExitBatch& batch) {
  MCEstimate e;
  e.n = n;
  e.seed = batch.seed;
  e.step = batch.step.h;
  e.wall_seconds = batch.wall_seconds;
  e.mean = static_cast<double>(hits) / static_cast<double>(n);
  e.std_err = std::sqrt(e.mean * (1.0 - e.mean) / static_cast<double>(n));
  return e;
}

long long used_paths(const ExitBatch& batch, long long n_use) {
  if (batch.size() == 0) throw InsufficientSamples("empty exit batch", 1);
  if (n_use <= 0) return batch.size();
  if (n_use > batch.size()) throw DomainError("requested more paths than the batch holds");
  return n_use;
}

}  // namespace

int resolve_workers(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("FRACHEAT_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_blocks(long long n, int workers, const std::function<void(long long, long long)>& fn) {
  const long long blocks = (n + kBlock - 1) / kBlock;
  const int threads = static_cast<int>(std::min<long long>(resolve_workers(workers), blocks));
  if (threads <= 1) {
    for (long long b = 0; b < blocks; ++b) fn(b * kBlock, std::min(n, (b + 1) * kBlock));
    return;
  }
  std::atomic<long long> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto run = [&] {
    for (;;) {
      const long long b = next.fetch_add(1);
      if (b >= blocks) return;
      try {
        fn(b * kBlock, std::min(n, (b + 1) * kBlock));
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
        next = blocks;
      }
    }
  };
  std::vector<std::thread> pool;
  for (int i = 0; i < threads; ++i) pool.emplace_back(run);
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

double sample_subordinator(double alpha, double dt, Rng& rng) {
  if (!(dt > 0.0)) throw DomainError("stable increments require dt > 0");
  const double b = alpha / 2.0;
  // Kanter's representation of the one-sided b-stable law.
  const double u = pi * rng.uniform();
  const double e = rng.exponential();
  const double s = std::sin(b * u) / std::pow(std::sin(u), 1.0 / b) * std::pow(std::sin((1.0 - b) * u) / e, (1.0 - b) / b);
  return std::pow(dt, 1.0 / b) * s;
}

Point sample_stable_increment(const StableParams& params, double dt, Rng& rng) {
  if (!(dt > 0.0)) throw DomainError("stable increments require dt > 0");
  const int d = params.d();
  Point z(d);
  for (int i = 0; i < d; ++i) z(i) = rng.normal();
  if (params.alpha() == 1.0) {
    double g = 0.0;
    while (g == 0.0) g = rng.normal();
    return z * (dt / std::abs(g));
  }
  return z * std::sqrt(2.0 * sample_subordinator(params.alpha(), dt, rng));
}

Point sample_ball_exit_position(const StableParams& params, const Point& center, double radius, const Point& x,
                                Rng& rng) {
  const int d = params.d();
  if (center.size() != d || x.size() != d) throw DomainError("point dimension does not match d");
  if (!(radius > 0.0)) throw DomainError("ball radius must be positive");
  const Point u = (x - center) / radius;
  const double s = u.norm();
  if (!(s < 1.0)) throw DomainError("sample_ball_exit_position requires x inside the open ball");
  const double a = params.alpha();
  if (s == 0.0) return center + radius * centered_unit_exit(d, a, rng);
  if (d == 1) {
    Point y(1);
    y(0) = interval_exit_by_inversion(params, u(0), rng);
    return center + radius * y;
  }
  const double bound = std::pow(1.0 - s * s, a / 2.0) * std::pow(1.0 - s, -d);
  if (bound <= 10.0) {
    // Rejection against the law from the center; the density ratio is
    // (1 - |u|^2)^{alpha/2} (|y| / |y - u|)^d <= bound.
    for (;;) {
      const Point y = centered_unit_exit(d, a, rng);
      const double ratio = std::pow(1.0 - s * s, a / 2.0) * std::pow(y.norm() / (y - u).norm(), d);
      if (rng.uniform() * bound < ratio) return center + radius * y;
    }
  }
  // Close to the sphere: walk on spheres inside the ball, exact by the strong Markov property.
  Point z = u;
  for (;;) {
    const Point y = z + (1.0 - z.norm()) * centered_unit_exit(d, a, rng);
    if (y.norm() > 1.0) return center + radius * y;
    z = y;
  }
}

WosSample sample_exit_position_wos(const DistanceFn& dist, const StableParams& params, const Point& x,
                                   double shrink, Rng& rng) {
  if (!(shrink > 0.0 && shrink <= 1.0)) throw DomainError("walk-on-spheres shrink factor must lie in (0, 1]");
  if (x.size() != params.d()) throw DomainError("point dimension does not match d");
  if (!(dist(x) > 0.0)) throw DomainError("walk on spheres requires a start point inside the region");
  WosSample out;
  Point z = x;
  for (;;) {
    const double delta = dist(z);
    if (!(delta > 0.0)) {
      out.position = z;
      return out;
    }
    if (++out.steps > kMaxWosSteps) {
      throw NonTermination("walk on spheres exceeded 10^6 steps; the start point or region is degenerate");
    }
    z += shrink * delta * centered_unit_exit(params.d(), params.alpha(), rng);
  }
}

WosSample sample_exit_position_wos(const Domain& domain, const StableParams& params, const Point& x,
                                   double shrink, Rng& rng) {
  if (domain.dim() != params.d()) throw DomainError("domain dimension does not match d");
  if (domain.complement_is_thin()) {
    throw UnsupportedRegime("walk on spheres cannot reach a complement with empty interior");
  }
  return sample_exit_position_wos([&](const Point& p) { return dist_to_complement(domain, p); }, params, x, shrink,
                                  rng);
}

ExitSample simulate_exit(const Domain& domain, const StableParams& params, const Point& x, const StepPolicy& step,
                         double horizon, Rng& rng, std::span<const double> checkpoints, std::vector<Point>* positions) {
  if (!(step.h > 0.0)) throw DomainError("time step must be positive");
  if (!(horizon > 0.0)) throw DomainError("horizon must be positive");
  if (!(step.clock > 0.0)) throw DomainError("clock factor must be positive");
  const double a = params.alpha();
  const bool thin = domain.complement_is_thin();
  const double slab = thin ? step.slab_factor * std::pow(step.h, 1.0 / a) : 0.0;
  double delta = dist_to_complement(domain, x);
  if (!(delta > slab)) throw DomainError("simulate_exit requires the start point inside D");

  Point pos = x;
  double time = 0.0;
  long long k = 0;  // fixed-grid index, keeps grid times exact
  std::size_t next_mark = 0;
  while (next_mark < checkpoints.size() && checkpoints[next_mark] <= 0.0) {
    if (positions) positions->push_back(pos);
    ++next_mark;
  }
  for (;;) {
    double target;
    bool on_grid = false;
    if (step.adaptive > 0.0) {
      target = time + std::max(step.h, step.adaptive * std::pow(delta, a));
    } else {
      target = static_cast<double>(k + 1) * step.h;
      on_grid = true;
    }
    if (next_mark < checkpoints.size() && checkpoints[next_mark] < target) {
      target = checkpoints[next_mark];
      on_grid = false;
    }
    if (horizon < target) {
      target = horizon;
      on_grid = false;
    }
    if (step.adaptive == 0.0 && std::abs(target - static_cast<double>(k + 1) * step.h) <= 1e-12 * target) on_grid = true;
    pos += sample_stable_increment(params, (target - time) * step.clock, rng);
    time = target;
    if (on_grid) ++k;
    delta = dist_to_complement(domain, pos);
    if (!(delta > slab)) return {time, pos, false};
    while (next_mark < checkpoints.size() && checkpoints[next_mark] <= time) {
      if (positions) positions->push_back(pos);
      ++next_mark;
    }
    if (time >= horizon) return {horizon, pos, true};
  }
}

ExitBatch simulate_exit_batch(const Domain& domain, const StableParams& params, const Point& x, double horizon,
                              const McConfig& cfg, std::vector<double> checkpoints) {
  if (cfg.n <= 0) throw DomainError("sample count must be positive");
  if (domain.dim() != params.d() || x.size() != params.d()) throw DomainError("dimension mismatch");
  std::sort(checkpoints.begin(), checkpoints.end());
  for (double c : checkpoints) {
    if (!(c > 0.0 && c <= horizon)) throw DomainError("checkpoints must lie in (0, horizon]");
  }
  const auto start = std::chrono::steady_clock::now();
  ExitBatch batch;
  batch.start = x;
  batch.horizon = horizon;
  batch.checkpoints = checkpoints;
  batch.seed = cfg.seed;
  batch.step = cfg.step;
  batch.samples.resize(static_cast<std::size_t>(cfg.n));
  const std::size_t k = checkpoints.size();
  batch.checkpoint_positions.assign(static_cast<std::size_t>(cfg.n) * k, Point::Zero(params.d()));
  parallel_blocks(cfg.n, cfg.workers, [&](long long begin, long long end) {
    std::vector<Point> marks;
    for (long long i = begin; i < end; ++i) {
      Rng rng(cfg.seed, static_cast<std::uint64_t>(i));
      marks.clear();
      batch.samples[static_cast<std::size_t>(i)] =
          simulate_exit(domain, params, x, cfg.step, horizon, rng, checkpoints, k ? &marks : nullptr);
      std::copy(marks.begin(), marks.end(), batch.checkpoint_positions.begin() + static_cast<std::ptrdiff_t>(i * k));
    }
  });
  batch.wall_seconds = seconds_since(start);
  return batch;
}

MCEstimate survival_from_batch(const ExitBatch& batch, double t, long long n_use) {
  const long long n = used_paths(batch, n_use);
  if (!(t > 0.0) || t > batch.horizon * (1.0 + 1e-12)) throw DomainError("survival time must lie in (0, horizon]");
  long long alive = 0;
  for (long long i = 0; i < n; ++i) {
    const auto& s = batch.samples[static_cast<std::size_t>(i)];
    if (s.survived || s.tau > t) ++alive;
  }
  return binomial_estimate(alive, n, batch);
}

MCEstimate heat_kernel_from_batch(const ExitBatch& batch, const StableParams& params, const Point& y, double t,
                                  long long n_use) {
  const long long n = used_paths(batch, n_use);
  if (!(t > 0.0) || t > batch.horizon * (1.0 + 1e-12)) throw DomainError("heat kernel time must lie in (0, horizon]");
  const double free = free_density_value(params, t, (y - batch.start).norm());
  std::vector<double> g(static_cast<std::size_t>(n), free);
  for (long long i = 0; i < n; ++i) {
    const auto& s = batch.samples[static_cast<std::size_t>(i)];
    if (!s.survived && s.tau < t) g[static_cast<std::size_t>(i)] -= free_density_value(params, t - s.tau, (s.position - y).norm());
  }
  const MeanStderr ms = mean_stderr(g);
  MCEstimate e;
  e.mean = ms.mean;
  e.std_err = ms.std_err;
  e.n = n;
  e.seed = batch.seed;
  e.step = batch.step.h;
  e.wall_seconds = batch.wall_seconds;
  if (e.mean < -3.0 * e.std_err) e.diagnostic = "negative heat kernel estimate beyond 3 stderr";
  return e;
}

MCEstimate occupation_from_batch(const ExitBatch& batch, const Point& y, double eps, std::size_t checkpoint,
                                 long long n_use) {
  const long long n = used_paths(batch, n_use);
  if (checkpoint >= batch.checkpoints.size()) throw DomainError("checkpoint index out of range");
  if (!(eps > 0.0)) throw DomainError("occupation radius must be positive");
  const double c = batch.checkpoints[checkpoint];
  const std::size_t k = batch.checkpoints.size();
  long long hits = 0;
  for (long long i = 0; i < n; ++i) {
    const auto& s = batch.samples[static_cast<std::size_t>(i)];
    if (!(s.survived || s.tau > c)) continue;
    if ((batch.checkpoint_positions[static_cast<std::size_t>(i) * k + checkpoint] - y).norm() < eps) ++hits;
  }
  MCEstimate e = binomial_estimate(hits, n, batch);
  const double vol = volume_of_ball(static_cast<int>(y.size()), eps);
  e.mean /= vol;
  e.std_err /= vol;
  return e;
}

MCEstimate estimate_survival(const Domain& domain, const StableParams& params, const Point& x, double t,
                             const McConfig& cfg) {
  return survival_from_batch(simulate_exit_batch(domain, params, x, t, cfg), t);
}

MCEstimate estimate_heat_kernel(const Domain& domain, const StableParams& params, const Point& x, const Point& y,
                                double t, const McConfig& cfg) {
  if (!contains(domain, y)) throw DomainError("estimate_heat_kernel requires y inside D");
  return heat_kernel_from_batch(simulate_exit_batch(domain, params, x, t, cfg), params, y, t);
}

MCEstimate estimate_heat_kernel_occupation(const Domain& domain, const StableParams& params, const Point& x,
                                           const Point& y, double t, double eps, const McConfig& cfg) {
  if (!contains(domain, y)) throw DomainError("estimate_heat_kernel_occupation requires y inside D");
  const ExitBatch batch = simulate_exit_batch(domain, params, x, t, cfg, {t});
  MCEstimate e = occupation_from_batch(batch, y, eps, 0);
  // Curvature of p_D(t, x, .) across the averaging ball, from the defining formula.
  const MCEstimate mid = heat_kernel_from_batch(batch, params, y, t);
  double spread = 0.0;
  for (int i = 0; i < params.d(); ++i) {
    Point dy = Point::Zero(params.d());
    dy(i) = eps;
    if (!contains(domain, y + dy) || !contains(domain, y - dy)) continue;
    const double plus = heat_kernel_from_batch(batch, params, y + dy, t).mean;
    const double minus = heat_kernel_from_batch(batch, params, y - dy, t).mean;
    spread = std::max(spread, std::abs(0.5 * (plus + minus) - mid.mean));
  }
  if (spread > 3.0 * mid.std_err) e.diagnostic = "occupation radius too large for the local curvature of p_D";
  return e;
}

namespace {

// Survival counts per time on contiguous path groups, for jackknife errors.
struct GroupedSurvival {
  std::vector<double> times;
  std::vector<std::vector<long long>> alive;  // [group][time]
  std::vector<long long> group_size;
};

GroupedSurvival group_survival(const ExitBatch& batch, const std::vector<double>& times, int groups) {
  GroupedSurvival g;
  g.times = times;
  const long long n = batch.size();
  g.alive.assign(static_cast<std::size_t>(groups), std::vector<long long>(times.size(), 0));
  g.group_size.assign(static_cast<std::size_t>(groups), 0);
  for (long long i = 0; i < n; ++i) {
    const auto gi = static_cast<std::size_t>(i * groups / n);
    ++g.group_size[gi];
    const auto& s = batch.samples[static_cast<std::size_t>(i)];
    for (std::size_t j = 0; j < times.size(); ++j) {
      if (s.survived || s.tau > times[j]) ++g.alive[gi][j];
    }
  }
  return g;
}

using SlopeFn = std::function<double(const std::vector<double>& t, const std::vector<double>& s)>;

// Statistic from all groups except `skip` (-1 keeps all), restricted to times [lo, hi).
double grouped_statistic(const GroupedSurvival& g, int skip, std::size_t lo, std::size_t hi, const SlopeFn& fn) {
  std::vector<double> t, s;
  for (std::size_t j = lo; j < hi; ++j) {
    long long alive = 0, total = 0;
    for (std::size_t gi = 0; gi < g.alive.size(); ++gi) {
      if (static_cast<int>(gi) == skip) continue;
      alive += g.alive[gi][j];
      total += g.group_size[gi];
    }
    if (alive == 0) {
      throw InsufficientSamples("no surviving paths at t = " + std::to_string(g.times[j]), total * 10);
    }
    t.push_back(g.times[j]);
    s.push_back(static_cast<double>(alive) / static_cast<double>(total));
  }
  return fn(t, s);
}

MCEstimate jackknife(const GroupedSurvival& g, std::size_t lo, std::size_t hi, const SlopeFn& fn) {
  const int groups = static_cast<int>(g.alive.size());
  MCEstimate e;
  e.mean = grouped_statistic(g, -1, lo, hi, fn);
  double mean_loo = 0.0;
  std::vector<double> loo(static_cast<std::size_t>(groups));
  for (int k = 0; k < groups; ++k) {
    loo[static_cast<std::size_t>(k)] = grouped_statistic(g, k, lo, hi, fn);
    mean_loo += loo[static_cast<std::size_t>(k)];
  }
  mean_loo /= groups;
  double ss = 0.0;
  for (double v : loo) ss += (v - mean_loo) * (v - mean_loo);
  e.std_err = std::sqrt((groups - 1.0) / groups * ss);
  return e;
}

DecayFit decay_fit(const ExitBatch& batch, std::pair<double, double> window, int points, const SlopeFn& fn) {
  if (points < 4) throw DomainError("decay fits need at least 4 time points");
  DecayFit fit;
  const double l1 = std::log(window.first), l2 = std::log(window.second);
  for (int j = 0; j < points; ++j) fit.times.push_back(std::exp(l1 + (l2 - l1) * j / (points - 1)));
  fit.times.back() = window.second;
  const GroupedSurvival g = group_survival(batch, fit.times, 20);
  for (double t : fit.times) fit.survival.push_back(survival_from_batch(batch, t).mean);
  const auto np = static_cast<std::size_t>(points);
  const std::size_t half = (np + 1) / 2;
  fit.estimate = jackknife(g, 0, np, fn);
  fit.first_half = jackknife(g, 0, half, fn);
  fit.second_half = jackknife(g, half, np, fn);
  for (MCEstimate* e : {&fit.estimate, &fit.first_half, &fit.second_half}) {
    e->n = batch.size();
    e->seed = batch.seed;
    e->step = batch.step.h;
    e->wall_seconds = batch.wall_seconds;
  }
  const double diff = std::abs(fit.first_half.mean - fit.second_half.mean);
  fit.halves_agree = diff <= 3.0 * std::hypot(fit.first_half.std_err, fit.second_half.std_err);
  return fit;
}

void check_window(std::pair<double, double> window) {
  if (!(window.first > 0.0 && window.second > window.first)) throw DomainError("fit window must satisfy 0 < t1 < t2");
}

}  // namespace

std::pair<double, double> default_lambda1_window(const StableParams& params, double r) {
  const double scale = std::pow(r, params.alpha());
  return {scale, 4.0 * scale};
}

DecayFit estimate_lambda1(const StableParams& params, double r, std::pair<double, double> window, const McConfig& cfg,
                          int points) {
  check_window(window);
  if (!(r > 0.0)) throw DomainError("ball radius must be positive");
  const double scale = std::pow(r, params.alpha());
  if (window.first < scale * (1.0 - 1e-12)) throw DomainError("lambda1 fit window must start at t1 >= r^alpha");
  const Domain ball = Domain::ball(Point::Zero(params.d()), r);
  const ExitBatch batch = simulate_exit_batch(ball, params, Point::Zero(params.d()), window.second, cfg);
  const SlopeFn fn = [scale](const std::vector<double>& t, const std::vector<double>& s) {
    std::vector<double> ls(s.size());
    std::transform(s.begin(), s.end(), ls.begin(), [](double v) { return std::log(v); });
    return -fit_line(t, ls).slope * scale;
  };
  DecayFit fit = decay_fit(batch, window, points, fn);
  if (!(fit.estimate.mean > 0.0)) throw FitFailure("lambda1 fit produced a non-positive decay rate");
  return fit;
}

DecayFit estimate_beta(const StableParams& params, const Domain& domain, const Point& x,
                       std::pair<double, double> window, const McConfig& cfg, int points) {
  check_window(window);
  if (!(dist_to_complement(domain, x) > 0.0)) throw DomainError("estimate_beta requires an interior probe point");
  const double a = params.alpha();
  const ExitBatch batch = simulate_exit_batch(domain, params, x, window.second, cfg);
  const SlopeFn fn = [a](const std::vector<double>& t, const std::vector<double>& s) {
    std::vector<double> lt(t.size()), ls(s.size());
    std::transform(t.begin(), t.end(), lt.begin(), [](double v) { return std::log(v); });
    std::transform(s.begin(), s.end(), ls.begin(), [](double v) { return std::log(v); });
    return -a * fit_line(lt, ls).slope;
  };
  DecayFit fit = decay_fit(batch, window, points, fn);
  if (fit.estimate.mean < 0.0 || fit.estimate.mean >= a) {
    fit.estimate.diagnostic = "beta estimate " + std::to_string(fit.estimate.mean) + " outside [0, alpha); clamped";
    fit.estimate.mean = std::clamp(fit.estimate.mean, 0.0, std::nextafter(a, 0.0));
  }
  return fit;
}

MCEstimate bhp_cross_ratio(const StableParams& params, const Domain& domain, const Point& x0, double r,
                           const Point& x1, const Point& x2, const RegionFn& target1, const RegionFn& target2,
                           long long n, std::uint64_t seed, int workers) {
  if (n <= 0) throw DomainError("sample count must be positive");
  if (!(r > 0.0)) throw DomainError("BHP radius must be positive");
  const auto start = std::chrono::steady_clock::now();
  const DistanceFn dist_u = [&](const Point& z) {
    return std::min(dist_to_complement(domain, z), std::max(0.0, r - (z - x0).norm()));
  };
  struct Counts {
    long long t1 = 0, t2 = 0;
  };
  auto run = [&](const Point& x, std::uint64_t stream_seed) {
    std::vector<signed char> hit(static_cast<std::size_t>(n), 0);
    parallel_blocks(n, workers, [&](long long begin, long long end) {
      for (long long i = begin; i < end; ++i) {
        Rng rng(stream_seed, static_cast<std::uint64_t>(i));
        const Point y = sample_exit_position_wos(dist_u, params, x, 1.0, rng).position;
        hit[static_cast<std::size_t>(i)] = static_cast<signed char>((target1(y) ? 1 : 0) | (target2(y) ? 2 : 0));
      }
    });
    Counts c;
    for (signed char h : hit) {
      if (h & 1) ++c.t1;
      if (h & 2) ++c.t2;
    }
    return c;
  };
  const Counts c1 = run(x1, seed);
  const Counts c2 = (x1 == x2) ? c1 : run(x2, splitmix64_mix(seed ^ 0xB4B82E4A51D5E3A7ULL));
  const long long least = std::min({c1.t1, c1.t2, c2.t1, c2.t2});
  if (least == 0) {
    throw InsufficientSamples("a BHP target was never hit; increase n", n * 20);
  }
  const double nd = static_cast<double>(n);
  const double a1 = c1.t1 / nd, a2 = c1.t2 / nd, b1 = c2.t1 / nd, b2 = c2.t2 / nd;
  MCEstimate e;
  e.mean = (a1 * b2) / (a2 * b1);
  // Delta method on the log; the two probabilities of one start are multinomially coupled.
  double var_log = 0.0;
  if (!(x1 == x2)) var_log = (1.0 / c1.t1 + 1.0 / c1.t2) + (1.0 / c2.t1 + 1.0 / c2.t2);
  e.std_err = e.mean * std::sqrt(var_log);
  e.n = n;
  e.seed = seed;
  e.wall_seconds = seconds_since(start);
  if (least < 100) e.diagnostic = "fewer than 100 hits in a target cell";
  return e;
}

}  // namespace fracheat
