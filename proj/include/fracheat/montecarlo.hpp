#pragma once

// Samplers for the isotropic stable process and Monte Carlo estimators of
// survival probabilities, exit laws, killed heat kernels, lambda_1 and cone exponents.

#include "fracheat/geometry.hpp"
#include "fracheat/rng.hpp"
#include "fracheat/stable_core.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace fracheat {

struct MCEstimate {
  double mean = 0.0;
  double std_err = 0.0;
  long long n = 0;
  std::uint64_t seed = 0;
  double step = 0.0;  ///< time step, 0 for step-free estimators
  double wall_seconds = 0.0;
  std::string diagnostic;
};

struct ExitSample {
  double tau = 0.0;  ///< equals the horizon when censored
  Point position;
  bool survived = false;
};

struct StepPolicy {
  /// Grid step. With adaptive > 0 this is the smallest step.
  double h = 1.0 / 256.0;
  /// Step = max(h, adaptive * delta_D(X)^alpha); 0 keeps the fixed grid.
  double adaptive = 0.0;
  /// Multiplies the Levy density, i.e. runs the process at speed `clock`.
  double clock = 1.0;
  /// Complements with empty interior: exit once delta_D <= slab_factor * h^{1/alpha}.
  double slab_factor = 1.0;
};

struct McConfig {
  long long n = 100000;
  std::uint64_t seed = 1;
  int workers = 0;  ///< 0: FRACHEAT_WORKERS, else the hardware concurrency
  StepPolicy step;
};

/// Worker count after applying the environment default.
int resolve_workers(int requested);

/// Runs fn(begin, end) over fixed blocks of [0, n) on `workers` threads.
void parallel_blocks(long long n, int workers, const std::function<void(long long, long long)>& fn);

/// One-sided alpha/2-stable variable with E exp(-lambda S) = exp(-dt lambda^{alpha/2}).
double sample_subordinator(double alpha, double dt, Rng& rng);

/// Draw from p_dt: a Gaussian vector with per-coordinate variance 2S.
Point sample_stable_increment(const StableParams& params, double dt, Rng& rng);

/// Exact draw from the exit law of B(center, radius) started at x.
Point sample_ball_exit_position(const StableParams& params, const Point& center, double radius, const Point& x,
                                Rng& rng);

struct WosSample {
  Point position;
  long long steps = 0;
};

using DistanceFn = std::function<double(const Point&)>;

/// Walk on spheres: exact draw of X_{tau_D}. Throws NonTermination after 10^6 steps.
WosSample sample_exit_position_wos(const Domain& domain, const StableParams& params, const Point& x,
                                   double shrink, Rng& rng);
/// Same, for a region given by its distance-to-complement function.
WosSample sample_exit_position_wos(const DistanceFn& dist, const StableParams& params, const Point& x,
                                   double shrink, Rng& rng);

/// One path on the time grid, killed at the first grid time outside D or censored at
/// the horizon. When `positions` is given, the positions at the checkpoint times the
/// path survives through are appended to it.
ExitSample simulate_exit(const Domain& domain, const StableParams& params, const Point& x, const StepPolicy& step,
                         double horizon, Rng& rng, std::span<const double> checkpoints = {},
                         std::vector<Point>* positions = nullptr);

/// n independent exit samples from x, path k on stream k of the seed.
struct ExitBatch {
  Point start;
  double horizon = 0.0;
  std::vector<double> checkpoints;
  std::uint64_t seed = 0;
  StepPolicy step;
  std::vector<ExitSample> samples;
  /// Row-major (path, checkpoint) positions; meaningful when the path survived the checkpoint.
  std::vector<Point> checkpoint_positions;
  double wall_seconds = 0.0;

  long long size() const noexcept { return static_cast<long long>(samples.size()); }
};

ExitBatch simulate_exit_batch(const Domain& domain, const StableParams& params, const Point& x, double horizon,
                              const McConfig& cfg, std::vector<double> checkpoints = {});

/// The estimators below use the first n_use paths of a batch (all when n_use <= 0).
MCEstimate survival_from_batch(const ExitBatch& batch, double t, long long n_use = 0);

/// p(t,x,y) - E^x[tau_D < t; p(t - tau_D, X_{tau_D}, y)].
MCEstimate heat_kernel_from_batch(const ExitBatch& batch, const StableParams& params, const Point& y, double t,
                                  long long n_use = 0);

/// P^x(tau_D > t, X_t in B(y, eps)) / |B(y, eps)| at the checkpoint with index k.
MCEstimate occupation_from_batch(const ExitBatch& batch, const Point& y, double eps, std::size_t checkpoint,
                                 long long n_use = 0);

MCEstimate estimate_survival(const Domain& domain, const StableParams& params, const Point& x, double t,
                             const McConfig& cfg);

MCEstimate estimate_heat_kernel(const Domain& domain, const StableParams& params, const Point& x, const Point& y,
                                double t, const McConfig& cfg);

/// Occupation-density estimator of p_D(t,x,y). The diagnostic notes when the defining-formula
/// estimator changes across B(y, eps) by more than its own noise.
MCEstimate estimate_heat_kernel_occupation(const Domain& domain, const StableParams& params, const Point& x,
                                           const Point& y, double t, double eps, const McConfig& cfg);

/// Log-survival decay fit over log-spaced times.
struct DecayFit {
  MCEstimate estimate;
  MCEstimate first_half;
  MCEstimate second_half;
  bool halves_agree = false;  ///< |first - second| <= 3 combined stderr
  std::vector<double> times;
  std::vector<double> survival;
};

/// Default lambda_1 fit window [1, 4] r^alpha.
std::pair<double, double> default_lambda1_window(const StableParams& params, double r);

/// lambda_1 of the unit ball from the exponential decay of P^0(tau_{B(0,r)} > t), scaled by r^alpha.
DecayFit estimate_lambda1(const StableParams& params, double r, std::pair<double, double> window,
                          const McConfig& cfg, int points = 9);

/// beta = -alpha d log P^x(tau > t) / d log t over the window; for cones and other
/// scale-invariant domains.
DecayFit estimate_beta(const StableParams& params, const Domain& domain, const Point& x,
                       std::pair<double, double> window, const McConfig& cfg, int points = 9);

using RegionFn = std::function<bool(const Point&)>;

/// Cross-ratio P^{x1}(T1) P^{x2}(T2) / (P^{x1}(T2) P^{x2}(T1)) of exit positions from
/// U = D intersect B(x0, r), by walk on spheres.
MCEstimate bhp_cross_ratio(const StableParams& params, const Domain& domain, const Point& x0, double r,
                           const Point& x1, const Point& x2, const RegionFn& target1, const RegionFn& target2,
                           long long n, std::uint64_t seed, int workers = 0);

}  // namespace fracheat
