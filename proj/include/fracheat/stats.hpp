#pragma once

// Small statistics helpers shared by the estimators, the harness and the tests.

#include <functional>
#include <span>
#include <vector>

namespace fracheat {

/// sup |F_n - F| for the empirical distribution of the samples.
double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf);

/// sup |F_n - G_m| between two empirical distributions.
double ks_two_sample(std::vector<double> a, std::vector<double> b);

/// Linear interpolation quantile, q in [0, 1]. Empty input gives NaN.
double quantile(std::vector<double> values, double q);

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
};

/// Weighted least squares y ~ intercept + slope x; weights default to 1.
LineFit fit_line(std::span<const double> x, std::span<const double> y, std::span<const double> w = {});

struct MeanStderr {
  double mean = 0.0;
  double std_err = 0.0;
};

/// Sample mean and standard deviation / sqrt(n).
MeanStderr mean_stderr(std::span<const double> values);

}  // namespace fracheat
