#pragma once

// Calibration file for lambda_1 and cone exponents: a JSON document
//   {"entries": [{"kind": "lambda1", "d": 2, "alpha": 1.5, "domain": "...", "value": ..., ...}]}
// keyed by (kind, d, alpha, domain descriptor) with the provenance of each value.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fracheat {

struct CalibrationEntry {
  std::string kind;  ///< lambda1 | beta
  int d = 1;
  double alpha = 1.0;
  std::string domain;
  double value = 0.0;
  double std_err = 0.0;
  std::uint64_t seed = 0;
  long long n = 0;
  double window_lo = 0.0;
  double window_hi = 0.0;
  double scale = 1.0;  ///< ball radius of a lambda1 run
  double h = 0.0;
  double adaptive = 0.0;
  double first_half = 0.0;
  double second_half = 0.0;
};

/// Missing files read as empty.
std::vector<CalibrationEntry> load_calibration(const std::string& path);

/// Latest entry for the key.
std::optional<CalibrationEntry> find_calibration(const std::vector<CalibrationEntry>& entries, const std::string& kind,
                                                 int d, double alpha, const std::string& domain);

/// Entry with the same key and the same provenance (seed, n, window, scale, step).
std::optional<CalibrationEntry> find_same_run(const std::vector<CalibrationEntry>& entries,
                                              const CalibrationEntry& run);

void append_calibration(const std::string& path, const CalibrationEntry& entry);

}  // namespace fracheat
