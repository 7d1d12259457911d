#pragma once

#include <stdexcept>
#include <string>

namespace fracheat {

/// A precondition on an argument was violated (t <= 0, point outside a ball, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The requested formula does not apply to the given (d, alpha) regime.
class UnsupportedRegime : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A value needed by a profile (lambda_1, cone exponent) was not supplied.
class MissingParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A least-squares decay fit produced an unusable slope.
class FitFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Monte Carlo counts too small for the requested statistic.
class InsufficientSamples : public std::runtime_error {
 public:
  InsufficientSamples(const std::string& what, long long required_n)
      : std::runtime_error(what), required_n_(required_n) {}
  long long required_n() const noexcept { return required_n_; }

 private:
  long long required_n_;
};

/// Too many grid cells were dominated by Monte Carlo noise.
class InconclusiveReport : public std::runtime_error {
 public:
  InconclusiveReport(const std::string& what, long long required_n)
      : std::runtime_error(what), required_n_(required_n) {}
  long long required_n() const noexcept { return required_n_; }

 private:
  long long required_n_;
};

/// Walk-on-spheres exceeded its step budget.
class NonTermination : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fracheat
