#pragma once

// Counter-based random streams: stream k of seed s is a SplitMix64 sequence
// whose starting state is a hash of (s, k), so path k draws the same numbers
// whatever thread runs it.

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>

namespace fracheat {

inline std::uint64_t splitmix64_mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

class Rng {
 public:
  using result_type = std::uint64_t;

  Rng(std::uint64_t seed, std::uint64_t stream)
      : state_(splitmix64_mix(splitmix64_mix(seed + 0x9E3779B97F4A7C15ULL) ^ (stream * 0xD1B54A32D192ED03ULL))) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return splitmix64_mix(state_);
  }

  /// Uniform on the open interval (0, 1).
  double uniform() { return (static_cast<double>((*this)() >> 11) + 0.5) * 0x1.0p-53; }

  double normal() { return normal_(*this); }

  /// Exp(1).
  double exponential() { return -std::log(uniform()); }

  double gamma(double shape) { return std::gamma_distribution<double>(shape, 1.0)(*this); }

 private:
  std::uint64_t state_;
  std::normal_distribution<double> normal_;
};

}  // namespace fracheat
