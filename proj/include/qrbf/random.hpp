#pragma once

#include <cstdint>
#include <string>

#include "qrbf/core.hpp"

namespace qrbf {

/// SplitMix64 finalizer; used as a counter-based generator so that sample i
/// depends only on (seed, i), never on how samples are batched.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Deterministic stream keyed by (seed, index).
class CounterRng {
 public:
  using result_type = std::uint64_t;

  CounterRng(std::uint64_t seed, std::uint64_t index) noexcept
      : key_(mix64(seed ^ mix64(index + 0x632be59bd9b4e019ULL))) {}

  std::uint64_t operator()() noexcept { return mix64(key_ + 0x9e3779b97f4a7c15ULL * ++counter_); }

  /// Uniform in [0, bound) by rejection; bound must be nonzero.
  std::uint64_t below(std::uint64_t bound) noexcept {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t r;
    do r = (*this)();
    while (r >= limit);
    return r % bound;
  }

  double uniform01() noexcept { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  static constexpr std::uint64_t min() noexcept { return 0; }
  static constexpr std::uint64_t max() noexcept { return ~std::uint64_t{0}; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

/// Uniformly random Boolean function, reproducible from (n, seed).
BooleanFunction random_function(int n, std::uint64_t seed);

/// Mean of N sampled values with its standard error and a two-sided 99% interval.
struct MonteCarloEstimate {
  double mean = 0;
  double std_error = 0;
  double ci_low = 0;
  double ci_high = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;

  std::string to_string() const;
};

/// z-quantile for a two-sided 99% normal interval.
inline constexpr double kZ99 = 2.5758293035489004;

MonteCarloEstimate estimate_from_sums(double sum, double sum_sq, std::uint64_t samples, std::uint64_t seed);

}  // namespace qrbf
