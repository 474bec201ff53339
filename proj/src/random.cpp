#include "qrbf/random.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qrbf {

BooleanFunction random_function(int n, std::uint64_t seed) {
  BooleanFunction f(n);
  CounterRng rng(seed, static_cast<std::uint64_t>(n));
  std::uint64_t word = 0;
  for (Point x = 0; x < f.size(); ++x) {
    if ((x & 63) == 0) word = rng();
    f.set(x, (word >> (x & 63)) & 1 ? -1 : 1);
  }
  return f;
}

MonteCarloEstimate estimate_from_sums(double sum, double sum_sq, std::uint64_t samples, std::uint64_t seed) {
  MonteCarloEstimate e;
  e.samples = samples;
  e.seed = seed;
  if (samples == 0) return e;
  const double m = sum / static_cast<double>(samples);
  double var = 0;
  if (samples > 1) var = std::max(0.0, (sum_sq - sum * m) / static_cast<double>(samples - 1));
  e.mean = m;
  e.std_error = std::sqrt(var / static_cast<double>(samples));
  e.ci_low = m - kZ99 * e.std_error;
  e.ci_high = m + kZ99 * e.std_error;
  return e;
}

std::string MonteCarloEstimate::to_string() const {
  std::ostringstream os;
  os.precision(12);
  os << mean << " +- " << std_error;
  return os.str();
}

}  // namespace qrbf
