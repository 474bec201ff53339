#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "qrbf/errors.hpp"
#include "qrbf/random.hpp"
#include "qrbf/rational.hpp"

namespace qrbf {

enum class Mode { exact, montecarlo, automatic };

inline constexpr std::uint64_t kDefaultSamples = 100'000;

struct SamplingOptions {
  Mode mode = Mode::automatic;
  std::uint64_t budget = kDefaultBudget;
  std::uint64_t seed = 0;
  std::uint64_t samples = kDefaultSamples;
};

/// Either an exact value or a sampled one with its uncertainty.
using Estimate = std::variant<Rational, MonteCarloEstimate>;

inline bool is_exact(const Estimate& e) { return std::holds_alternative<Rational>(e); }

inline double estimate_value(const Estimate& e) {
  if (const auto* r = std::get_if<Rational>(&e)) return r->to_double();
  return std::get<MonteCarloEstimate>(e).mean;
}

inline std::string estimate_string(const Estimate& e) {
  if (const auto* r = std::get_if<Rational>(&e)) return r->to_string();
  return std::get<MonteCarloEstimate>(e).to_string();
}

}  // namespace qrbf
