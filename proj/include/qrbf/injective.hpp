#pragma once

// Expectations over injective maps phi: {0..m-1} -> F_2^n of a product of
// per-slot indicators, prod_i slot_i(phi(i)).
//
// Both the fixed-left bipartite homomorphism density and the rainbow
// embedding density have this shape: every right vertex (or every edge
// colour) contributes an indicator that depends only on its own image, and
// the only coupling between slots is injectivity.

#include <cstdint>
#include <vector>

#include "qrbf/estimate.hpp"

namespace qrbf {

struct SlotTables {
  int n = 0;
  /// slots[i][c] is 0 or 1 for every c in [0, 2^n).
  std::vector<std::vector<std::uint8_t>> slots;
};

/// Number of injective maps, (2^n)_m; returns 0 when it does not fit in int64.
std::int64_t injective_map_count(int n, std::size_t m);

/// Work estimate for injective_mean_exact.
std::uint64_t injective_exact_cost(int n, std::size_t m);

/// Exact mean by Moebius inversion over set partitions of the slots:
///   sum_injective prod g_i = sum_pi mu(pi) prod_{B in pi} #{c : g_i(c)=1 for all i in B},
/// with mu(pi) = prod_B (-1)^(|B|-1) (|B|-1)!.
Rational injective_mean_exact(const SlotTables& tables);

/// Exact mean by walking every injective map; the definitional reference.
Rational injective_mean_enumerated(const SlotTables& tables, std::uint64_t budget = kDefaultBudget);

/// Uniform injective maps drawn by rejection; sample i uses CounterRng(seed, i).
MonteCarloEstimate injective_mean_sampled(const SlotTables& tables, std::uint64_t samples, std::uint64_t seed);

/// Cost threshold under which Mode::automatic evaluates exactly.
inline constexpr std::uint64_t kExactCutoff = 10'000'000;

Estimate injective_mean(const SlotTables& tables, const SamplingOptions& options);

}  // namespace qrbf
