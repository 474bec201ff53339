#include "qrbf/injective.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>
#include <string>

namespace qrbf {
namespace {

void validate(const SlotTables& t) {
  if (t.n < 0 || t.n > BooleanFunction::kMaxDimension) throw std::invalid_argument("slot table dimension out of range");
  if (t.slots.size() > 20) throw std::invalid_argument("too many slots for injective expectation");
  const std::size_t size = std::size_t{1} << t.n;
  for (const auto& s : t.slots)
    if (s.size() != size) throw std::invalid_argument("slot table has wrong length");
  if (t.slots.size() > size) throw std::invalid_argument("more slots than points: no injective map exists");
}

std::uint64_t bell_number(std::size_t m) {
  // Bell triangle; m is small.
  std::vector<std::uint64_t> row{1};
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<std::uint64_t> next{row.back()};
    for (auto v : row) next.push_back(next.back() + v);
    row = std::move(next);
  }
  return row.front();
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

}  // namespace

std::int64_t injective_map_count(int n, std::size_t m) {
  __int128 total = 1;
  const __int128 points = static_cast<__int128>(1) << n;
  for (std::size_t i = 0; i < m; ++i) {
    total *= points - static_cast<__int128>(i);
    if (total > std::numeric_limits<std::int64_t>::max()) return 0;
  }
  return static_cast<std::int64_t>(total);
}

std::uint64_t injective_exact_cost(int n, std::size_t m) {
  if (injective_map_count(n, m) == 0) return std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t scan = saturating_mul(std::uint64_t{1} << n, m + 1);
  return scan + saturating_mul(bell_number(m), m + 1) + saturating_mul(std::uint64_t{1} << m, m);
}

Rational injective_mean_exact(const SlotTables& t) {
  validate(t);
  const std::size_t m = t.slots.size();
  if (m == 0) return Rational(1);
  const std::int64_t denominator = injective_map_count(t.n, m);
  if (denominator == 0) throw BudgetExceeded("exact injective mean", std::numeric_limits<std::uint64_t>::max(), 0);

  // hist[M] = #{c : {i : g_i(c)=1} = M}; common[B] = #{c : B subset of that set}.
  const std::size_t subsets = std::size_t{1} << m;
  std::vector<std::int64_t> common(subsets, 0);
  for (Point c = 0; c < (Point{1} << t.n); ++c) {
    std::size_t mask = 0;
    for (std::size_t i = 0; i < m; ++i)
      if (t.slots[i][c]) mask |= std::size_t{1} << i;
    ++common[mask];
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t mask = 0; mask < subsets; ++mask)
      if (!(mask & (std::size_t{1} << i))) common[mask] += common[mask | (std::size_t{1} << i)];

  // Walk set partitions as restricted growth strings.
  std::vector<std::size_t> block_of(m, 0);
  std::vector<std::size_t> block_mask(m, 0);
  __int128 total = 0;
  while (true) {
    std::size_t blocks = 0;
    std::fill(block_mask.begin(), block_mask.end(), 0);
    for (std::size_t i = 0; i < m; ++i) {
      block_mask[block_of[i]] |= std::size_t{1} << i;
      blocks = std::max(blocks, block_of[i] + 1);
    }
    __int128 term = 1;
    for (std::size_t b = 0; b < blocks; ++b) {
      const int size = std::popcount(block_mask[b]);
      __int128 mu = (size % 2 == 1) ? 1 : -1;
      for (int j = 2; j < size; ++j) mu *= j;
      term *= mu * common[block_mask[b]];
    }
    total += term;

    // Next restricted growth string.
    bool advanced = false;
    for (std::size_t i = m; i-- > 1;) {
      std::size_t prefix_max = 0;
      for (std::size_t j = 0; j < i; ++j) prefix_max = std::max(prefix_max, block_of[j]);
      if (block_of[i] <= prefix_max) {
        ++block_of[i];
        for (std::size_t j = i + 1; j < m; ++j) block_of[j] = 0;
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
  return Rational(static_cast<std::int64_t>(total), denominator);
}

Rational injective_mean_enumerated(const SlotTables& t, std::uint64_t budget) {
  validate(t);
  const std::size_t m = t.slots.size();
  const std::int64_t maps = injective_map_count(t.n, m);
  check_budget("injective enumeration", maps == 0 ? std::numeric_limits<std::uint64_t>::max()
                                                  : static_cast<std::uint64_t>(maps),
               budget);
  const Point points = Point{1} << t.n;
  std::vector<Point> chosen(m);
  std::int64_t hits = 0;
  // Depth-first over partial injections, pruning on a zero indicator.
  auto walk = [&](auto&& self, std::size_t depth) -> void {
    if (depth == m) {
      ++hits;
      return;
    }
    for (Point c = 0; c < points; ++c) {
      bool used = false;
      for (std::size_t j = 0; j < depth; ++j) used |= chosen[j] == c;
      if (used || !t.slots[depth][c]) continue;
      chosen[depth] = c;
      self(self, depth + 1);
    }
  };
  walk(walk, 0);
  return Rational(hits, maps);
}

MonteCarloEstimate injective_mean_sampled(const SlotTables& t, std::uint64_t samples, std::uint64_t seed) {
  validate(t);
  const std::size_t m = t.slots.size();
  const Point points = Point{1} << t.n;
  std::vector<Point> chosen(m);
  std::uint64_t hits = 0;
  for (std::uint64_t s = 0; s < samples; ++s) {
    CounterRng rng(seed, s);
    for (std::size_t i = 0; i < m; ++i) {
      bool collision;
      do {
        chosen[i] = rng.below(points);
        collision = false;
        for (std::size_t j = 0; j < i; ++j) collision |= chosen[j] == chosen[i];
      } while (collision);
    }
    bool all = true;
    for (std::size_t i = 0; i < m && all; ++i) all = t.slots[i][chosen[i]] != 0;
    hits += all ? 1 : 0;
  }
  const double h = static_cast<double>(hits);
  return estimate_from_sums(h, h, samples, seed);
}

Estimate injective_mean(const SlotTables& t, const SamplingOptions& options) {
  const std::uint64_t cost = injective_exact_cost(t.n, t.slots.size());
  switch (options.mode) {
    case Mode::exact:
      check_budget("exact injective mean", cost, options.budget);
      return injective_mean_exact(t);
    case Mode::montecarlo:
      check_budget("sampled injective mean", saturating_mul(options.samples, t.slots.size() + 1), options.budget);
      return injective_mean_sampled(t, options.samples, options.seed);
    case Mode::automatic:
      if (cost <= kExactCutoff && cost <= options.budget) return injective_mean_exact(t);
      check_budget("sampled injective mean", saturating_mul(options.samples, t.slots.size() + 1), options.budget);
      return injective_mean_sampled(t, options.samples, options.seed);
  }
  throw std::logic_error("unknown mode");
}

}  // namespace qrbf
