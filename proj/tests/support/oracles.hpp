#pragma once

// Brute-force reference implementations. Each follows a definition literally
// and shares no code with the library beyond BooleanFunction storage.

#include <bit>
#include <cstdint>
#include <functional>
#include <vector>

#include "qrbf/constructions.hpp"
#include "qrbf/core.hpp"
#include "qrbf/rational.hpp"

namespace oracle {

using qrbf::BooleanFunction;
using qrbf::Point;
using qrbf::Rational;

inline int parity_sign(Point a, Point b) { return (std::popcount(a & b) & 1) ? -1 : 1; }

inline std::int64_t walsh(const BooleanFunction& f, Point gamma) {
  std::int64_t s = 0;
  for (Point x = 0; x < f.size(); ++x) s += f.sign(x) * parity_sign(gamma, x);
  return s;
}

inline std::int64_t autocorrelation(const BooleanFunction& f, Point gamma) {
  std::int64_t s = 0;
  for (Point x = 0; x < f.size(); ++x) s += f.sign(x) * f.sign(x ^ gamma);
  return s;
}

/// Pr_x[f(x) != f(x + gamma)] by counting.
inline Rational influence(const BooleanFunction& f, Point gamma) {
  std::int64_t differ = 0;
  for (Point x = 0; x < f.size(); ++x) differ += f.sign(x) != f.sign(x ^ gamma);
  return Rational(differ, static_cast<std::int64_t>(f.size()));
}

inline Rational fourier(const BooleanFunction& f, Point gamma) {
  return Rational(walsh(f, gamma), static_cast<std::int64_t>(f.size()));
}

/// Sum of fhat^2 over the frequency subcube {gamma : gamma & ~free == fixed}.
inline Rational spectral_mass(const BooleanFunction& f, Point free, Point fixed) {
  Rational total(0);
  for (Point g = 0; g < f.size(); ++g)
    if ((g & ~free) == fixed) total += fourier(f, g) * fourier(f, g);
  return total;
}

/// max over nonzero |gamma| <= d of |Inf_gamma - 1/2|.
inline Rational inf_error(const BooleanFunction& f, int d) {
  Rational worst(0);
  for (Point g = 1; g < f.size(); ++g) {
    if (std::popcount(g) > d) continue;
    const Rational dev = (oracle::influence(f, g) - Rational(1, 2)).abs();
    if (dev > worst) worst = dev;
  }
  return worst;
}

/// max over frequency subcubes of codimension 1..d of |mass - 2^-codim|.
inline Rational sd_error(const BooleanFunction& f, int d) {
  const Point all = f.size() - 1;
  Rational worst(0);
  for (Point fixed_set = 1; fixed_set <= all; ++fixed_set) {
    const int k = std::popcount(fixed_set);
    if (k > d) continue;
    for (Point z = 0; z <= all; ++z) {
      if (z & ~fixed_set) continue;
      const Rational dev = (spectral_mass(f, all & ~fixed_set, z) - Rational(1, std::int64_t{1} << k)).abs();
      if (dev > worst) worst = dev;
    }
  }
  return worst;
}

/// #{c : f(u+c) = f(v+c) = -1}.
inline std::int64_t codegree(const BooleanFunction& f, Point u, Point v) {
  std::int64_t count = 0;
  for (Point c = 0; c < f.size(); ++c) count += f.sign(u ^ c) == -1 && f.sign(v ^ c) == -1;
  return count;
}

/// ||f||_{U^k}^(2^k): average over x, h_1..h_k of the product over all 2^k corners.
inline double gowers_power(const BooleanFunction& f, int k) {
  const int n = f.n();
  const std::uint64_t tuples = std::uint64_t{1} << (n * (k + 1));
  const Point mask = f.size() - 1;
  long double total = 0;
  for (std::uint64_t t = 0; t < tuples; ++t) {
    const Point x = t & mask;
    int product = 1;
    for (std::uint32_t corner = 0; corner < (1u << k); ++corner) {
      Point y = x;
      for (int j = 0; j < k; ++j)
        if ((corner >> j) & 1) y ^= (t >> (n * (j + 1))) & mask;
      product *= f.sign(y);
    }
    total += product;
  }
  return static_cast<double>(total / static_cast<long double>(tuples));
}

/// Mean over injective maps [m] -> F_2^n of prod_i slots[i][phi(i)], by recursion.
inline Rational injective_mean(int n, const std::vector<std::vector<std::uint8_t>>& slots) {
  const std::int64_t size = std::int64_t{1} << n;
  std::vector<bool> used(static_cast<std::size_t>(size), false);
  std::int64_t hits = 0, maps = 0;
  std::function<void(std::size_t, bool)> go = [&](std::size_t i, bool alive) {
    if (i == slots.size()) {
      ++maps;
      hits += alive;
      return;
    }
    for (std::int64_t c = 0; c < size; ++c) {
      if (used[static_cast<std::size_t>(c)]) continue;
      used[static_cast<std::size_t>(c)] = true;
      go(i + 1, alive && slots[i][static_cast<std::size_t>(c)] != 0);
      used[static_cast<std::size_t>(c)] = false;
    }
  };
  go(0, true);
  return Rational(hits, maps);
}

/// Smallest weight of a nonzero kernel vector by scanning all of F_2^n.
inline int min_kernel_weight(const qrbf::LinearCode& code) {
  int best = code.n() + 1;
  for (Point x = 1; x < (Point{1} << code.n()); ++x) {
    bool in = true;
    for (Point row : code.rows()) in = in && (std::popcount(row & x) % 2 == 0);
    if (in) best = std::min(best, std::popcount(x));
  }
  return best;
}

}  // namespace oracle
