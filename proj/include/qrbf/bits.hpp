#pragma once

// Bit-level helpers for points of F_2^n.
//
// Coordinate i (1-based) of a point lives in integer bit i-1, so the dot
// product gamma.x is the parity of popcount(gamma & x).

#include <bit>
#include <cstdint>
#include <stdexcept>

namespace qrbf {

using Point = std::uint64_t;

inline int weight(Point x) noexcept { return std::popcount(x); }

inline int dot(Point a, Point b) noexcept { return std::popcount(a & b) & 1; }

/// (-1)^(a.b)
inline int character_sign(Point a, Point b) noexcept { return 1 - 2 * dot(a, b); }

inline Point low_mask(int n) noexcept {
  return n >= 64 ? ~Point{0} : (Point{1} << n) - 1;
}

/// Scatters the low popcount(mask) bits of `bits` onto the set bits of `mask`,
/// in ascending order.
inline Point deposit(Point bits, Point mask) noexcept {
  Point out = 0;
  for (Point m = mask; m != 0; m &= m - 1, bits >>= 1)
    if (bits & 1) out |= m & (~m + 1);
  return out;
}

/// Inverse of deposit: gathers the bits of x at the positions of `mask`.
inline Point extract(Point x, Point mask) noexcept {
  Point out = 0;
  int pos = 0;
  for (Point m = mask; m != 0; m &= m - 1, ++pos)
    if (x & (m & (~m + 1))) out |= Point{1} << pos;
  return out;
}

/// Visits every submask of `mask` (including 0 and mask itself) in ascending
/// order of its compressed index.
template <class Fn>
void for_each_submask(Point mask, Fn&& fn) {
  const int k = std::popcount(mask);
  for (Point i = 0; i < (Point{1} << k); ++i) fn(deposit(i, mask));
}

/// Visits every k-subset of [n] as a bitmask, ascending (Gosper's hack).
template <class Fn>
void for_each_k_subset(int n, int k, Fn&& fn) {
  if (k < 0 || k > n) return;
  if (k == 0) {
    fn(Point{0});
    return;
  }
  Point s = low_mask(k);
  const Point limit = Point{1} << n;
  while (s < limit) {
    fn(s);
    Point c = s & (~s + 1);
    Point r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
}

/// Visits the nonzero points of the Hamming ball B_d(n,0), by weight then by
/// integer value.
template <class Fn>
void for_each_in_ball(int n, int d, Fn&& fn) {
  for (int k = 1; k <= d && k <= n; ++k) for_each_k_subset(n, k, fn);
}

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

inline int hamming_distance(Point a, Point b) noexcept { return std::popcount(a ^ b); }

}  // namespace qrbf
