#pragma once

// Boolean functions F_2^n -> {+1,-1} and their exact Fourier analysis.
//
// Spectral quantities are kept as scaled integers:
//   W(gamma) = sum_x f(x) (-1)^(gamma.x)        so  fhat(gamma) = W(gamma) / 2^n
//   A(gamma) = sum_x f(x) f(x + gamma)          so  (f*f)(gamma) = A(gamma) / 2^n
// and are turned into Rationals only when handed to callers.

#include <cstdint>
#include <span>
#include <vector>

#include "qrbf/bits.hpp"
#include "qrbf/rational.hpp"

namespace qrbf {

class BooleanFunction {
 public:
  static constexpr int kMaxDimension = 30;

  /// The constant +1 function on n bits.
  explicit BooleanFunction(int n);

  /// Builds from explicit signs; `signs.size()` must be 2^n and every entry +1 or -1.
  static BooleanFunction from_signs(int n, std::span<const int> signs);

  /// Tabulates `fn(x)` for every x in [0, 2^n); fn must return +1 or -1.
  template <class Fn>
  static BooleanFunction tabulate(int n, Fn&& fn) {
    BooleanFunction f(n);
    for (Point x = 0; x < f.size(); ++x) f.set(x, fn(x));
    return f;
  }

  static BooleanFunction constant(int n, int sign);
  /// chi_gamma(x) = (-1)^(gamma.x).
  static BooleanFunction character(int n, Point gamma);

  int n() const noexcept { return n_; }
  Point size() const noexcept { return Point{1} << n_; }

  /// Unchecked read of f(x) as +1/-1.
  int sign(Point x) const noexcept { return 1 - 2 * static_cast<int>((words_[x >> 6] >> (x & 63)) & 1); }
  /// f(x) as 0/1 with 1 meaning -1 ("true").
  unsigned bit(Point x) const noexcept { return static_cast<unsigned>((words_[x >> 6] >> (x & 63)) & 1); }

  /// Checked read; throws std::out_of_range when x >= 2^n.
  int evaluate(Point x) const;

  void set(Point x, int sign);

  /// Number of inputs mapped to -1.
  std::uint64_t count_negative() const noexcept;

  std::vector<int> signs() const;

  friend bool operator==(const BooleanFunction&, const BooleanFunction&) = default;

 private:
  int n_;
  std::vector<std::uint64_t> words_;
};

struct Spectrum {
  int n = 0;
  std::vector<std::int64_t> W;

  Rational coefficient(Point gamma) const { return Rational::dyadic(W.at(gamma), n); }
};

struct AutocorrelationTable {
  int n = 0;
  std::vector<std::int64_t> A;

  /// (f*f)(gamma) = A(gamma) / 2^n.
  Rational convolution(Point gamma) const { return Rational::dyadic(A.at(gamma), n); }
};

/// The subcube C(S,z): points agreeing with `fixed` off the free coordinate set S.
class Subcube {
 public:
  /// Throws std::invalid_argument unless free_mask and fixed are disjoint and
  /// both lie inside [n].
  Subcube(int n, Point free_mask, Point fixed);

  static Subcube full(int n) { return Subcube(n, low_mask(n), 0); }

  int n() const noexcept { return n_; }
  Point free_mask() const noexcept { return free_; }
  Point fixed() const noexcept { return fixed_; }
  int dimension() const noexcept { return weight(free_); }
  int codimension() const noexcept { return n_ - dimension(); }

  bool contains(Point x) const noexcept { return (x & ~free_) == fixed_; }
  /// x (in F_2^S, compressed to the low bits) joined with the fixed part.
  Point embed(Point x) const noexcept { return deposit(x, free_) | fixed_; }

  friend bool operator==(const Subcube&, const Subcube&) = default;

 private:
  int n_;
  Point free_;
  Point fixed_;
};

/// In-place unnormalized Walsh-Hadamard butterfly; data.size() must be a power of two.
void fwht(std::span<std::int64_t> data);

int evaluate(const BooleanFunction& f, Point x);

/// Exact integer spectrum, O(n 2^n).
Spectrum walsh_transform(const BooleanFunction& f);

/// A(gamma) for all gamma, via the spectrum; equals the direct double sum.
AutocorrelationTable autocorrelation(const BooleanFunction& f);
AutocorrelationTable autocorrelation(const Spectrum& spectrum);

/// Single autocorrelation value by direct O(2^n) summation.
std::int64_t autocorrelation_at(const BooleanFunction& f, Point gamma);

/// Inf_gamma[f] = Pr_x[f(x) != f(x+gamma)] = (2^n - A(gamma)) / 2^(n+1).
Rational influence(const BooleanFunction& f, Point gamma);
Rational influence(const AutocorrelationTable& table, Point gamma);

/// f restricted to the subcube; free coordinates land on the low bits in
/// ascending order.
BooleanFunction restrict(const BooleanFunction& f, const Subcube& cube);

/// Spectral-sample mass of the subcube: sum of fhat(gamma)^2 over gamma in it.
Rational spectral_mass(const Spectrum& spectrum, const Subcube& cube);

/// fhat|_{S,z}(gamma) via sum_delta fhat(delta (x)_S gamma) chi_delta(z).
/// `gamma` is given in ambient coordinates and must be supported on S.
Rational restricted_fourier_identity(const Spectrum& spectrum, const Subcube& cube, Point gamma);
Rational restricted_fourier_identity(const BooleanFunction& f, const Subcube& cube, Point gamma);

}  // namespace qrbf
