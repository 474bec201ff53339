#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qrbf/core.hpp"
#include "qrbf/rational.hpp"

namespace qrbf {

/// Binary linear code of length n given by a full-rank parity-check matrix H.
/// Row i is a bitmask of width n; coordinate j+1 of a row is bit j.
class LinearCode {
 public:
  /// Throws std::invalid_argument unless the rows fit in n bits and are independent.
  LinearCode(int n, std::vector<Point> rows);

  int n() const noexcept { return n_; }
  int k() const noexcept { return n_ - redundancy(); }
  int redundancy() const noexcept { return static_cast<int>(rows_.size()); }
  const std::vector<Point>& rows() const noexcept { return rows_; }

  /// Hx; bit i is the parity of row i against x.
  Point syndrome(Point x) const noexcept;
  bool contains(Point x) const noexcept { return syndrome(x) == 0; }

  /// k independent codewords spanning ker H.
  std::vector<Point> generator_basis() const;

  /// "n=<n> k=<k>" followed by one binary row per line.
  static LinearCode parse(const std::string& text);
  std::string to_text() const;

  friend bool operator==(const LinearCode&, const LinearCode&) = default;

 private:
  int n_;
  std::vector<Point> rows_;
};

/// Rank over F_2 of a list of bitmask rows.
int rank(std::vector<Point> rows);

/// [2^r - 1, 2^r - 1 - r, 3]: column j (1-based) is the binary expansion of j.
LinearCode hamming_parity_check(int r);

/// [2^r, 2^r - 1 - r, 4]: Hamming rows padded with a zero column, plus the all-ones row.
LinearCode extended_hamming(int r);

/// The printed 4x8 extended Hamming matrix, row by row.
LinearCode example_hamming_matrix();

/// H = I_n; the zero code.
LinearCode identity_code(int n);

/// No parity checks; every vector is a codeword.
LinearCode full_space_code(int n);

inline constexpr int kMaxEnumeratedDimension = 24;

/// Minimum weight of a nonzero codeword, by Gray-code walk over the 2^k codewords.
/// Requires 1 <= k <= kMaxEnumeratedDimension.
int min_kernel_weight(const LinearCode& code);

/// IP(z) = (-1)^(z1 . z2) on 2m bits; z1 is the low half, z2 the high half.
BooleanFunction inner_product(int m);

struct BentCertificate {
  int n = 0;
  bool ok = false;
  /// gamma maximizing ||W(gamma)| - 2^(n/2)|, first in integer order.
  Point worst_gamma = 0;
  double worst_deviation = 0;
};

BentCertificate is_bent(const BooleanFunction& f);

/// f(x) = g(Hx); g must live on code.redundancy() bits.
BooleanFunction compose(const BooleanFunction& g, const LinearCode& code);

struct TowerVerdict {
  int n = 0;
  int k = 0;
  /// min_kernel_weight - 1, or n when the code is {0}.
  int d_star = 0;

  Rational inf_error{0};
  Point inf_witness = 0;
  bool inf_zero = false;

  /// False when no weight d*+1 vector exists (d* = n).
  bool separation_applicable = false;
  bool separation_found = false;
  /// Codeword of weight d*+1; Inf at it is 0.
  Point separation_witness = 0;
  Rational separation_influence{0};

  Rational mean{0};
  /// fhat(0)^2 = 2^-(n-k).
  bool mean_matches = false;
  /// |fhat(0)| < 1/2.
  bool mean_zero_ok = false;
  /// |fhat(0)| <= 1/2.
  bool mean_bounded = false;

  bool ok() const {
    return inf_zero && (separation_found || !separation_applicable) && mean_matches && mean_bounded;
  }
  /// Empty when ok(); otherwise the first failing check.
  std::string failure;
};

TowerVerdict verify_tower(const BooleanFunction& g, const LinearCode& code);

}  // namespace qrbf
