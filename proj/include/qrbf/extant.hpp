#pragma once

// Other pseudorandomness measures for Boolean functions, and the numeric
// relations linking them to balanced influences.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qrbf/core.hpp"
#include "qrbf/estimate.hpp"

namespace qrbf {

enum class GowersMethod { exact, sampled };

struct GowersResult {
  int k = 1;
  /// ||f||_{U^k}.
  double value = 0;
  GowersMethod method = GowersMethod::exact;
  /// ||f||^(2^k) as an exact dyadic when it fits in int64.
  std::optional<Rational> power;
  /// Sampled mode only: delta-method standard error of `value`.
  double std_error = 0;
  std::uint64_t samples = 0;
};

/// Work estimate for the exact derivative recursion at order k.
std::uint64_t gowers_exact_cost(int n, int k);

/// Delta_v f(x) = f(x) f(x+v).
BooleanFunction derivative(const BooleanFunction& f, Point v);

/// Uses ||f||_{U^k}^(2^k) = E_v ||Delta_v f||_{U^(k-1)}^(2^(k-1)) down to
///   ||g||_{U^2}^4 = sum_a A_g(a)^2 / 2^(3n)    and    ||g||_{U^1} = |E g|.
/// Sampled mode draws (v_1..v_{k-2}) and evaluates the U^2 base exactly;
/// orders 1 and 2 are always exact.
GowersResult gowers_norm(const BooleanFunction& f, int k, const SamplingOptions& options = {});

/// ||f||_{U^(d+1)}.
GowersResult f2_regular_error(const BooleanFunction& f, int d, const SamplingOptions& options = {});

struct CoefficientPeak {
  Rational magnitude{0};
  Point gamma = 0;
};

/// max |fhat(gamma)| over |gamma| <= d; gamma = 0 takes part unless excluded.
CoefficientPeak r_regular_error(const BooleanFunction& f, int d, bool include_zero = true);

/// z in Z/2^n to its binary-expansion point (bit i-1 is coordinate i).
Point binary_expansion_lift(std::uint64_t z, int n);

struct ZpCorrelation {
  std::uint64_t j = 0;
  double magnitude = 0;
};

inline constexpr int kMaxZpDimension = 20;

/// Worst |E_z f(z*) exp(-2 pi i j z / 2^n)| over nonzero j; ties go to the smallest j.
ZpCorrelation zp_regularity_error(const BooleanFunction& f);

/// Single correlation by direct summation; the reference for the transform.
double zp_correlation_at(const BooleanFunction& f, std::uint64_t j);

/// sum over gamma with gamma_i = 1 of rho^(|gamma|-1) fhat(gamma)^2; i is 1-based.
double stable_influence(const BooleanFunction& f, int i, double rho);
double stable_influence(const Spectrum& spectrum, int i, double rho);

struct RelationReport {
  int n = 0;
  int d = 0;

  // Fourier bound: max_gamma |fhat(gamma)| <= sqrt(2^-d + 2 inf_error).
  Rational inf_error{0};
  Rational max_coefficient{0};
  double coefficient_bound = 0;
  bool coefficient_bound_holds = false;

  // Appending an ignored coordinate keeps Gowers norms and kills one influence.
  bool lift_checked = false;
  std::vector<double> gowers_original;
  std::vector<double> gowers_lifted;
  double lift_gowers_gap = 0;
  Rational lifted_influence{1};
  bool lift_holds = false;

  // Stable influences at rho = 1 - delta against the spectral discrepancy.
  double delta = 0;
  Rational sd_error{0};
  double max_stable_influence = 0;
  /// sd * (2 e^(-delta/2))^(d-1): the bound obtained by dropping the 2^-d term.
  double literal_bound = 0;
  bool literal_bound_holds = false;
  /// (2 - delta)^(d-1) (2^-d + sd).
  double corrected_bound = 0;
  bool corrected_bound_holds = false;

  bool ok() const { return coefficient_bound_holds && (!lift_checked || lift_holds) && corrected_bound_holds; }
};

RelationReport relation_battery(const BooleanFunction& f, int d, double delta = 0.5,
                                const SamplingOptions& options = {});

/// Appends coordinate n+1, which f ignores.
BooleanFunction lift_ignoring_new_coordinate(const BooleanFunction& f);

}  // namespace qrbf
