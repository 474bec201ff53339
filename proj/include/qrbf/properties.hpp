#pragma once

// Rank-d quasi-randomness testers. Each returns the worst deviation epsilon
// together with the object attaining it.
//
// The six spectral testers reduce to the autocorrelation table A on the
// weight-<=d ball:
//   INF = RI = max |A(w)| / 2^(n+1)      RC  = max |A(w)| / 2^n
//   LSR      = max |A(w)| / 2^(n+2)
// and SD/RF scan subcube masses, each a small Walsh transform of A restricted
// to the fixed coordinates. The `definitional` namespace recomputes the same
// numbers by enumerating restrictions and vertex pairs.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qrbf/core.hpp"
#include "qrbf/estimate.hpp"
#include "qrbf/graphs.hpp"

namespace qrbf {

enum class PropertyTag { INF, SD, RF, RC, RI, LSR, DTH, RAIN };

std::string to_string(PropertyTag tag);

struct Witness {
  enum class Kind {
    none,
    /// gamma: a nonzero point of the weight-<=d ball.
    point,
    /// A subcube C(free, fixed) of the frequency space.
    subcube,
    /// Vertex pair (u, v) of BC(f).
    pair,
    /// Pattern text plus the injection of its fixed vertices.
    pattern,
  };

  Kind kind = Kind::none;
  Point gamma = 0;
  Point free_mask = 0;
  Point fixed = 0;
  Point u = 0;
  Point v = 0;
  std::string pattern;
  std::vector<Point> injection;

  std::string to_string() const;
};

struct PropertyReport {
  PropertyTag property = PropertyTag::INF;
  int d = 1;
  Estimate epsilon = Rational(0);
  Witness witness;
  /// |fhat(0)| < 1/2.
  bool mean_zero_ok = true;
  /// The target density is zero, so the relative DTH deviation is replaced by the absolute one.
  bool degenerate = false;
  /// Extra ordered key/value pairs (densities, targets, cross-check status).
  std::vector<std::pair<std::string, std::string>> details;
};

/// Spectrum and autocorrelation of f, computed once and shared by the testers.
struct Analysis {
  explicit Analysis(const BooleanFunction& f);

  const BooleanFunction& f;
  Spectrum spectrum;
  AutocorrelationTable table;

  int n() const { return f.n(); }
  bool mean_zero_ok() const;
};

/// Work estimate for the subcube scans behind sd_error and rf_error.
std::uint64_t subcube_scan_cost(int n, int d);

PropertyReport inf_error(const Analysis& a, int d);
PropertyReport sd_error(const Analysis& a, int d, std::uint64_t budget = kDefaultBudget);
PropertyReport rf_error(const Analysis& a, int d, std::uint64_t budget = kDefaultBudget);
PropertyReport rc_error(const Analysis& a, int d);
/// Cross-checks against definitional::ri_error when that fits in `cross_check_budget`.
PropertyReport ri_error(const Analysis& a, int d, std::uint64_t cross_check_budget = 1'000'000);
PropertyReport lsr_error(const Analysis& a, int d);

PropertyReport inf_error(const BooleanFunction& f, int d);
PropertyReport sd_error(const BooleanFunction& f, int d, std::uint64_t budget = kDefaultBudget);
PropertyReport rf_error(const BooleanFunction& f, int d, std::uint64_t budget = kDefaultBudget);
PropertyReport rc_error(const BooleanFunction& f, int d);
PropertyReport ri_error(const BooleanFunction& f, int d);
PropertyReport lsr_error(const BooleanFunction& f, int d);

/// p = 1/4 - fhat(0)/2 and q = 1/2 - fhat(0)/2.
Rational dth_p(const Spectrum& spectrum);
Rational dth_q(const Spectrum& spectrum);

/// Relative deviation of the fixed-left homomorphism density from p^r2 q^r1.
/// G must have right degrees at most 2 and at most 2^(n/2) right vertices;
/// psi must cover the left part with diameter at most d.
PropertyReport dth_deviation(const BooleanFunction& f, const BipartitePattern& g, const InjectionMap& psi, int d,
                             const SamplingOptions& options = {});

/// Absolute deviation of the rainbow embedding density from 2^-|E|.
PropertyReport rain_deviation(const BooleanFunction& f, const SimplePattern& g, const InjectionMap& phi, int d,
                              const SamplingOptions& options = {});

/// Recomputes the deviation at the report's witness straight from f
/// (direct influence, subcube mass, restriction transform or codegree).
/// Only defined for the six exact spectral testers.
Rational reevaluate_witness(const BooleanFunction& f, const PropertyReport& report);

/// All eight testers; DTH and RAIN take the worst case over a fixed pattern
/// battery anchored at the INF witness. Throws VerificationFailure if the
/// inequality chain
///   sd <= 2 inf,  rf <= sd,  rc <= 2^d rf,  ri = inf,  lsr = inf / 2
/// fails.
std::vector<PropertyReport> full_report(const BooleanFunction& f, int d, const SamplingOptions& options = {});

/// Checks the chain on exact reports ordered INF, SD, RF, RC, RI, LSR; returns
/// an empty string or a description of the first violation.
std::string check_chain(const std::vector<PropertyReport>& exact_reports);

namespace definitional {

// Enumerate every restriction f|_{S,z} (S the free set, |S| <= d) and take the
// worst deviation literally. Costs are exponential; budgets are enforced.

Rational rc_error(const BooleanFunction& f, int d, std::uint64_t budget = kDefaultBudget);
Rational ri_error(const BooleanFunction& f, int d, std::uint64_t budget = kDefaultBudget);
Rational rf_error(const BooleanFunction& f, int d, std::uint64_t budget = kDefaultBudget);
/// Worst |codegree(u,v)/2^n - p| over pairs 0 < |u+v| <= d, all u.
Rational lsr_error(const BooleanFunction& f, int d, std::uint64_t budget = kDefaultBudget);

std::uint64_t restriction_scan_cost(int n, int d);

}  // namespace definitional

}  // namespace qrbf
