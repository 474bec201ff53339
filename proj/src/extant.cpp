#include "qrbf/extant.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <new>
#include <stdexcept>

#include <fftw3.h>

#include "qrbf/properties.hpp"

namespace qrbf {
namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_shift(std::uint64_t base, int shift) {
  if (shift >= 64 || (base != 0 && base > (kSaturated >> shift))) return kSaturated;
  return base << shift;
}

/// sum_a A_g(a)^2, the numerator of ||g||_{U^2}^4 over 2^(3n).
__int128 u2_numerator(const BooleanFunction& g) {
  const AutocorrelationTable t = autocorrelation(g);
  __int128 total = 0;
  for (std::int64_t a : t.A) total += static_cast<__int128>(a) * a;
  return total;
}

__int128 recursive_numerator(const BooleanFunction& g, int levels) {
  if (levels == 0) return u2_numerator(g);
  __int128 total = 0;
  for (Point v = 0; v < g.size(); ++v) total += recursive_numerator(derivative(g, v), levels - 1);
  return total;
}

}  // namespace

std::uint64_t gowers_exact_cost(int n, int k) {
  if (k <= 1) return std::uint64_t{1} << n;
  const std::uint64_t base = static_cast<std::uint64_t>(n + 1) << n;
  return saturating_shift(base, n * (k - 2));
}

BooleanFunction derivative(const BooleanFunction& f, Point v) {
  if (v >= f.size()) throw std::out_of_range("derivative direction outside F_2^n");
  return BooleanFunction::tabulate(f.n(), [&](Point x) { return f.sign(x) * f.sign(x ^ v); });
}

GowersResult gowers_norm(const BooleanFunction& f, int k, const SamplingOptions& options) {
  if (k < 1) throw std::invalid_argument("Gowers norm order must be at least 1");
  const int n = f.n();
  GowersResult r;
  r.k = k;
  if (k == 1) {
    std::int64_t w0 = 0;
    for (Point x = 0; x < f.size(); ++x) w0 += f.sign(x);
    r.value = std::ldexp(static_cast<double>(std::abs(w0)), -n);
    r.power = Rational::dyadic(w0, n) * Rational::dyadic(w0, n);
    return r;
  }

  const std::uint64_t cost = gowers_exact_cost(n, k);
  const bool exact = k == 2 || options.mode == Mode::exact ||
                     (options.mode == Mode::automatic && cost <= options.budget);
  const long double exponent = 1.0L / static_cast<long double>(std::uint64_t{1} << k);
  if (exact) {
    check_budget("exact Gowers norm", cost, options.budget);
    const __int128 numerator = recursive_numerator(f, k - 2);
    const int scale = (k + 1) * n;
    const long double p = std::ldexp(static_cast<long double>(numerator), -scale);
    r.value = static_cast<double>(std::pow(p, exponent));
    if (numerator <= std::numeric_limits<std::int64_t>::max() && scale <= 126) {
      try {
        r.power = Rational::dyadic(static_cast<std::int64_t>(numerator), scale);
      } catch (const std::exception&) {
        r.power.reset();
      }
    }
    return r;
  }

  r.method = GowersMethod::sampled;
  r.samples = options.samples;
  const std::uint64_t per_sample = static_cast<std::uint64_t>(k + n) << n;
  check_budget("sampled Gowers norm",
               options.samples > kSaturated / per_sample ? kSaturated : options.samples * per_sample, options.budget);
  double sum = 0, sum_sq = 0;
  for (std::uint64_t s = 0; s < options.samples; ++s) {
    CounterRng rng(options.seed, s);
    BooleanFunction g = f;
    for (int level = 0; level < k - 2; ++level) g = derivative(g, rng.below(f.size()));
    const double x = std::ldexp(static_cast<double>(u2_numerator(g)), -3 * n);
    sum += x;
    sum_sq += x * x;
  }
  const MonteCarloEstimate e = estimate_from_sums(sum, sum_sq, options.samples, options.seed);
  const double mean = std::max(e.mean, 0.0);
  r.value = std::pow(mean, static_cast<double>(exponent));
  r.std_error = mean > 0 ? e.std_error * static_cast<double>(exponent) * r.value / mean : 0.0;
  return r;
}

GowersResult f2_regular_error(const BooleanFunction& f, int d, const SamplingOptions& options) {
  if (d < 0) throw std::invalid_argument("degree must be nonnegative");
  return gowers_norm(f, d + 1, options);
}

CoefficientPeak r_regular_error(const BooleanFunction& f, int d, bool include_zero) {
  if (d < 0 || d > f.n()) throw std::invalid_argument("weight bound must satisfy 0 <= d <= n");
  const Spectrum s = walsh_transform(f);
  std::int64_t best = -1;
  CoefficientPeak peak;
  auto visit = [&](Point g) {
    if (std::abs(s.W[g]) > best) {
      best = std::abs(s.W[g]);
      peak.gamma = g;
    }
  };
  if (include_zero) visit(0);
  for_each_in_ball(f.n(), d, visit);
  peak.magnitude = best < 0 ? Rational(0) : Rational::dyadic(best, f.n());
  return peak;
}

Point binary_expansion_lift(std::uint64_t z, int n) {
  if (n < 0 || n > 63 || z >> n != 0) throw std::out_of_range("z must lie in [0, 2^n)");
  return z;
}

ZpCorrelation zp_regularity_error(const BooleanFunction& f) {
  const int n = f.n();
  if (n < 1 || n > kMaxZpDimension) throw std::invalid_argument("Z/2^n correlation requires 1 <= n <= 20");
  const int size = static_cast<int>(f.size());
  auto* data = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * f.size()));
  if (data == nullptr) throw std::bad_alloc();
  // Forward sign convention: out[j] = sum_z in[z] exp(-2 pi i j z / 2^n).
  fftw_plan plan = fftw_plan_dft_1d(size, data, data, FFTW_FORWARD, FFTW_ESTIMATE);
  for (std::uint64_t z = 0; z < f.size(); ++z) {
    data[z][0] = static_cast<double>(f.sign(binary_expansion_lift(z, n)));
    data[z][1] = 0.0;
  }
  fftw_execute(plan);
  ZpCorrelation best{1, -1};
  const double scale = std::ldexp(1.0, -n);
  for (std::uint64_t j = 1; j < f.size(); ++j) {
    const double m = std::hypot(data[j][0], data[j][1]) * scale;
    if (m > best.magnitude + 1e-12 * best.magnitude) best = {j, m};
  }
  fftw_destroy_plan(plan);
  fftw_free(data);
  return best;
}

double zp_correlation_at(const BooleanFunction& f, std::uint64_t j) {
  const int n = f.n();
  if (j >= f.size()) throw std::out_of_range("character index outside Z/2^n");
  std::complex<long double> total = 0;
  const std::uint64_t mask = f.size() - 1;
  for (std::uint64_t z = 0; z < f.size(); ++z) {
    // j z mod 2^n keeps the angle argument small and exact.
    const std::uint64_t phase = static_cast<std::uint64_t>((static_cast<unsigned __int128>(j) * z) & mask);
    const long double angle = -2.0L * std::numbers::pi_v<long double> * std::ldexp(static_cast<long double>(phase), -n);
    total += static_cast<long double>(f.sign(z)) * std::polar(1.0L, angle);
  }
  return static_cast<double>(std::abs(total) * std::ldexp(1.0L, -n));
}

double stable_influence(const Spectrum& s, int i, double rho) {
  if (i < 1 || i > s.n) throw std::out_of_range("coordinate must lie in [1, n]");
  if (!(rho >= 0 && rho <= 1)) throw std::invalid_argument("rho must lie in [0, 1]");
  // Exact per-weight sums of W^2, then the rho-weighted combination.
  std::vector<std::int64_t> by_weight(static_cast<std::size_t>(s.n) + 1, 0);
  const Point bit = Point{1} << (i - 1);
  for (Point g = 0; g < s.W.size(); ++g)
    if (g & bit) by_weight[static_cast<std::size_t>(weight(g))] += s.W[g] * s.W[g];
  long double total = 0;
  for (int w = 1; w <= s.n; ++w)
    total += std::pow(static_cast<long double>(rho), w - 1) * static_cast<long double>(by_weight[static_cast<std::size_t>(w)]);
  return static_cast<double>(std::ldexp(total, -2 * s.n));
}

double stable_influence(const BooleanFunction& f, int i, double rho) {
  return stable_influence(walsh_transform(f), i, rho);
}

BooleanFunction lift_ignoring_new_coordinate(const BooleanFunction& f) {
  if (f.n() + 1 > BooleanFunction::kMaxDimension) throw std::invalid_argument("lift exceeds dimension cap");
  const Point low = f.size() - 1;
  return BooleanFunction::tabulate(f.n() + 1, [&](Point x) { return f.sign(x & low); });
}

RelationReport relation_battery(const BooleanFunction& f, int d, double delta, const SamplingOptions& options) {
  const int n = f.n();
  if (d < 1 || d > n) throw std::invalid_argument("rank d must satisfy 1 <= d <= n");
  if (!(delta >= 0 && delta <= 1)) throw std::invalid_argument("delta must lie in [0, 1]");
  const Analysis a(f);
  RelationReport r;
  r.n = n;
  r.d = d;

  r.inf_error = std::get<Rational>(inf_error(a, d).epsilon);
  r.max_coefficient = r_regular_error(f, n).magnitude;
  const Rational squared_bound = Rational::dyadic(1, d) + Rational(2) * r.inf_error;
  r.coefficient_bound = std::sqrt(squared_bound.to_double());
  r.coefficient_bound_holds = r.max_coefficient * r.max_coefficient <= squared_bound;

  if (n + 1 <= BooleanFunction::kMaxDimension) {
    const BooleanFunction lifted = lift_ignoring_new_coordinate(f);
    SamplingOptions exact = options;
    exact.mode = Mode::exact;
    for (int k = 1; k <= 3; ++k) {
      if (gowers_exact_cost(n + 1, k) > options.budget) break;
      r.gowers_original.push_back(gowers_norm(f, k, exact).value);
      r.gowers_lifted.push_back(gowers_norm(lifted, k, exact).value);
      r.lift_gowers_gap = std::max(r.lift_gowers_gap, std::abs(r.gowers_original.back() - r.gowers_lifted.back()));
    }
    r.lifted_influence = influence(lifted, Point{1} << n);
    r.lift_checked = true;
    r.lift_holds = r.lift_gowers_gap <= 1e-10 && r.lifted_influence == Rational(0);
  }

  r.delta = delta;
  r.sd_error = std::get<Rational>(sd_error(a, d, options.budget).epsilon);
  const double rho = 1.0 - delta;
  for (int i = 1; i <= n; ++i) r.max_stable_influence = std::max(r.max_stable_influence, stable_influence(a.spectrum, i, rho));
  const double sd = r.sd_error.to_double();
  r.literal_bound = sd * std::pow(2.0 * std::exp(-delta / 2.0), d - 1);
  r.corrected_bound = std::pow(2.0 - delta, d - 1) * (std::ldexp(1.0, -d) + sd);
  const double slack = 1e-12;
  r.literal_bound_holds = r.max_stable_influence <= r.literal_bound + slack;
  r.corrected_bound_holds = r.max_stable_influence <= r.corrected_bound + slack;
  return r;
}

}  // namespace qrbf
