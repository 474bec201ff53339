#include "qrbf/properties.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace qrbf {
namespace {

void check_rank(int n, int d) {
  if (d < 1 || d > n) throw std::invalid_argument("rank d must satisfy 1 <= d <= n");
}

std::string hex(Point x) {
  std::ostringstream os;
  os << "0x" << std::hex << x;
  return os.str();
}

struct AutocorrelationPeak {
  std::int64_t magnitude = -1;
  Point w = 0;
};

/// First w of the ball (weight, then value order) maximizing |A(w)|.
AutocorrelationPeak peak(const Analysis& a, int d) {
  AutocorrelationPeak best;
  for_each_in_ball(a.n(), d, [&](Point w) {
    const std::int64_t m = std::abs(a.table.A[w]);
    if (m > best.magnitude) best = {m, w};
  });
  return best;
}

PropertyReport base_report(PropertyTag tag, int d, const Analysis& a) {
  PropertyReport r;
  r.property = tag;
  r.d = d;
  r.mean_zero_ok = a.mean_zero_ok();
  return r;
}

PropertyReport point_report(PropertyTag tag, const Analysis& a, int d, int extra_exponent) {
  check_rank(a.n(), d);
  const auto top = peak(a, d);
  PropertyReport r = base_report(tag, d, a);
  r.epsilon = Rational::dyadic(top.magnitude, a.n() + extra_exponent);
  r.witness.kind = Witness::Kind::point;
  r.witness.gamma = top.w;
  return r;
}

struct SubcubePeak {
  Rational epsilon{0};
  Point fixed_set = 0;
  Point fixed_values = 0;
};

/// Worst |mass(C) - 2^-k| over frequency subcubes C with k = 1..d fixed
/// coordinates. For fixed set T and values z the mass is
///   sum_{v subset T} (-1)^(v.z) A(v) / 2^(n+k),
/// a k-dimensional Walsh transform of A restricted to T.
SubcubePeak subcube_peak(const Analysis& a, int d, std::uint64_t budget) {
  check_rank(a.n(), d);
  check_budget("subcube scan", subcube_scan_cost(a.n(), d), budget);
  const int n = a.n();
  const std::int64_t full = std::int64_t{1} << n;
  SubcubePeak best;
  std::int64_t best_key = -1;
  std::vector<std::int64_t> buffer;
  for (int k = 1; k <= d; ++k) {
    buffer.resize(std::size_t{1} << k);
    for_each_k_subset(n, k, [&](Point t) {
      for (Point j = 0; j < buffer.size(); ++j) buffer[j] = a.table.A[deposit(j, t)];
      fwht(buffer);
      for (Point z = 0; z < buffer.size(); ++z) {
        // Deviation is |buffer[z] - 2^n| / 2^(n+k); rescale to the common denominator 2^(n+d).
        const std::int64_t key = std::abs(buffer[z] - full) << (d - k);
        if (key > best_key) {
          best_key = key;
          best.fixed_set = t;
          best.fixed_values = deposit(z, t);
        }
      }
    });
  }
  best.epsilon = Rational::dyadic(best_key, n + d);
  return best;
}

MonteCarloEstimate deviation_estimate(const MonteCarloEstimate& m, double target, double scale) {
  MonteCarloEstimate e = m;
  e.mean = std::abs(m.mean - target) / scale;
  e.std_error = m.std_error / scale;
  const double lo = std::abs(m.ci_low - target), hi = std::abs(m.ci_high - target);
  e.ci_low = (m.ci_low <= target && target <= m.ci_high) ? 0.0 : std::min(lo, hi) / scale;
  e.ci_high = std::max(lo, hi) / scale;
  return e;
}

/// Value held in a long double; used when exact rationals overflow.
MonteCarloEstimate point_value(long double v) {
  MonteCarloEstimate e;
  e.mean = e.ci_low = e.ci_high = static_cast<double>(v);
  return e;
}

std::string density_string(const Estimate& e) { return estimate_string(e); }

}  // namespace

std::string to_string(PropertyTag tag) {
  switch (tag) {
    case PropertyTag::INF: return "INF";
    case PropertyTag::SD: return "SD";
    case PropertyTag::RF: return "RF";
    case PropertyTag::RC: return "RC";
    case PropertyTag::RI: return "RI";
    case PropertyTag::LSR: return "LSR";
    case PropertyTag::DTH: return "DTH";
    case PropertyTag::RAIN: return "RAIN";
  }
  return "?";
}

std::string Witness::to_string() const {
  switch (kind) {
    case Kind::none: return "none";
    case Kind::point: return "gamma=" + hex(gamma);
    case Kind::subcube: return "free=" + hex(free_mask) + " fixed=" + hex(fixed);
    case Kind::pair: return "u=" + hex(u) + " v=" + hex(v);
    case Kind::pattern: {
      std::string text = pattern;
      for (char& c : text)
        if (c == '\n') c = ';';
      if (!text.empty() && text.back() == ';') text.pop_back();
      std::string out = "pattern=" + text + " injection=";
      for (std::size_t i = 0; i < injection.size(); ++i) out += (i ? "," : "") + hex(injection[i]);
      return out;
    }
  }
  return "?";
}

Analysis::Analysis(const BooleanFunction& fn)
    : f(fn), spectrum(walsh_transform(fn)), table(autocorrelation(spectrum)) {}

bool Analysis::mean_zero_ok() const {
  return 2 * std::abs(spectrum.W[0]) < (std::int64_t{1} << n());
}

std::uint64_t subcube_scan_cost(int n, int d) {
  std::uint64_t total = 0;
  for (int k = 1; k <= d && k <= n; ++k) total += binomial(n, k) * static_cast<std::uint64_t>(k + 1) << k;
  return total;
}

PropertyReport inf_error(const Analysis& a, int d) { return point_report(PropertyTag::INF, a, d, 1); }

PropertyReport rc_error(const Analysis& a, int d) { return point_report(PropertyTag::RC, a, d, 0); }

PropertyReport ri_error(const Analysis& a, int d, std::uint64_t cross_check_budget) {
  PropertyReport r = point_report(PropertyTag::RI, a, d, 1);
  if (definitional::restriction_scan_cost(a.n(), d) <= cross_check_budget) {
    const Rational direct = definitional::ri_error(a.f, d, cross_check_budget);
    if (direct != std::get<Rational>(r.epsilon))
      throw VerificationFailure("RI reduction " + std::get<Rational>(r.epsilon).to_string() +
                                " differs from restriction average " + direct.to_string());
    r.details.emplace_back("cross_check", "restrictions enumerated");
  } else {
    r.details.emplace_back("cross_check", "skipped");
  }
  return r;
}

PropertyReport lsr_error(const Analysis& a, int d) {
  PropertyReport r = point_report(PropertyTag::LSR, a, d, 2);
  r.witness.kind = Witness::Kind::pair;
  r.witness.u = 0;
  r.witness.v = r.witness.gamma;
  r.witness.gamma = 0;
  return r;
}

PropertyReport sd_error(const Analysis& a, int d, std::uint64_t budget) {
  const auto top = subcube_peak(a, d, budget);
  PropertyReport r = base_report(PropertyTag::SD, d, a);
  r.epsilon = top.epsilon;
  r.witness.kind = Witness::Kind::subcube;
  r.witness.free_mask = low_mask(a.n()) & ~top.fixed_set;
  r.witness.fixed = top.fixed_values;
  return r;
}

PropertyReport rf_error(const Analysis& a, int d, std::uint64_t budget) {
  // E_z fhat|_{S,z}(gamma)^2 is the mass of the frequency subcube with S fixed to gamma.
  PropertyReport r = sd_error(a, d, budget);
  r.property = PropertyTag::RF;
  return r;
}

PropertyReport inf_error(const BooleanFunction& f, int d) { return inf_error(Analysis(f), d); }
PropertyReport sd_error(const BooleanFunction& f, int d, std::uint64_t budget) {
  return sd_error(Analysis(f), d, budget);
}
PropertyReport rf_error(const BooleanFunction& f, int d, std::uint64_t budget) {
  return rf_error(Analysis(f), d, budget);
}
PropertyReport rc_error(const BooleanFunction& f, int d) { return rc_error(Analysis(f), d); }
PropertyReport ri_error(const BooleanFunction& f, int d) { return ri_error(Analysis(f), d); }
PropertyReport lsr_error(const BooleanFunction& f, int d) { return lsr_error(Analysis(f), d); }

Rational dth_p(const Spectrum& s) {
  return Rational::dyadic((std::int64_t{1} << s.n) - 2 * s.W[0], s.n + 2);
}

Rational dth_q(const Spectrum& s) { return Rational::dyadic((std::int64_t{1} << s.n) - s.W[0], s.n + 1); }

PropertyReport dth_deviation(const BooleanFunction& f, const BipartitePattern& g, const InjectionMap& psi, int d,
                             const SamplingOptions& options) {
  check_rank(f.n(), d);
  for (std::size_t r = 0; r < g.right().size(); ++r)
    if (g.right_degree(r) > 2) throw std::invalid_argument("right vertices must have degree at most 2");
  if (g.right().size() > (std::size_t{1} << (f.n() / 2)))
    throw std::invalid_argument("too many right vertices: at most 2^(n/2) allowed");
  if (psi.diameter() > d) throw std::invalid_argument("left injection diameter exceeds d");

  const Spectrum s = walsh_transform(f);
  const Estimate density = bhom_fixed_left(g, psi, f, options);
  const auto r1 = static_cast<unsigned>(g.count_right_degree(1));
  const auto r2 = static_cast<unsigned>(g.count_right_degree(2));
  const Rational p = dth_p(s), q = dth_q(s);

  PropertyReport r;
  r.property = PropertyTag::DTH;
  r.d = d;
  r.mean_zero_ok = 2 * std::abs(s.W[0]) < (std::int64_t{1} << f.n());
  r.witness.kind = Witness::Kind::pattern;
  r.witness.pattern = to_text(g);
  r.witness.injection = psi.images();
  r.details.emplace_back("density", density_string(density));
  r.details.emplace_back("r1", std::to_string(r1));
  r.details.emplace_back("r2", std::to_string(r2));

  const long double target_ld = std::pow(static_cast<long double>(p.to_long_double()), r2) *
                                std::pow(static_cast<long double>(q.to_long_double()), r1);
  r.degenerate = target_ld == 0;
  try {
    const Rational target = pow(p, r2) * pow(q, r1);
    r.details.emplace_back("target", target.to_string());
    if (const auto* exact = std::get_if<Rational>(&density)) {
      r.epsilon = r.degenerate ? exact->abs() : (*exact - target).abs() / target;
      return r;
    }
  } catch (const std::overflow_error&) {
    std::ostringstream os;
    os.precision(17);
    os << static_cast<double>(target_ld);
    r.details.emplace_back("target", os.str());
    if (const auto* exact = std::get_if<Rational>(&density)) {
      const long double v = exact->to_long_double();
      r.epsilon = point_value(r.degenerate ? std::abs(v) : std::abs(v - target_ld) / target_ld);
      r.details.emplace_back("arithmetic", "long double");
      return r;
    }
  }
  const auto& sampled = std::get<MonteCarloEstimate>(density);
  const double t = static_cast<double>(target_ld);
  r.epsilon = deviation_estimate(sampled, t, r.degenerate ? 1.0 : t);
  return r;
}

PropertyReport rain_deviation(const BooleanFunction& f, const SimplePattern& g, const InjectionMap& phi, int d,
                              const SamplingOptions& options) {
  check_rank(f.n(), d);
  if (g.edges().size() > 62) throw std::invalid_argument("too many edges");
  const Estimate density = rainbow_embedding_density(g, phi, f, d, options);
  const Rational target = Rational::dyadic(1, static_cast<int>(g.edges().size()));

  PropertyReport r;
  r.property = PropertyTag::RAIN;
  r.d = d;
  r.mean_zero_ok = 2 * std::abs(walsh_transform(f).W[0]) < (std::int64_t{1} << f.n());
  r.witness.kind = Witness::Kind::pattern;
  r.witness.pattern = to_text(g);
  r.witness.injection = phi.images();
  r.details.emplace_back("density", density_string(density));
  r.details.emplace_back("target", target.to_string());
  if (const auto* exact = std::get_if<Rational>(&density))
    r.epsilon = (*exact - target).abs();
  else
    r.epsilon = deviation_estimate(std::get<MonteCarloEstimate>(density), target.to_double(), 1.0);
  return r;
}

Rational reevaluate_witness(const BooleanFunction& f, const PropertyReport& report) {
  const int n = f.n();
  const Witness& w = report.witness;
  switch (report.property) {
    case PropertyTag::INF:
    case PropertyTag::RI:
      return (influence(f, w.gamma) - Rational(1, 2)).abs();
    case PropertyTag::RC: {
      // E_z (g*g)(x) over restrictions g = f|_{S,z}, S = supp(gamma), x = gamma on S.
      const Point s = w.gamma;
      const Point x = extract(w.gamma, s);
      const Point rest = low_mask(n) & ~s;
      std::int64_t total = 0;
      for_each_submask(rest, [&](Point z) {
        const BooleanFunction g = restrict(f, Subcube(n, s, z));
        for (Point y = 0; y < g.size(); ++y) total += g.sign(y) * g.sign(y ^ x);
      });
      return Rational::dyadic(total, n).abs();
    }
    case PropertyTag::LSR: {
      const Spectrum s = walsh_transform(f);
      const Rational density = Rational::dyadic(codegree(f, w.u, w.v), n);
      return (density - dth_p(s)).abs();
    }
    case PropertyTag::SD: {
      const Subcube cube(n, w.free_mask, w.fixed);
      return (spectral_mass(walsh_transform(f), cube) - Rational::dyadic(1, cube.codimension())).abs();
    }
    case PropertyTag::RF: {
      // Restrictions keep S = the fixed coordinates of the frequency subcube free.
      const Point s = low_mask(n) & ~w.free_mask;
      const Point gamma = extract(w.fixed, s);
      const int k = weight(s);
      std::int64_t total = 0;
      for_each_submask(w.free_mask, [&](Point z) {
        const BooleanFunction g = restrict(f, Subcube(n, s, z));
        std::int64_t coefficient = 0;
        for (Point y = 0; y < g.size(); ++y) coefficient += g.sign(y) * character_sign(gamma, y);
        total += coefficient * coefficient;
      });
      // E_z (W_g/2^k)^2 = total / 2^(n-k) / 2^(2k).
      return (Rational::dyadic(total, n + k) - Rational::dyadic(1, k)).abs();
    }
    case PropertyTag::DTH:
    case PropertyTag::RAIN:
      break;
  }
  throw std::invalid_argument("witness re-evaluation is defined for exact spectral testers only");
}

std::string check_chain(const std::vector<PropertyReport>& reports) {
  if (reports.size() < 6) throw std::invalid_argument("chain check needs the six exact reports");
  const auto& inf = std::get<Rational>(reports[0].epsilon);
  const auto& sd = std::get<Rational>(reports[1].epsilon);
  const auto& rf = std::get<Rational>(reports[2].epsilon);
  const auto& rc = std::get<Rational>(reports[3].epsilon);
  const auto& ri = std::get<Rational>(reports[4].epsilon);
  const auto& lsr = std::get<Rational>(reports[5].epsilon);
  const int d = reports[0].d;
  if (sd > Rational(2) * inf) return "sd " + sd.to_string() + " > 2 inf " + inf.to_string();
  if (rf > sd) return "rf " + rf.to_string() + " > sd " + sd.to_string();
  if (rc > Rational(std::int64_t{1} << d) * rf) return "rc " + rc.to_string() + " > 2^d rf " + rf.to_string();
  if (ri != inf) return "ri " + ri.to_string() + " != inf " + inf.to_string();
  if (lsr * Rational(2) != inf) return "lsr " + lsr.to_string() + " != inf/2 " + inf.to_string();
  return {};
}

std::vector<PropertyReport> full_report(const BooleanFunction& f, int d, const SamplingOptions& options) {
  const Analysis a(f);
  std::vector<PropertyReport> reports{inf_error(a, d),        sd_error(a, d, options.budget),
                                      rf_error(a, d, options.budget), rc_error(a, d),
                                      ri_error(a, d),         lsr_error(a, d)};
  if (const std::string violation = check_chain(reports); !violation.empty())
    throw VerificationFailure("inequality chain broken: " + violation);

  const int n = f.n();
  const Point w = reports[0].witness.gamma;
  auto worst = [](std::vector<PropertyReport> battery) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < battery.size(); ++i)
      if (estimate_value(battery[i].epsilon) > estimate_value(battery[best].epsilon)) best = i;
    return battery[best];
  };

  std::vector<PropertyReport> dth;
  dth.push_back(dth_deviation(f, BipartitePattern({"a"}, {"r"}, {{0, 0}}), InjectionMap({0}), d, options));
  dth.push_back(
      dth_deviation(f, BipartitePattern({"a", "b"}, {"r"}, {{0, 0}, {1, 0}}), InjectionMap({0, w}), d, options));
  if (n >= 2)
    dth.push_back(dth_deviation(f, BipartitePattern({"a", "b"}, {"r", "s"}, {{0, 0}, {1, 0}, {1, 1}}),
                                InjectionMap({0, w}), d, options));
  reports.push_back(worst(std::move(dth)));

  std::vector<PropertyReport> rain;
  rain.push_back(rain_deviation(f, SimplePattern::complete(2), InjectionMap({w, 0}), d, options));
  if (d >= 2 && n >= 2) rain.push_back(rain_deviation(f, SimplePattern::star(2), InjectionMap({0, 1, 2}), d, options));
  reports.push_back(worst(std::move(rain)));
  return reports;
}

namespace definitional {
namespace {

/// acc[x] = sum over z of sum_y g(y) g(y+x), g = f|_{S,z}, x in F_2^S compressed.
std::vector<std::int64_t> restricted_autocorrelation_sums(const BooleanFunction& f, Point s) {
  const int n = f.n();
  const int k = weight(s);
  std::vector<std::int64_t> acc(std::size_t{1} << k, 0);
  for_each_submask(low_mask(n) & ~s, [&](Point z) {
    const BooleanFunction g = restrict(f, Subcube(n, s, z));
    for (Point x = 0; x < g.size(); ++x)
      for (Point y = 0; y < g.size(); ++y) acc[x] += g.sign(y) * g.sign(y ^ x);
  });
  return acc;
}

}  // namespace

std::uint64_t restriction_scan_cost(int n, int d) {
  std::uint64_t total = 0;
  for (int k = 1; k <= d && k <= n; ++k) total += binomial(n, k) << (n + k);
  return total;
}

Rational rc_error(const BooleanFunction& f, int d, std::uint64_t budget) {
  const int n = f.n();
  check_rank(n, d);
  check_budget("restriction enumeration", restriction_scan_cost(n, d), budget);
  Rational worst(0);
  for (int k = 1; k <= d; ++k)
    for_each_k_subset(n, k, [&](Point s) {
      const auto acc = restricted_autocorrelation_sums(f, s);
      for (Point x = 0; x < acc.size(); ++x) {
        const Rational mean = Rational::dyadic(acc[x], n);
        worst = std::max(worst, (mean - Rational(x == 0 ? 1 : 0)).abs());
      }
    });
  return worst;
}

Rational ri_error(const BooleanFunction& f, int d, std::uint64_t budget) {
  const int n = f.n();
  check_rank(n, d);
  check_budget("restriction enumeration", restriction_scan_cost(n, d), budget);
  Rational worst(0);
  for (int k = 1; k <= d; ++k)
    for_each_k_subset(n, k, [&](Point s) {
      const auto acc = restricted_autocorrelation_sums(f, s);
      for (Point x = 1; x < acc.size(); ++x) {
        // Inf_x[g] = (1 - (g*g)(x)) / 2, averaged over z.
        const Rational influence = (Rational(1) - Rational::dyadic(acc[x], n)) * Rational(1, 2);
        worst = std::max(worst, (influence - Rational(1, 2)).abs());
      }
    });
  return worst;
}

Rational rf_error(const BooleanFunction& f, int d, std::uint64_t budget) {
  const int n = f.n();
  check_rank(n, d);
  check_budget("restriction enumeration", restriction_scan_cost(n, d), budget);
  Rational worst(0);
  for (int k = 1; k <= d; ++k)
    for_each_k_subset(n, k, [&](Point s) {
      std::vector<std::int64_t> acc(std::size_t{1} << k, 0);
      for_each_submask(low_mask(n) & ~s, [&](Point z) {
        const BooleanFunction g = restrict(f, Subcube(n, s, z));
        for (Point gamma = 0; gamma < g.size(); ++gamma) {
          std::int64_t c = 0;
          for (Point y = 0; y < g.size(); ++y) c += g.sign(y) * character_sign(gamma, y);
          acc[gamma] += c * c;
        }
      });
      for (Point gamma = 0; gamma < acc.size(); ++gamma)
        worst = std::max(worst, (Rational::dyadic(acc[gamma], n + k) - Rational::dyadic(1, k)).abs());
    });
  return worst;
}

Rational lsr_error(const BooleanFunction& f, int d, std::uint64_t budget) {
  const int n = f.n();
  check_rank(n, d);
  std::uint64_t ball = 0;
  for (int k = 1; k <= d; ++k) ball += binomial(n, k);
  check_budget("pair enumeration", (ball << n) << n, budget);
  std::int64_t total = 0;
  for (Point x = 0; x < f.size(); ++x) total += f.sign(x);
  const Rational p = Rational::dyadic((std::int64_t{1} << n) - 2 * total, n + 2);
  Rational worst(0);
  for (Point u = 0; u < f.size(); ++u)
    for_each_in_ball(n, d, [&](Point w) {
      worst = std::max(worst, (Rational::dyadic(codegree(f, u, u ^ w), n) - p).abs());
    });
  return worst;
}

}  // namespace definitional

}  // namespace qrbf
