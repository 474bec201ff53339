#include "commands.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "qrbf/constructions.hpp"
#include "qrbf/core.hpp"
#include "qrbf/extant.hpp"
#include "qrbf/graphs.hpp"
#include "qrbf/injective.hpp"
#include "qrbf/io.hpp"
#include "qrbf/properties.hpp"
#include "qrbf/random.hpp"

namespace qrbf::cli {
namespace {

using nlohmann::ordered_json;

std::string hex(Point x) {
  std::ostringstream os;
  os << "0x" << std::hex << x;
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

int resolve_rank(int requested, int n) {
  if (requested != 0) return requested;
  return std::min(2, n);
}

SamplingOptions sampling(const RunConfig& c) { return {Mode::automatic, c.budget, c.seed, c.mc_samples}; }

ordered_json header(const RunConfig& c, const std::string& command) {
  ordered_json r;
  r["command"] = command;
  r["seed"] = c.seed;
  r["mc_samples"] = c.mc_samples;
  r["budget"] = c.budget;
  return r;
}

ordered_json estimate_json(const Estimate& e) {
  ordered_json j;
  if (const auto* exact = std::get_if<Rational>(&e)) {
    j["value"] = exact->to_string();
    j["exact"] = true;
    return j;
  }
  const auto& m = std::get<MonteCarloEstimate>(e);
  j["value"] = m.mean;
  j["exact"] = false;
  j["std_error"] = m.std_error;
  j["ci99_low"] = m.ci_low;
  j["ci99_high"] = m.ci_high;
  j["samples"] = m.samples;
  j["seed"] = m.seed;
  return j;
}

ordered_json report_json(const PropertyReport& r) {
  ordered_json j;
  j["property"] = to_string(r.property);
  j["d"] = r.d;
  j["epsilon"] = estimate_json(r.epsilon);
  j["witness"] = r.witness.to_string();
  j["mean_zero_ok"] = r.mean_zero_ok;
  j["degenerate"] = r.degenerate;
  for (const auto& [key, value] : r.details) j[key] = value;
  return j;
}

ordered_json gowers_json(const GowersResult& g) {
  ordered_json j;
  j["k"] = g.k;
  j["value"] = g.value;
  j["method"] = g.method == GowersMethod::exact ? "exact" : "sampled";
  if (g.power) j["power"] = g.power->to_string();
  if (g.method == GowersMethod::sampled) {
    j["std_error"] = g.std_error;
    j["samples"] = g.samples;
  }
  return j;
}

ordered_json decay_table(int first, int last) {
  if (first < 1 || last > kMaxZpDimension || first > last)
    throw std::invalid_argument("decay range must satisfy 1 <= a <= b <= 20");
  ordered_json rows = ordered_json::array();
  double previous = 0;
  for (int n = first; n <= last; ++n) {
    const ZpCorrelation z = zp_regularity_error(BooleanFunction::character(n, low_mask(n)));
    ordered_json row;
    row["n"] = n;
    row["j"] = z.j;
    row["magnitude"] = z.magnitude;
    if (n > first) row["ratio"] = z.magnitude / previous;
    previous = z.magnitude;
    rows.push_back(row);
  }
  return rows;
}

struct Check {
  explicit Check(std::string check_name) : name(std::move(check_name)) {}
  std::string name;
  bool pass = true;
  std::string witness;
};

void fail(Check& c, const std::string& witness) {
  if (c.pass) c.witness = witness;
  c.pass = false;
}

std::vector<Check> selftest_battery(std::uint64_t seed) {
  std::vector<Check> checks;

  Check parseval{"parseval"};
  for (int n = 1; n <= 10; ++n) {
    const Spectrum s = walsh_transform(random_function(n, seed + static_cast<std::uint64_t>(n)));
    std::int64_t total = 0;
    for (auto w : s.W) total += w * w;
    if (total != (std::int64_t{1} << (2 * n))) fail(parseval, "n=" + std::to_string(n));
  }
  checks.push_back(parseval);

  Check influence_identity{"influence_autocorrelation"};
  {
    const BooleanFunction f = random_function(6, seed);
    const AutocorrelationTable t = autocorrelation(f);
    for (Point g = 0; g < f.size(); ++g)
      if (influence(f, g) != influence(t, g)) fail(influence_identity, "gamma=" + hex(g));
  }
  checks.push_back(influence_identity);

  Check restriction{"restriction_fourier"};
  {
    const BooleanFunction f = random_function(6, seed + 100);
    const Spectrum s = walsh_transform(f);
    for (Point free : {Point{0x3}, Point{0x15}, Point{0x2e}}) {
      for (Point fixed : {Point{0}, low_mask(6) & ~free}) {
        const Subcube cube(6, free, fixed);
        const Spectrum local = walsh_transform(restrict(f, cube));
        for (Point g = 0; g < local.W.size(); ++g)
          if (restricted_fourier_identity(s, cube, deposit(g, free)) != local.coefficient(g))
            fail(restriction, "free=" + hex(free) + " fixed=" + hex(fixed) + " gamma=" + hex(g));
      }
    }
  }
  checks.push_back(restriction);

  Check chain{"implication_chain"};
  for (std::uint64_t i = 0; i < 10; ++i) {
    const BooleanFunction f = random_function(8, seed + 200 + i);
    const Analysis a(f);
    for (int d = 1; d <= 3; ++d) {
      const std::vector<PropertyReport> reports{inf_error(a, d), sd_error(a, d), rf_error(a, d),
                                                rc_error(a, d),  ri_error(a, d, 0), lsr_error(a, d)};
      if (const auto v = check_chain(reports); !v.empty()) fail(chain, "sample " + std::to_string(i) + ": " + v);
    }
  }
  checks.push_back(chain);

  Check reductions{"restriction_reductions"};
  {
    const BooleanFunction f = random_function(6, seed + 300);
    for (int d = 1; d <= 2; ++d) {
      if (definitional::rc_error(f, d) != std::get<Rational>(rc_error(f, d).epsilon)) fail(reductions, "rc d=" + std::to_string(d));
      if (definitional::rf_error(f, d) != std::get<Rational>(rf_error(f, d).epsilon)) fail(reductions, "rf d=" + std::to_string(d));
      if (definitional::lsr_error(f, d) != std::get<Rational>(lsr_error(f, d).epsilon)) fail(reductions, "lsr d=" + std::to_string(d));
    }
  }
  checks.push_back(reductions);

  Check expansion{"subgraph_expansion"};
  for (const auto& g : {SimplePattern::complete(3), SimplePattern::path(2), SimplePattern::star(3)}) {
    for (std::uint64_t i = 0; i < 3; ++i) {
      CounterRng rng(seed + 400, i);
      const double x = rng.uniform01() * 2 - 1, y = rng.uniform01() * 2 - 1, z = rng.uniform01() * 2 - 1;
      const double closed = std::pow(1 + x + y + z, static_cast<double>(g.edges().size()));
      if (std::abs(subgraph_expansion_sum(g, x, y, z) - closed) > 1e-12 * std::max(1.0, std::abs(closed)))
        fail(expansion, to_text(g));
    }
  }
  checks.push_back(expansion);

  Check tower{"tower_construction"};
  {
    const std::pair<BooleanFunction, LinearCode> cases[] = {
        {inner_product(2), extended_hamming(3)},
        {inner_product(1), hamming_parity_check(2)},
        {inner_product(2), example_hamming_matrix()},
    };
    for (const auto& [g, code] : cases) {
      const TowerVerdict v = verify_tower(g, code);
      if (!v.ok()) fail(tower, "n=" + std::to_string(v.n) + ": " + v.failure);
    }
  }
  checks.push_back(tower);

  Check engine{"injective_engine"};
  for (std::uint64_t i = 0; i < 20; ++i) {
    CounterRng rng(seed + 500, i);
    SlotTables t{3, {}};
    const auto m = static_cast<std::size_t>(rng.below(5));
    for (std::size_t s = 0; s < m; ++s) {
      std::vector<std::uint8_t> slot(8);
      for (auto& b : slot) b = static_cast<std::uint8_t>(rng.below(2));
      t.slots.push_back(slot);
    }
    if (injective_mean_exact(t) != injective_mean_enumerated(t)) fail(engine, "table " + std::to_string(i));
  }
  checks.push_back(engine);

  Check sampled{"homomorphism_sampling"};
  {
    const BooleanFunction f = random_function(5, seed + 700);
    const BipartitePattern g({"a", "b"}, {"r", "s"}, {{0, 0}, {1, 0}, {1, 1}});
    const InjectionMap psi({0, 0x3});
    const Rational exact = std::get<Rational>(bhom_fixed_left(g, psi, f, {Mode::exact, kDefaultBudget, 0, 0}));
    const auto mc = std::get<MonteCarloEstimate>(bhom_fixed_left(g, psi, f, {Mode::montecarlo, kDefaultBudget, seed, 20'000}));
    if (std::abs(mc.mean - exact.to_double()) > 4 * mc.std_error + 1e-12)
      fail(sampled, "exact " + exact.to_string() + " sampled " + mc.to_string());
  }
  checks.push_back(sampled);

  Check rainbow{"rainbow_single_edge"};
  {
    const BooleanFunction f = random_function(6, seed + 600);
    for_each_in_ball(6, 2, [&](Point u) {
      const Estimate e = rainbow_embedding_density(SimplePattern::complete(2), InjectionMap({u, 0}), f, 2,
                                                   {Mode::exact, kDefaultBudget, 0, 0});
      if (std::get<Rational>(e) != Rational(1) - influence(f, u)) fail(rainbow, "u=" + hex(u));
    });
  }
  checks.push_back(rainbow);

  Check bent{"bent_inner_product"};
  for (int m = 1; m <= 5; ++m) {
    const BooleanFunction ip = inner_product(m);
    const AutocorrelationTable t = autocorrelation(ip);
    bool flat = true;
    for (Point g = 0; g < ip.size(); ++g) flat &= t.A[g] == (g == 0 ? static_cast<std::int64_t>(ip.size()) : 0);
    if (!is_bent(ip).ok || !flat) fail(bent, "m=" + std::to_string(m));
  }
  checks.push_back(bent);

  return checks;
}

void flatten(const ordered_json& j, const std::string& prefix, std::ostringstream& os) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) flatten(value, prefix.empty() ? key : prefix + "." + key, os);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "." + std::to_string(i), os);
  } else {
    os << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
  }
}

}  // namespace

std::string render_text(const ordered_json& report) {
  std::ostringstream os;
  for (const auto& [key, value] : report.items()) {
    if (value.is_object()) {
      os << "\n[" << key << "]\n";
      flatten(value, "", os);
    } else if (value.is_array() && !value.empty() && value.front().is_object()) {
      for (std::size_t i = 0; i < value.size(); ++i) {
        os << "\n[" << key << '.' << i << "]\n";
        flatten(value[i], "", os);
      }
    } else {
      flatten(value, key, os);
    }
  }
  return os.str();
}

CommandResult cmd_analyze(const RunConfig& c) {
  if (c.input.empty()) throw std::invalid_argument("analyze needs an input truth table");
  const BooleanFunction f = load_truth_table(c.input);
  const int d = resolve_rank(c.d, f.n());
  const std::vector<PropertyReport> reports = full_report(f, d, sampling(c));
  const Spectrum s = walsh_transform(f);

  CommandResult result;
  auto& r = result.report;
  r = header(c, "analyze");
  r["n"] = f.n();
  r["d"] = d;
  r["fhat0"] = s.coefficient(0).to_string();
  r["mean_zero_ok"] = 2 * std::abs(s.W[0]) < static_cast<std::int64_t>(f.size());
  r["chain"] = "holds";
  r["properties"] = ordered_json::array();
  for (const auto& p : reports) r["properties"].push_back(report_json(p));
  return result;
}

CommandResult cmd_construct(const RunConfig& c) {
  if (c.code.empty()) throw std::invalid_argument("construct needs --code");
  const LinearCode code = LinearCode::parse(read_file(c.code));
  CommandResult result;
  auto& r = result.report;
  r = header(c, "construct");
  r["code_n"] = code.n();
  r["code_k"] = code.k();

  const int inner_bits = code.redundancy();
  BooleanFunction g(0);
  if (c.inner == "ip") {
    if (inner_bits % 2 != 0 || inner_bits == 0)
      throw std::invalid_argument("inner product needs a positive even number of parity checks; n-k is " +
                                  std::to_string(inner_bits));
    g = inner_product(inner_bits / 2);
  } else {
    g = load_truth_table(c.inner);
    if (inner_bits % 2 != 0) r["warning"] = "n-k is odd, so the inner function cannot be bent";
  }
  const BentCertificate cert = is_bent(g);
  r["inner_bent"] = cert.ok;
  if (!cert.ok) r["inner_worst_gamma"] = hex(cert.worst_gamma);

  const TowerVerdict v = verify_tower(g, code);
  const BooleanFunction f = compose(g, code);
  if (!c.table_out.empty()) {
    save_truth_table(c.table_out, f);
    r["table"] = c.table_out;
  }
  r["n"] = v.n;
  r["d_star"] = v.d_star;
  r["inf_error"] = v.inf_error.to_string();
  r["inf_witness"] = hex(v.inf_witness);
  r["separation_applicable"] = v.separation_applicable;
  if (v.separation_applicable) {
    r["separation_witness"] = hex(v.separation_witness);
    r["separation_influence"] = v.separation_influence.to_string();
  }
  r["fhat0"] = v.mean.to_string();
  r["mean_matches"] = v.mean_matches;
  r["mean_zero_ok"] = v.mean_zero_ok;
  r["mean_bounded"] = v.mean_bounded;
  r["verdict"] = v.ok() ? "pass" : "fail";
  if (!v.ok()) {
    r["failure"] = v.failure;
    result.exit_code = kVerificationFailure;
  }
  return result;
}

CommandResult cmd_compare(const RunConfig& c) {
  CommandResult result;
  auto& r = result.report;
  r = header(c, "compare");
  if (c.input.empty() && !c.zp_decay) throw std::invalid_argument("compare needs an input truth table or --zp-decay");

  if (!c.input.empty()) {
    const BooleanFunction f = load_truth_table(c.input);
    const int n = f.n();
    r["n"] = n;

    ordered_json gowers = ordered_json::array();
    for (int k = 1; k <= 4; ++k) {
      try {
        gowers.push_back(gowers_json(gowers_norm(f, k, sampling(c))));
      } catch (const BudgetExceeded& e) {
        gowers.push_back({{"k", k}, {"refused", e.what()}});
      }
    }
    r["gowers"] = gowers;

    ordered_json profile = ordered_json::object();
    for (int d = 0; d <= n; ++d) profile[std::to_string(d)] = r_regular_error(f, d).magnitude.to_string();
    r["r_regularity"] = profile;

    if (n >= 1 && n <= kMaxZpDimension) {
      const ZpCorrelation z = zp_regularity_error(f);
      r["zp_regularity"] = {{"j", z.j}, {"magnitude", z.magnitude}};
    } else {
      r["zp_regularity"] = {{"skipped", "requires 1 <= n <= 20"}};
    }

    if (n >= 1) {
      const Spectrum s = walsh_transform(f);
      ordered_json stable = ordered_json::object();
      for (int tenth = 1; tenth <= 9; ++tenth) {
        const double rho = tenth / 10.0;
        double worst = 0;
        int arg = 1;
        for (int i = 1; i <= n; ++i) {
          const double v = stable_influence(s, i, rho);
          if (v > worst) worst = v, arg = i;
        }
        std::ostringstream key;
        key << "rho_0." << tenth;
        stable[key.str()] = {{"max", worst}, {"coordinate", arg}};
      }
      r["stable_influence"] = stable;

      const int d = resolve_rank(c.d, n);
      const RelationReport rel = relation_battery(f, d, c.delta, sampling(c));
      ordered_json j;
      j["d"] = rel.d;
      j["inf_error"] = rel.inf_error.to_string();
      j["max_coefficient"] = rel.max_coefficient.to_string();
      j["coefficient_bound"] = rel.coefficient_bound;
      j["coefficient_bound_holds"] = rel.coefficient_bound_holds;
      j["lift_checked"] = rel.lift_checked;
      if (rel.lift_checked) {
        j["lift_gowers_gap"] = rel.lift_gowers_gap;
        j["lifted_influence"] = rel.lifted_influence.to_string();
        j["lift_holds"] = rel.lift_holds;
      }
      j["delta"] = rel.delta;
      j["rho"] = 1.0 - rel.delta;
      j["sd_error"] = rel.sd_error.to_string();
      j["max_stable_influence"] = rel.max_stable_influence;
      j["literal_bound"] = rel.literal_bound;
      j["literal_bound_holds"] = rel.literal_bound_holds;
      j["corrected_bound"] = rel.corrected_bound;
      j["corrected_bound_holds"] = rel.corrected_bound_holds;
      r["relations"] = j;
      if (!rel.ok()) result.exit_code = kVerificationFailure;
    }
  }

  if (c.zp_decay) r["zp_decay"] = decay_table(c.zp_decay->first, c.zp_decay->second);
  return result;
}

CommandResult cmd_selftest(const RunConfig& c) {
  CommandResult result;
  auto& r = result.report;
  r = header(c, "selftest");
  const auto checks = selftest_battery(c.seed);
  bool all = true;
  r["checks"] = ordered_json::array();
  for (const auto& check : checks) {
    ordered_json j{{"name", check.name}, {"pass", check.pass}};
    if (!check.pass) j["witness"] = check.witness;
    r["checks"].push_back(j);
    all &= check.pass;
  }
  r["result"] = all ? "pass" : "fail";
  if (!all) result.exit_code = kVerificationFailure;
  return result;
}

CommandResult cmd_generate(const RunConfig& c) {
  BooleanFunction f(0);
  if (c.kind == "ip") {
    if (c.n < 2 || c.n % 2 != 0) throw std::invalid_argument("inner product needs an even n >= 2");
    f = inner_product(c.n / 2);
  } else if (c.kind == "character") {
    std::size_t used = 0;
    const Point gamma = std::stoull(c.gamma, &used, 16);
    if (used != c.gamma.size()) throw std::invalid_argument("gamma must be hexadecimal");
    if (c.n < 0 || c.n > BooleanFunction::kMaxDimension || gamma >> c.n != 0)
      throw std::invalid_argument("gamma must fit in n bits");
    f = BooleanFunction::character(c.n, gamma);
  } else if (c.kind == "constant") {
    f = BooleanFunction::constant(c.n, 1);
  } else if (c.kind == "random") {
    f = random_function(c.n, c.seed);
  } else {
    throw std::invalid_argument("unknown kind '" + c.kind + "'; expected ip, character, constant or random");
  }
  CommandResult result;
  auto& r = result.report;
  r = header(c, "generate");
  r["kind"] = c.kind;
  r["n"] = f.n();
  if (!c.table_out.empty()) {
    save_truth_table(c.table_out, f);
    r["table"] = c.table_out;
  } else {
    r["truth_table"] = to_truth_table_text(f);
  }
  return result;
}

CommandResult run(const RunConfig& config) {
  auto failure = [&](int code, const std::string& kind, const std::string& message) {
    CommandResult r;
    r.exit_code = code;
    r.report = header(config, config.command);
    r.report["error"] = kind;
    r.report["message"] = message;
    return r;
  };
  try {
    if (config.command == "analyze") return cmd_analyze(config);
    if (config.command == "construct") return cmd_construct(config);
    if (config.command == "compare") return cmd_compare(config);
    if (config.command == "selftest") return cmd_selftest(config);
    if (config.command == "generate") return cmd_generate(config);
    return failure(kInputError, "input", "unknown command '" + config.command + "'");
  } catch (const VerificationFailure& e) {
    return failure(kVerificationFailure, "verification", e.what());
  } catch (const BudgetExceeded& e) {
    CommandResult r = failure(kBudgetRefusal, "budget", e.what());
    r.report["scan"] = e.scan();
    r.report["estimate"] = e.estimate();
    return r;
  } catch (const ParseError& e) {
    CommandResult r = failure(kInputError, "parse", e.what());
    r.report["line"] = e.line();
    return r;
  } catch (const std::exception& e) {
    return failure(kInputError, "input", e.what());
  }
}

}  // namespace qrbf::cli
