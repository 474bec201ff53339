#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"

namespace {

using qrbf::cli::Format;
using qrbf::cli::RunConfig;

void add_common(CLI::App* sub, RunConfig& c) {
  sub->add_option("--d", c.d, "rank parameter (default min(2, n))")->check(CLI::NonNegativeNumber);
  sub->add_option("--seed", c.seed, "sampling seed");
  sub->add_option("--mc-samples", c.mc_samples, "Monte Carlo sample count")->check(CLI::PositiveNumber);
  sub->add_option("--budget", c.budget, "operation budget for exact scans")->check(CLI::PositiveNumber);
  sub->add_option("--format", c.format, "text or data (JSON)")
      ->transform(CLI::CheckedTransformer(std::map<std::string, Format>{{"text", Format::text}, {"data", Format::data}}));
  sub->add_option("--out", c.out, "write the report here as text plus <out>.json");
}

bool write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  out << content;
  return static_cast<bool>(out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Balanced-influence and quasirandomness analysis of Boolean functions"};
  app.require_subcommand(1);
  RunConfig c;

  auto* analyze = app.add_subcommand("analyze", "evaluate every property for a truth table");
  analyze->add_option("input", c.input, "truth table file")->required();
  add_common(analyze, c);

  auto* construct = app.add_subcommand("construct", "build and verify g(Hx) from a parity-check matrix");
  construct->add_option("--code", c.code, "parity-check matrix file")->required();
  construct->add_option("--inner", c.inner, "'ip' or a truth table for g");
  construct->add_option("--table", c.table_out, "write the composed truth table here");
  add_common(construct, c);

  auto* compare = app.add_subcommand("compare", "other pseudorandomness measures and their relations");
  compare->add_option("input", c.input, "truth table file");
  compare->add_option("--delta", c.delta, "noise rate; rho = 1 - delta")->check(CLI::Range(0.0, 1.0));
  std::string decay;
  compare->add_option("--zp-decay", decay, "a:b, tabulate the character chi_1 for n in [a, b]");
  add_common(compare, c);

  auto* selftest = app.add_subcommand("selftest", "built-in identity checks");
  add_common(selftest, c);

  auto* generate = app.add_subcommand("generate", "write a standard function");
  generate->add_option("--kind", c.kind, "ip, character, constant or random")->required();
  generate->add_option("--n", c.n, "number of variables")->required()->check(CLI::NonNegativeNumber);
  generate->add_option("--gamma", c.gamma, "character index in hex");
  generate->add_option("--table", c.table_out, "output file (otherwise embedded in the report)");
  add_common(generate, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return qrbf::cli::kInputError;
  }

  c.command = app.get_subcommands().front()->get_name();
  if (!decay.empty()) {
    const auto colon = decay.find(':');
    try {
      if (colon == std::string::npos) throw std::invalid_argument("missing ':'");
      std::size_t used_a = 0, used_b = 0;
      const std::string a = decay.substr(0, colon), b = decay.substr(colon + 1);
      c.zp_decay = {std::stoi(a, &used_a), std::stoi(b, &used_b)};
      if (used_a != a.size() || used_b != b.size()) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      std::cerr << "--zp-decay expects a:b\n";
      return qrbf::cli::kInputError;
    }
  }

  const auto result = qrbf::cli::run(c);
  const std::string text = qrbf::cli::render_text(result.report);
  const std::string data = result.report.dump(2) + "\n";
  std::cout << (c.format == Format::data ? data : text);
  if (!c.out.empty() && !(write_file(c.out, text) && write_file(c.out + ".json", data))) {
    std::cerr << "cannot write '" << c.out << "'\n";
    return qrbf::cli::kInputError;
  }
  return result.exit_code;
}
