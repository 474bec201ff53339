#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "commands.hpp"
#include "qrbf/constructions.hpp"
#include "qrbf/io.hpp"

namespace qrbf::cli {
namespace {

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("qrbf_cli_" + name)).string();
}

RunConfig analyze_config(const std::string& path) {
  RunConfig c;
  c.command = "analyze";
  c.input = path;
  return c;
}

TEST(Cli, AnalyzeIsByteIdenticalAcrossRuns) {
  const std::string path = temp_path("ip4.txt");
  save_truth_table(path, inner_product(2));
  const auto a = run(analyze_config(path)), b = run(analyze_config(path));
  EXPECT_EQ(a.exit_code, kSuccess);
  EXPECT_EQ(a.report.dump(), b.report.dump());
  EXPECT_EQ(render_text(a.report), render_text(b.report));
  for (const auto& p : a.report["properties"])
    if (p["property"] != "DTH") {
      EXPECT_EQ(p["epsilon"]["value"], "0/1") << p["property"];
    }
  EXPECT_EQ(a.report["seed"], 0);
}

TEST(Cli, AnalyzeCharacterAtRankOne) {
  const std::string path = temp_path("chi.txt");
  save_truth_table(path, BooleanFunction::character(4, 0xf));
  RunConfig c = analyze_config(path);
  c.d = 1;
  const auto r = run(c);
  EXPECT_EQ(r.report["properties"][0]["property"], "INF");
  EXPECT_EQ(r.report["properties"][0]["epsilon"]["value"], "1/2");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run(analyze_config(temp_path("missing.txt"))).exit_code, kInputError);
  const std::string odd = temp_path("odd.txt");
  std::ofstream(odd) << "n=2\n+-+\n";
  const auto parsed = run(analyze_config(odd));
  EXPECT_EQ(parsed.exit_code, kInputError);
  EXPECT_EQ(parsed.report["line"], 2);
  const std::string ok = temp_path("r.txt");
  save_truth_table(ok, BooleanFunction::character(6, 1));
  RunConfig tight = analyze_config(ok);
  tight.budget = 5;
  EXPECT_EQ(run(tight).exit_code, kBudgetRefusal);
  RunConfig unknown;
  unknown.command = "frobnicate";
  EXPECT_EQ(run(unknown).exit_code, kInputError);
}

TEST(Cli, ConstructRejectsOddRedundancyForInnerProduct) {
  const std::string code = temp_path("h3.txt");
  std::ofstream(code) << hamming_parity_check(3).to_text();
  RunConfig c;
  c.command = "construct";
  c.code = code;
  EXPECT_EQ(run(c).exit_code, kInputError);
}

TEST(Cli, ConstructExtendedHammingPasses) {
  const std::string code = temp_path("eh3.txt");
  std::ofstream(code) << extended_hamming(3).to_text();
  RunConfig c;
  c.command = "construct";
  c.code = code;
  c.table_out = temp_path("eh3_table.txt");
  const auto r = run(c);
  EXPECT_EQ(r.exit_code, kSuccess);
  EXPECT_EQ(r.report["d_star"], 3);
  EXPECT_EQ(r.report["verdict"], "pass");
  EXPECT_EQ(load_truth_table(c.table_out), compose(inner_product(2), extended_hamming(3)));
}

TEST(Cli, SelftestPassesForSeveralSeeds) {
  for (std::uint64_t seed : {0u, 1u, 99u}) {
    RunConfig c;
    c.command = "selftest";
    c.seed = seed;
    const auto r = run(c);
    EXPECT_EQ(r.exit_code, kSuccess) << render_text(r.report);
  }
}

TEST(Cli, CompareReportsGowersAndProfile) {
  const std::string path = temp_path("cmp.txt");
  save_truth_table(path, inner_product(2));
  RunConfig c;
  c.command = "compare";
  c.input = path;
  c.zp_decay = std::pair{4, 6};
  const auto r = run(c);
  EXPECT_EQ(r.exit_code, kSuccess);
  EXPECT_DOUBLE_EQ(r.report["gowers"][2]["value"].get<double>(), 1.0);
  EXPECT_EQ(r.report["r_regularity"]["2"], "1/4");
  EXPECT_EQ(r.report["zp_decay"].size(), 3u);
}

TEST(Cli, GenerateCharacter) {
  RunConfig c;
  c.command = "generate";
  c.kind = "character";
  c.n = 3;
  c.gamma = "5";
  const auto r = run(c);
  EXPECT_EQ(r.exit_code, kSuccess);
  EXPECT_EQ(r.report["truth_table"], "n=3\n+-+--+-+\n");
  c.gamma = "zz";
  EXPECT_EQ(run(c).exit_code, kInputError);
}

TEST(Cli, RenderTextSections) {
  nlohmann::ordered_json j;
  j["a"] = 1;
  j["b"] = {{"x", "1/2"}, {"y", {{"z", true}}}};
  j["c"] = nlohmann::ordered_json::array({{{"k", 2}}});
  EXPECT_EQ(render_text(j), "a: 1\n\n[b]\nx: 1/2\ny.z: true\n\n[c.0]\nk: 2\n");
}

}  // namespace
}  // namespace qrbf::cli
