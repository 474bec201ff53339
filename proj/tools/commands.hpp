#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "json.hpp"
#include "qrbf/errors.hpp"
#include "qrbf/estimate.hpp"

namespace qrbf::cli {

enum class Format { text, data };

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailure = 1,
  kInputError = 2,
  kBudgetRefusal = 3,
};

struct RunConfig {
  std::string command;
  std::string input;
  /// 0 selects min(2, n).
  int d = 0;
  std::uint64_t seed = 0;
  std::uint64_t mc_samples = kDefaultSamples;
  std::uint64_t budget = kDefaultBudget;
  Format format = Format::text;
  std::string out;

  // construct
  std::string code;
  std::string inner = "ip";
  std::string table_out;

  // compare
  std::optional<std::pair<int, int>> zp_decay;
  double delta = 0.5;

  // generate
  std::string kind;
  int n = 0;
  std::string gamma = "0";
};

struct CommandResult {
  int exit_code = kSuccess;
  nlohmann::ordered_json report;
};

CommandResult cmd_analyze(const RunConfig& config);
CommandResult cmd_construct(const RunConfig& config);
CommandResult cmd_compare(const RunConfig& config);
CommandResult cmd_selftest(const RunConfig& config);
CommandResult cmd_generate(const RunConfig& config);

/// Dispatches on config.command and maps exceptions to exit codes; the
/// report then carries "error" and "message".
CommandResult run(const RunConfig& config);

/// Key-value rendering of a report. Nested objects become "[section]" blocks
/// and array elements "[section.i]" blocks; deeper levels use dotted keys.
std::string render_text(const nlohmann::ordered_json& report);

}  // namespace qrbf::cli
