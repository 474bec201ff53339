#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qrbf {

/// Default cap on the number of elementary operations a single scan may cost.
inline constexpr std::uint64_t kDefaultBudget = 1'000'000'000ULL;

/// Thrown when a requested computation would exceed the operation budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::string scan, std::uint64_t estimate, std::uint64_t budget)
      : std::runtime_error(scan + ": estimated cost " + std::to_string(estimate) +
                           " exceeds budget " + std::to_string(budget)),
        scan_(std::move(scan)),
        estimate_(estimate),
        budget_(budget) {}

  const std::string& scan() const noexcept { return scan_; }
  std::uint64_t estimate() const noexcept { return estimate_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::string scan_;
  std::uint64_t estimate_;
  std::uint64_t budget_;
};

inline void check_budget(const std::string& scan, std::uint64_t estimate, std::uint64_t budget) {
  if (estimate > budget) throw BudgetExceeded(scan, estimate, budget);
}

/// Malformed input file; carries the 1-based line number where parsing failed.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// An identity or inequality that must hold failed; the message names the witness.
class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qrbf
