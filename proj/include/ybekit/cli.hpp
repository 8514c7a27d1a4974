#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>

#include "ybekit/brace.hpp"
#include "ybekit/permgroup.hpp"

namespace ybekit::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kIoError = 1,          ///< unreadable input, malformed JSON, non-permutation rows
  kInvalidSolution = 2,  ///< input parses but fails the solution axioms
  kBudget = 3,           ///< a cap or the time budget was exceeded
  kShapeFailure = 4,     ///< classification shape check failed (or an internal invariant broke)
};

struct RunConfig {
  std::string command;
  /// Path, "-" for stdin, or inline JSON (anything starting with '{').
  std::string input;
  std::size_t n = 0;
  std::size_t n_max = 0;
  std::size_t group_cap = PermGroup::kDefaultCap;
  std::size_t brace_cap = FiniteBrace::kDefaultCap;
  std::optional<double> time_budget_secs;
  std::string output;
  std::string csv_output;
  std::size_t threads = 1;
  bool allow_large = false;
  bool pretty = false;
  bool with_lambda = false;
};

int cmd_validate(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_analyze(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_enumerate(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_classify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_brace(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses arguments (YBEKIT_BUDGET_SECS overrides the time budget) and runs
/// the selected command.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ybekit::cli
