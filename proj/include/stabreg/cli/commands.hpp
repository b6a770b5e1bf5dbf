#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace stabreg::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kInconclusive = 2, kUsage = 3 };

struct RunConfig {
  std::string command;
  std::string group;
  std::string set;
  std::string epsilon = "0.2";
  std::optional<std::string> mu;
  double r = 1.0;
  std::optional<int> k;
  int k_cap = 5;
  std::string mode = "bohr";  // bohr | subgroup | subgroup-constructive
  std::uint64_t budget_nodes = 4096;
  double budget_seconds = 0;
  std::optional<std::string> constants_file;
  std::string format = "json";
  std::uint64_t seed = 0;
  std::optional<int> depth_cap;
  bool timings = false;
  bool dump_function = false;
  bool against_oracle = false;
  std::string report_file;
  std::vector<std::string> groups, families, epsilons;
};

struct CommandResult {
  int exit_code = kOk;
  std::string output;
};

CommandResult cmd_analyze(const RunConfig& cfg);
CommandResult cmd_find_good(const RunConfig& cfg);
CommandResult cmd_verify(const RunConfig& cfg);
/// Verifies an already parsed report document given as text.
CommandResult verify_text(const std::string& report, bool against_oracle = false);
CommandResult cmd_sweep(const RunConfig& cfg);
CommandResult cmd_bohr(const RunConfig& cfg);

/// Dispatches on cfg.command; usage errors become exit code 3.
CommandResult run(const RunConfig& cfg);

}  // namespace stabreg::cli
