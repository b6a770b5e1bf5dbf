#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "stabreg/cli/commands.hpp"

using stabreg::cli::RunConfig;

namespace {

void common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--group", cfg.group, "Group, e.g. Z12 or Z4xZ3")->required();
  sub->add_option("--set", cfg.set, "Set spec, e.g. subgroup:[3]")->required();
  sub->add_option("--seed", cfg.seed, "Seed for random: sets without their own seed");
  sub->add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  sub->add_flag("--timings", cfg.timings, "Include wall-clock timings (breaks byte-identity)");
}

void engine_flags(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--epsilon", cfg.epsilon, "Goodness parameter, decimal or n/d");
  sub->add_option("--mu", cfg.mu, "Density parameter for subgroup modes");
  sub->add_option("--r", cfg.r, "Integer width exponent");
  sub->add_option("--k", cfg.k, "Assumed stability index");
  sub->add_option("--k-cap", cfg.k_cap, "Largest index tried when --k is absent");
  sub->add_option("--mode", cfg.mode, "bohr, subgroup or subgroup-constructive")
      ->check(CLI::IsMember({"bohr", "subgroup", "subgroup-constructive"}));
  sub->add_option("--depth-cap", cfg.depth_cap, "Tree depth cap");
  sub->add_option("--budget-nodes", cfg.budget_nodes, "Tree nodes to expand");
  sub->add_option("--budget-seconds", cfg.budget_seconds, "Wall-clock budget, 0 for none");
  sub->add_option("--constants", cfg.constants_file, "JSON file with ledger constants");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stability and regularity analysis of subsets of finite abelian groups"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string out_path;
  app.add_option("--out", out_path, "Write the report to a file");

  auto* analyze = app.add_subcommand("analyze", "Stability index, VC dimension, tree bound, spectrum");
  common(analyze, cfg);
  analyze->add_option("--k-cap", cfg.k_cap, "Largest stability index searched");
  analyze->add_flag("--dump-function", cfg.dump_function, "Include the balanced function");
  analyze->add_option("--out", out_path, "Write the report to a file");

  auto* find = app.add_subcommand("find-good", "Search for a good Bohr set or subgroup");
  common(find, cfg);
  engine_flags(find, cfg);
  find->add_option("--out", out_path, "Write the report to a file");

  auto* verify = app.add_subcommand("verify", "Re-check a report");
  verify->add_option("report", cfg.report_file, "Report JSON file")->required();
  verify->add_flag("--against-oracle", cfg.against_oracle, "Cross-check the index by brute force");
  verify->add_option("--out", out_path, "Write the report to a file");

  auto* sweep = app.add_subcommand("sweep", "Grid of groups, set families and epsilons as CSV");
  sweep->add_option("--groups", cfg.groups, "Groups")->delimiter(',');
  sweep->add_option("--families", cfg.families, "cosets, subgroups, intervals, random, empty")->delimiter(',');
  sweep->add_option("--epsilons", cfg.epsilons, "Epsilon values")->delimiter(',');
  sweep->add_option("--seed", cfg.seed, "Seed for the random family");
  engine_flags(sweep, cfg);
  sweep->add_option("--out", out_path, "Write the CSV to a file");

  auto* bohr = app.add_subcommand("bohr", "Regularity and sub-Bohr report for bohr: sets");
  bohr->add_option("--group", cfg.group, "Group")->required();
  bohr->add_option("--set", cfg.set, "bohr:K=[chars],rho=w")->required();
  bohr->add_option("--epsilon", cfg.epsilon, "Closeness for the narrower Bohr set");
  bohr->add_option("--out", out_path, "Write the report to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : stabreg::cli::kUsage;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  const auto res = stabreg::cli::run(cfg);
  if (res.exit_code == stabreg::cli::kUsage) {
    std::cerr << res.output;
    return res.exit_code;
  }
  if (out_path.empty()) {
    std::cout << res.output;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return stabreg::cli::kUsage;
    }
    f << res.output;
  }
  return res.exit_code;
}
