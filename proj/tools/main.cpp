#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace specopt::cli;
  CLI::App app{"specopt: specular gradient methods and their benchmark harness"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  std::uint64_t seed = 0;
  std::size_t trials = 0;

  auto add_overrides = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "Experiment config (JSON)")->required();
    sub->add_option("--out", out_dir, "Output directory")->required();
    sub->add_option("--seed", seed, "Override the config seed");
    sub->add_option("--trials", trials, "Override the number of trials")->check(CLI::PositiveNumber);
  };

  auto* run = app.add_subcommand("run", "Run an experiment and write stats.json, trajectories.csv, runmeta.json");
  add_overrides(run);

  auto* sweep = app.add_subcommand("sweep", "Run a config over the cross product of lambda1 and lambda2 values");
  add_overrides(sweep);
  std::vector<double> lambda1_list;
  std::vector<double> lambda2_list;
  sweep->add_option("--lambda1", lambda1_list, "Comma-separated lambda1 values")->delimiter(',')->required();
  sweep->add_option("--lambda2", lambda2_list, "Comma-separated lambda2 values")->delimiter(',')->required();

  auto* check = app.add_subcommand("check", "Run the invariant suites");
  std::string level = "fast";
  check->add_option("--level", level, "fast (10^2 samples per suite) or full (10^4)")
      ->check(CLI::IsMember({"fast", "full"}));

  auto* specgrad = app.add_subcommand("specgrad", "Print the specular gradient of a catalog function as JSON");
  std::string function_name;
  std::string point;
  specgrad->add_option("function", function_name, "abs, maxaffine, quadkink, quad, abs2d, norm2, halfsq")->required();
  specgrad->add_option("point", point, "Comma-separated coordinates")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kConfigError;
  }

  Overrides overrides;
  if (run->parsed() || sweep->parsed()) {
    auto* sub = run->parsed() ? run : sweep;
    if (sub->count("--seed")) overrides.seed = seed;
    if (sub->count("--trials")) overrides.trials = trials;
  }

  if (run->parsed())
    return cmd_run(config_path, out_dir, overrides, thread_budget(), std::cout, std::cerr);
  if (sweep->parsed())
    return cmd_sweep(config_path, lambda1_list, lambda2_list, out_dir, overrides, thread_budget(), std::cout,
                     std::cerr);
  if (check->parsed())
    return cmd_check(level == "full" ? specopt::CheckLevel::kFull : specopt::CheckLevel::kFast, std::cout,
                     std::cerr);
  return cmd_specgrad(function_name, point, std::cout, std::cerr);
}
