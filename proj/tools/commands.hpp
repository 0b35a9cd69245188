#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "specopt/checks.hpp"

namespace specopt::cli {

/// Exit codes shared by all subcommands.
enum ExitCode : int { kOk = 0, kConfigError = 1, kCellFailure = 2 };

struct Overrides {
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> trials;
};

/// SPECOPT_THREADS if set to a positive integer, else the machine's parallelism.
unsigned thread_budget();

int cmd_run(const std::filesystem::path& config_path, const std::filesystem::path& out_dir,
            const Overrides& overrides, unsigned threads, std::ostream& out, std::ostream& err);

int cmd_sweep(const std::filesystem::path& base_config_path, const std::vector<double>& lambda1_list,
              const std::vector<double>& lambda2_list, const std::filesystem::path& out_dir,
              const Overrides& overrides, unsigned threads, std::ostream& out, std::ostream& err);

int cmd_check(CheckLevel level, std::ostream& out, std::ostream& err);

/// `point` is a comma-separated list of reals.
int cmd_specgrad(const std::string& function_name, const std::string& point, std::ostream& out,
                 std::ostream& err);

/// Directory name of a sweep cell, e.g. l1_0.1_l2_10.
std::string sweep_cell_name(double lambda1, double lambda2);

}  // namespace specopt::cli
