#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "specopt/harness.hpp"

namespace specopt {

/// %.17g, which round-trips every double. Non-finite values print as nan/inf/-inf.
std::string format_real(double v);

/// Per-method summary and f_best trajectory statistics. No timing fields.
std::string stats_json(const ExperimentResult& result);

/// Header `method,trial,iter,f_current,f_best,grad_norm`; rows sorted by
/// (method name, trial, iter). No timing fields.
std::string trajectories_csv(const ExperimentResult& result);

/// Config echo, seed, version, thread count and timing.
std::string runmeta_json(const ExperimentResult& result);

struct TrajectoryRow {
  std::string method;
  std::size_t trial = 0;
  std::size_t iter = 0;
  double f_current = 0.0;
  double f_best = 0.0;
  double grad_norm = 0.0;
};

/// Inverse of trajectories_csv. Throws std::runtime_error on a malformed document.
std::vector<TrajectoryRow> parse_trajectories_csv(std::string_view text);

/// Writes stats.json, trajectories.csv and runmeta.json into dir (created if needed).
void write_bundle(const ExperimentResult& result, const std::filesystem::path& dir);

std::string_view library_version();

}  // namespace specopt
