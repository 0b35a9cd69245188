#pragma once

#include <span>
#include <vector>

namespace specopt {

struct Summary {
  double mean = 0.0;
  double median = 0.0;
  double stddev = 0.0;  // sample standard deviation (divisor n - 1); 0 for n == 1
};

/// Throws std::invalid_argument on an empty sample.
Summary aggregate_stats(std::span<const double> values);

/// Pointwise summaries of equally long series.
struct TrajectoryStats {
  std::vector<double> mean;
  std::vector<double> median;
  std::vector<double> stddev;
};

/// Summarizes series[t][k] over t for each k. Shorter series are padded with
/// their last value up to `length`.
TrajectoryStats aggregate_trajectories(const std::vector<std::vector<double>>& series, std::size_t length);

}  // namespace specopt
