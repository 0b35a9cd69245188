#include "specopt/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace specopt {

Summary aggregate_stats(std::span<const double> values) {
  if (values.empty()) throw std::invalid_argument("aggregate_stats: empty sample");
  const double n = static_cast<double>(values.size());
  double sum = 0.0;
  for (double v : values) sum += v;
  Summary s;
  s.mean = sum / n;
  if (values.size() > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - s.mean) * (v - s.mean);
    s.stddev = std::sqrt(ss / (n - 1.0));
  }
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  const std::size_t mid = sorted.size() / 2;
  s.median = sorted.size() % 2 == 1 ? sorted[mid] : 0.5 * (sorted[mid - 1] + sorted[mid]);
  return s;
}

TrajectoryStats aggregate_trajectories(const std::vector<std::vector<double>>& series, std::size_t length) {
  TrajectoryStats out;
  if (series.empty()) return out;
  out.mean.reserve(length);
  out.median.reserve(length);
  out.stddev.reserve(length);
  std::vector<double> column(series.size());
  for (std::size_t k = 0; k < length; ++k) {
    for (std::size_t t = 0; t < series.size(); ++t) {
      const auto& s = series[t];
      if (s.empty()) throw std::invalid_argument("aggregate_trajectories: empty series");
      column[t] = s[std::min(k, s.size() - 1)];
    }
    const Summary sum = aggregate_stats(column);
    out.mean.push_back(sum.mean);
    out.median.push_back(sum.median);
    out.stddev.push_back(sum.stddev);
  }
  return out;
}

}  // namespace specopt
