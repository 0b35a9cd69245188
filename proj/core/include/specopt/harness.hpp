#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "specopt/objectives.hpp"
#include "specopt/optimizers.hpp"
#include "specopt/rng.hpp"
#include "specopt/stats.hpp"

namespace specopt {

enum class Method { kSpegS, kSpegG, kSSpeg, kHSpeg, kGd, kAdam };

/// "SPEG-s", "SPEG-g", "S-SPEG", "H-SPEG", "GD", "Adam".
std::string_view method_name(Method m);
std::optional<Method> parse_method(std::string_view name);
std::vector<Method> all_methods();

inline constexpr double kGdStep = 0.001;
inline constexpr double kAdamLearningRate = 0.01;

/// Malformed or invalid experiment configuration. line() is 1-based, 0 when unknown.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct ExperimentConfig {
  std::size_t m = 0;
  std::size_t n = 0;
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  std::size_t trials = 20;
  std::size_t max_iters = 100;
  std::vector<Method> methods;
  std::uint64_t seed = 0;
  std::size_t switch_k = 10;
  double schedule_c = 4.0;

  /// Throws ConfigError.
  void validate() const;

  /// Parses a JSON object with exactly the field names above. m, n, lambda1,
  /// lambda2 and methods are required; the rest default. Unknown fields, wrong
  /// types and syntax errors raise ConfigError with a line number when one
  /// applies.
  static ExperimentConfig from_json(std::string_view text);
  std::string to_json() const;
};

struct Instance {
  std::shared_ptr<const ElasticNetProblem> problem;
  Vector x0;
};

/// Draws A (row-major), then b, then x0, all i.i.d. N(0, 1), from `rng`.
Instance sample_instance(std::size_t m, std::size_t n, double lambda1, double lambda2, CounterRng& rng);

/// Trial t draws its instance from CounterRng(derive_seed(derive_seed(seed, t), 0))
/// and the sampling stream of method M from derive_seed(derive_seed(seed, t), 1 + index(M)).
CounterRng trial_stream(std::uint64_t seed, std::size_t trial, std::uint64_t slot);

/// Runs one configured method on an instance.
RunRecord run_method(Method method, const Instance& instance, const ExperimentConfig& cfg, CounterRng& rng);

struct MethodStats {
  Method method = Method::kSpegS;
  std::optional<Summary> final_best;  // over succeeded trials' final f_best
  TrajectoryStats trajectory;         // f_best per iteration over succeeded trials
  std::size_t succeeded = 0;
  std::size_t failed = 0;
};

struct TrialStats {
  std::vector<MethodStats> methods;  // config order
};

struct ExperimentResult {
  ExperimentConfig config;
  TrialStats stats;
  std::vector<std::vector<RunRecord>> records;  // [method index in config][trial]
  std::vector<std::vector<bool>> failed;        // same shape
  double wall_time_ms = 0.0;
  unsigned threads = 1;

  bool any_failed() const;
};

/// Every method runs on the same instance and x0 within a trial. Trials are
/// distributed over `threads` workers; results do not depend on the thread count.
ExperimentResult run_trials(const ExperimentConfig& cfg, unsigned threads = 1);

}  // namespace specopt
