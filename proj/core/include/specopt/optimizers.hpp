#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "specopt/objective.hpp"
#include "specopt/rng.hpp"

namespace specopt {

/// Step-size rule h_k.
///
///  - normalized_diminishing(c): h_k = c / ((k + 1) |g_k|). The scale
///    t_k = c/(k+1) is square-summable but not summable.
///  - geometric(ratio): h_k = ratio^(k+1), optionally divided by |g_k|.
///  - constant(h): h_k = h.
class StepSchedule {
 public:
  enum class Kind { kNormalizedDiminishing, kGeometric, kConstant };

  static StepSchedule normalized_diminishing(double c);
  static StepSchedule geometric(double ratio, bool normalized = false);
  static StepSchedule constant(double h);

  Kind kind() const { return kind_; }
  double parameter() const { return param_; }
  bool normalized() const { return normalized_; }

  /// Numerator t_k before any gradient normalization.
  double scale(std::size_t k) const;

  /// h_k for an iterate whose search direction has norm grad_norm (> 0 when normalized).
  double step(std::size_t k, double grad_norm) const;

 private:
  StepSchedule(Kind kind, double param, bool normalized);

  Kind kind_;
  double param_;
  bool normalized_;
};

enum class RunStatus { kMaxIters, kStationary, kNumericalFailure };

std::string_view to_string(RunStatus status);

/// State of iterate x_k. grad_norm is the norm of the direction evaluated at
/// x_k (the sampled component's for stochastic steps); the row that closes a
/// max_iters run carries the full specular gradient norm.
struct IterationRow {
  std::size_t k = 0;
  double f_current = 0.0;
  double f_best = 0.0;
  double grad_norm = 0.0;
  double wall_time_ms = 0.0;
};

/// Step actually taken from x_k.
struct StepTrace {
  double h = 0.0;
  double grad_norm = 0.0;
};

struct RunRecord {
  std::vector<IterationRow> rows;
  std::vector<StepTrace> steps;
  RunStatus status = RunStatus::kMaxIters;
  Vector x_best;
  Vector x_final;

  /// f_best of the last row; +inf for an empty record.
  double f_best() const;
};

struct RunLimits {
  std::size_t max_iters = 100;
  double eta = 1e-12;  // stationary when |direction| <= eta
};

/// Specular gradient method x_{k+1} = x_k - h_k grad^s f(x_k) with best-iterate tracking.
RunRecord speg_run(const Objective& obj, const Vector& x0, const StepSchedule& schedule, RunLimits limits);

/// Stochastic variant: each step uses the specular gradient of a component drawn
/// uniformly (with replacement) from `components`, where full = (1/m) sum components.
/// Best-iterate tracking evaluates `full`.
RunRecord sspeg_run(const Objective& full, std::span<const ObjectivePtr> components, const Vector& x0,
                    const StepSchedule& schedule, RunLimits limits, CounterRng& rng);

/// speg_run for k < switch_k, then sspeg_run; iteration numbering and the
/// step schedule index continue across the switch.
RunRecord hspeg_run(const Objective& full, std::span<const ObjectivePtr> components, const Vector& x0,
                    const StepSchedule& schedule, std::size_t switch_k, RunLimits limits, CounterRng& rng);

struct EuclideanBall {
  Vector center;
  double radius = 1.0;
};

struct Box {
  Vector lo;
  Vector hi;
};

using ProjectionSet = std::variant<EuclideanBall, Box>;

/// Orthogonal projection of a point onto the set. Throws on malformed sets.
Vector project(const Vector& y, const ProjectionSet& set);

/// pi_E(x - h g).
Vector projected_speg_step(const Vector& x, const Vector& g, double h, const ProjectionSet& set);

/// Constant-step gradient descent along the specular gradient (the classical
/// gradient wherever f is differentiable). Runs the full budget.
RunRecord gd_run(const Objective& obj, const Vector& x0, double h, std::size_t max_iters);

struct AdamParams {
  double lr = 0.01;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
};

/// Adam with bias correction along the specular gradient. Runs the full budget.
RunRecord adam_run(const Objective& obj, const Vector& x0, AdamParams params, std::size_t max_iters);

/// Per-k bound (|x0 - x*|^2 + sum_{l<=k} h_l^2 |g_l|^2) / (2 sum_{l<=k} h_l) on
/// f(best of x_0..x_k) - f(x*). Throws std::invalid_argument on an empty trace.
std::vector<double> basic_inequality_bound(std::span<const StepTrace> trace, const Vector& x0,
                                           const Vector& xstar);

std::vector<double> basic_inequality_bound(const RunRecord& record, const Vector& x0, const Vector& xstar);

}  // namespace specopt
