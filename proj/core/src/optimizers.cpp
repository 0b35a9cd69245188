#include "specopt/optimizers.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "specopt/specdiff.hpp"

namespace specopt {

StepSchedule::StepSchedule(Kind kind, double param, bool normalized)
    : kind_(kind), param_(param), normalized_(normalized) {}

StepSchedule StepSchedule::normalized_diminishing(double c) {
  if (!(c > 0.0) || !std::isfinite(c)) throw std::invalid_argument("normalized_diminishing: c must be positive");
  return StepSchedule(Kind::kNormalizedDiminishing, c, true);
}

StepSchedule StepSchedule::geometric(double ratio, bool normalized) {
  if (!(ratio > 0.0 && ratio < 1.0)) throw std::invalid_argument("geometric: ratio must lie in (0, 1)");
  return StepSchedule(Kind::kGeometric, ratio, normalized);
}

StepSchedule StepSchedule::constant(double h) {
  if (!(h > 0.0) || !std::isfinite(h)) throw std::invalid_argument("constant: h must be positive");
  return StepSchedule(Kind::kConstant, h, false);
}

double StepSchedule::scale(std::size_t k) const {
  switch (kind_) {
    case Kind::kNormalizedDiminishing: return param_ / static_cast<double>(k + 1);
    case Kind::kGeometric: return std::pow(param_, static_cast<double>(k + 1));
    case Kind::kConstant: return param_;
  }
  return param_;
}

double StepSchedule::step(std::size_t k, double grad_norm) const {
  const double t = scale(k);
  return normalized_ ? t / grad_norm : t;
}

std::string_view to_string(RunStatus status) {
  switch (status) {
    case RunStatus::kMaxIters: return "max_iters";
    case RunStatus::kStationary: return "stationary";
    case RunStatus::kNumericalFailure: return "numerical_failure";
  }
  return "unknown";
}

double RunRecord::f_best() const {
  return rows.empty() ? std::numeric_limits<double>::infinity() : rows.back().f_best;
}

namespace {

using Clock = std::chrono::steady_clock;

// Shared iteration driver. `direction(k, x)` returns the search direction at
// x_k; `update(k, x, g, |g|)` moves x in place and returns the step length
// recorded in the trace. A negative eta disables the stationarity stop.
template <class DirectionFn, class UpdateFn>
RunRecord drive(const Objective& obj, const Vector& x0, std::size_t max_iters, double eta,
                DirectionFn&& direction, UpdateFn&& update) {
  const auto start = Clock::now();
  auto elapsed_ms = [&] {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  };

  RunRecord rec;
  Vector x = x0;
  rec.x_best = x;
  rec.x_final = x;
  double fx = obj.value(x);
  if (!std::isfinite(fx)) {
    rec.status = RunStatus::kNumericalFailure;
    return rec;
  }
  double best = fx;
  rec.rows.reserve(max_iters + 1);
  rec.steps.reserve(max_iters);

  for (std::size_t k = 0;; ++k) {
    if (k == max_iters) {
      const double gn = specular_gradient(obj, x).norm();
      rec.rows.push_back({k, fx, best, gn, elapsed_ms()});
      rec.status = std::isfinite(gn) ? RunStatus::kMaxIters : RunStatus::kNumericalFailure;
      break;
    }
    const Vector g = direction(k, x);
    const double gn = g.norm();
    if (!std::isfinite(gn)) {
      rec.status = RunStatus::kNumericalFailure;
      break;
    }
    rec.rows.push_back({k, fx, best, gn, elapsed_ms()});
    if (gn <= eta) {
      rec.status = RunStatus::kStationary;
      break;
    }
    const double h = update(k, x, g, gn);
    rec.steps.push_back({h, gn});
    fx = obj.value(x);
    if (!std::isfinite(fx) || !x.allFinite()) {
      rec.status = RunStatus::kNumericalFailure;
      break;
    }
    if (fx < best) {
      best = fx;
      rec.x_best = x;
    }
  }
  rec.x_final = x;
  return rec;
}

auto scheduled_update(const StepSchedule& schedule) {
  return [&schedule](std::size_t k, Vector& x, const Vector& g, double gn) {
    const double h = schedule.step(k, gn);
    x -= h * g;
    return h;
  };
}

void check_start(const Objective& obj, const Vector& x0, const char* where) {
  if (static_cast<std::size_t>(x0.size()) != obj.dimension())
    throw DimensionMismatch(where, obj.dimension(), static_cast<std::size_t>(x0.size()));
}

void check_components(const Objective& full, std::span<const ObjectivePtr> components, const char* where) {
  if (components.empty()) throw std::invalid_argument(std::string(where) + ": no components");
  for (const auto& c : components)
    if (!c || c->dimension() != full.dimension())
      throw std::invalid_argument(std::string(where) + ": component dimension mismatch");
}

}  // namespace

RunRecord speg_run(const Objective& obj, const Vector& x0, const StepSchedule& schedule, RunLimits limits) {
  check_start(obj, x0, "speg_run");
  if (!(limits.eta >= 0.0)) throw std::invalid_argument("speg_run: eta must be nonnegative");
  return drive(
      obj, x0, limits.max_iters, limits.eta,
      [&obj](std::size_t, const Vector& x) { return specular_gradient(obj, x); },
      scheduled_update(schedule));
}

RunRecord sspeg_run(const Objective& full, std::span<const ObjectivePtr> components, const Vector& x0,
                    const StepSchedule& schedule, RunLimits limits, CounterRng& rng) {
  return hspeg_run(full, components, x0, schedule, 0, limits, rng);
}

RunRecord hspeg_run(const Objective& full, std::span<const ObjectivePtr> components, const Vector& x0,
                    const StepSchedule& schedule, std::size_t switch_k, RunLimits limits, CounterRng& rng) {
  check_start(full, x0, "hspeg_run");
  check_components(full, components, "hspeg_run");
  if (!(limits.eta >= 0.0)) throw std::invalid_argument("hspeg_run: eta must be nonnegative");
  if (switch_k > limits.max_iters) throw std::invalid_argument("hspeg_run: switch_k exceeds max_iters");
  return drive(
      full, x0, limits.max_iters, limits.eta,
      [&](std::size_t k, const Vector& x) {
        if (k < switch_k) return specular_gradient(full, x);
        const std::size_t j = rng.uniform_index(components.size());
        return specular_gradient(*components[j], x);
      },
      scheduled_update(schedule));
}

Vector project(const Vector& y, const ProjectionSet& set) {
  return std::visit(
      [&y](const auto& s) -> Vector {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, EuclideanBall>) {
          if (!(s.radius > 0.0)) throw std::invalid_argument("project: ball radius must be positive");
          if (s.center.size() != y.size()) throw DimensionMismatch("project", static_cast<std::size_t>(y.size()), static_cast<std::size_t>(s.center.size()));
          const Vector d = y - s.center;
          const double dn = d.norm();
          if (dn <= s.radius) return y;
          return s.center + (s.radius / dn) * d;
        } else {
          if (s.lo.size() != y.size() || s.hi.size() != y.size())
            throw DimensionMismatch("project", static_cast<std::size_t>(y.size()), static_cast<std::size_t>(s.lo.size()));
          if ((s.lo.array() > s.hi.array()).any()) throw std::invalid_argument("project: box has lo > hi");
          return y.cwiseMax(s.lo).cwiseMin(s.hi);
        }
      },
      set);
}

Vector projected_speg_step(const Vector& x, const Vector& g, double h, const ProjectionSet& set) {
  if (!(h > 0.0)) throw std::invalid_argument("projected_speg_step: h must be positive");
  return project(x - h * g, set);
}

RunRecord gd_run(const Objective& obj, const Vector& x0, double h, std::size_t max_iters) {
  check_start(obj, x0, "gd_run");
  const StepSchedule schedule = StepSchedule::constant(h);
  return drive(
      obj, x0, max_iters, -1.0,
      [&obj](std::size_t, const Vector& x) { return specular_gradient(obj, x); },
      scheduled_update(schedule));
}

RunRecord adam_run(const Objective& obj, const Vector& x0, AdamParams params, std::size_t max_iters) {
  check_start(obj, x0, "adam_run");
  if (!(params.lr > 0.0)) throw std::invalid_argument("adam_run: learning rate must be positive");
  Vector m = Vector::Zero(x0.size());
  Vector v = Vector::Zero(x0.size());
  double beta1_pow = 1.0;
  double beta2_pow = 1.0;
  return drive(
      obj, x0, max_iters, -1.0,
      [&obj](std::size_t, const Vector& x) { return specular_gradient(obj, x); },
      [&](std::size_t, Vector& x, const Vector& g, double) {
        m = params.beta1 * m + (1.0 - params.beta1) * g;
        v = params.beta2 * v + (1.0 - params.beta2) * g.cwiseAbs2();
        beta1_pow *= params.beta1;
        beta2_pow *= params.beta2;
        const double c1 = 1.0 - beta1_pow;
        const double c2 = 1.0 - beta2_pow;
        x.array() -= params.lr * (m.array() / c1) / ((v.array() / c2).sqrt() + params.epsilon);
        return params.lr;
      });
}

std::vector<double> basic_inequality_bound(std::span<const StepTrace> trace, const Vector& x0,
                                           const Vector& xstar) {
  if (trace.empty()) throw std::invalid_argument("basic_inequality_bound: empty trace");
  const double r0 = (x0 - xstar).squaredNorm();
  std::vector<double> bounds;
  bounds.reserve(trace.size());
  double sum_h = 0.0;
  double sum_sq = 0.0;
  for (const StepTrace& s : trace) {
    sum_h += s.h;
    sum_sq += s.h * s.h * s.grad_norm * s.grad_norm;
    bounds.push_back((r0 + sum_sq) / (2.0 * sum_h));
  }
  return bounds;
}

std::vector<double> basic_inequality_bound(const RunRecord& record, const Vector& x0, const Vector& xstar) {
  return basic_inequality_bound(std::span<const StepTrace>(record.steps), x0, xstar);
}

}  // namespace specopt
