#include "specopt/harness.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <thread>

#include <json.hpp>

namespace specopt {
namespace {

constexpr std::array<std::pair<Method, std::string_view>, 6> kMethodNames{{
    {Method::kSpegS, "SPEG-s"},
    {Method::kSpegG, "SPEG-g"},
    {Method::kSSpeg, "S-SPEG"},
    {Method::kHSpeg, "H-SPEG"},
    {Method::kGd, "GD"},
    {Method::kAdam, "Adam"},
}};

constexpr std::array<std::string_view, 10> kConfigFields{
    "m", "n", "lambda1", "lambda2", "trials", "max_iters", "methods", "seed", "switch_k", "schedule_c"};

std::size_t line_of(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

std::size_t method_index(Method m) {
  for (std::size_t i = 0; i < kMethodNames.size(); ++i)
    if (kMethodNames[i].first == m) return i;
  return 0;
}

}  // namespace

std::string_view method_name(Method m) { return kMethodNames[method_index(m)].second; }

std::optional<Method> parse_method(std::string_view name) {
  for (const auto& [m, s] : kMethodNames)
    if (s == name) return m;
  return std::nullopt;
}

std::vector<Method> all_methods() {
  std::vector<Method> out;
  for (const auto& entry : kMethodNames) out.push_back(entry.first);
  return out;
}

void ExperimentConfig::validate() const {
  if (m < 1 || n < 1) throw ConfigError("m and n must be positive");
  if (!(lambda1 >= 0.0) || !(lambda2 >= 0.0)) throw ConfigError("lambda1 and lambda2 must be nonnegative");
  if (trials < 1) throw ConfigError("trials must be at least 1");
  if (max_iters < 1) throw ConfigError("max_iters must be positive");
  if (methods.empty()) throw ConfigError("methods must list at least one method");
  if (switch_k < 1) throw ConfigError("switch_k must be positive");
  if (switch_k > max_iters) throw ConfigError("switch_k must not exceed max_iters");
  if (!(schedule_c > 0.0) || !std::isfinite(schedule_c)) throw ConfigError("schedule_c must be positive");
}

ExperimentConfig ExperimentConfig::from_json(std::string_view text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("malformed JSON: ") + e.what(), line_of(text, e.byte == 0 ? 0 : e.byte - 1));
  }
  if (!doc.is_object()) throw ConfigError("config must be a JSON object", 1);

  for (const auto& item : doc.items()) {
    if (std::find(kConfigFields.begin(), kConfigFields.end(), item.key()) == kConfigFields.end()) {
      const auto pos = text.find("\"" + item.key() + "\"");
      throw ConfigError("unknown field '" + item.key() + "'", pos == std::string_view::npos ? 0 : line_of(text, pos));
    }
  }

  auto field_line = [&](const char* key) {
    const auto pos = text.find(std::string("\"") + key + "\"");
    return pos == std::string_view::npos ? std::size_t{0} : line_of(text, pos);
  };
  auto get_count = [&](const char* key, std::size_t& out, bool required) {
    if (!doc.contains(key)) {
      if (required) throw ConfigError(std::string("missing required field '") + key + "'");
      return;
    }
    const json& v = doc.at(key);
    if (!v.is_number_unsigned()) throw ConfigError(std::string("'") + key + "' must be a nonnegative integer", field_line(key));
    out = v.get<std::size_t>();
  };
  auto get_real = [&](const char* key, double& out, bool required) {
    if (!doc.contains(key)) {
      if (required) throw ConfigError(std::string("missing required field '") + key + "'");
      return;
    }
    const json& v = doc.at(key);
    if (!v.is_number()) throw ConfigError(std::string("'") + key + "' must be a number", field_line(key));
    out = v.get<double>();
  };

  ExperimentConfig cfg;
  get_count("m", cfg.m, true);
  get_count("n", cfg.n, true);
  get_real("lambda1", cfg.lambda1, true);
  get_real("lambda2", cfg.lambda2, true);
  get_count("trials", cfg.trials, false);
  get_count("max_iters", cfg.max_iters, false);
  get_count("switch_k", cfg.switch_k, false);
  get_real("schedule_c", cfg.schedule_c, false);
  if (doc.contains("seed")) {
    const json& v = doc.at("seed");
    if (!v.is_number_unsigned()) throw ConfigError("'seed' must be an unsigned 64-bit integer", field_line("seed"));
    cfg.seed = v.get<std::uint64_t>();
  }
  if (!doc.contains("methods")) throw ConfigError("missing required field 'methods'");
  const json& ms = doc.at("methods");
  if (!ms.is_array()) throw ConfigError("'methods' must be an array of names", field_line("methods"));
  for (const json& entry : ms) {
    if (!entry.is_string()) throw ConfigError("'methods' entries must be strings", field_line("methods"));
    const auto name = entry.get<std::string>();
    const auto method = parse_method(name);
    if (!method) throw ConfigError("unknown method '" + name + "'", field_line("methods"));
    if (std::find(cfg.methods.begin(), cfg.methods.end(), *method) != cfg.methods.end())
      throw ConfigError("method '" + name + "' listed twice", field_line("methods"));
    cfg.methods.push_back(*method);
  }
  cfg.validate();
  return cfg;
}

std::string ExperimentConfig::to_json() const {
  nlohmann::ordered_json j;
  j["m"] = m;
  j["n"] = n;
  j["lambda1"] = lambda1;
  j["lambda2"] = lambda2;
  j["trials"] = trials;
  j["max_iters"] = max_iters;
  auto& names = j["methods"] = nlohmann::ordered_json::array();
  for (Method mm : methods) names.push_back(std::string(method_name(mm)));
  j["seed"] = seed;
  j["switch_k"] = switch_k;
  j["schedule_c"] = schedule_c;
  return j.dump(2);
}

Instance sample_instance(std::size_t m, std::size_t n, double lambda1, double lambda2, CounterRng& rng) {
  auto p = std::make_shared<ElasticNetProblem>();
  p->A.resize(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(n));
  for (Eigen::Index i = 0; i < p->A.rows(); ++i)
    for (Eigen::Index j = 0; j < p->A.cols(); ++j) p->A(i, j) = rng.normal();
  p->b.resize(static_cast<Eigen::Index>(m));
  for (Eigen::Index i = 0; i < p->b.size(); ++i) p->b[i] = rng.normal();
  p->lambda1 = lambda1;
  p->lambda2 = lambda2;
  p->validate();
  Vector x0(static_cast<Eigen::Index>(n));
  for (Eigen::Index i = 0; i < x0.size(); ++i) x0[i] = rng.normal();
  return Instance{std::move(p), std::move(x0)};
}

CounterRng trial_stream(std::uint64_t seed, std::size_t trial, std::uint64_t slot) {
  return CounterRng(derive_seed(derive_seed(seed, trial), slot));
}

RunRecord run_method(Method method, const Instance& instance, const ExperimentConfig& cfg, CounterRng& rng) {
  const ElasticNetObjective full(instance.problem);
  const RunLimits limits{cfg.max_iters, 1e-12};
  const auto diminishing = StepSchedule::normalized_diminishing(cfg.schedule_c);
  switch (method) {
    case Method::kSpegS:
      return speg_run(full, instance.x0, diminishing, limits);
    case Method::kSpegG:
      return speg_run(full, instance.x0, StepSchedule::geometric(0.5, true), limits);
    case Method::kSSpeg: {
      const auto comps = elastic_net_components(instance.problem);
      return sspeg_run(full, comps, instance.x0, diminishing, limits, rng);
    }
    case Method::kHSpeg: {
      const auto comps = elastic_net_components(instance.problem);
      return hspeg_run(full, comps, instance.x0, diminishing, cfg.switch_k, limits, rng);
    }
    case Method::kGd:
      return gd_run(full, instance.x0, kGdStep, cfg.max_iters);
    case Method::kAdam:
      return adam_run(full, instance.x0, AdamParams{kAdamLearningRate}, cfg.max_iters);
  }
  throw std::logic_error("run_method: unhandled method");
}

bool ExperimentResult::any_failed() const {
  for (const auto& row : failed)
    for (bool f : row)
      if (f) return true;
  return false;
}

ExperimentResult run_trials(const ExperimentConfig& cfg, unsigned threads) {
  cfg.validate();
  const auto start = std::chrono::steady_clock::now();
  const std::size_t nm = cfg.methods.size();
  ExperimentResult res;
  res.config = cfg;
  res.records.assign(nm, std::vector<RunRecord>(cfg.trials));
  res.failed.assign(nm, std::vector<bool>(cfg.trials, false));
  std::vector<std::vector<char>> failed(nm, std::vector<char>(cfg.trials, 0));

  auto run_trial = [&](std::size_t t) {
    CounterRng instance_rng = trial_stream(cfg.seed, t, 0);
    const Instance inst = sample_instance(cfg.m, cfg.n, cfg.lambda1, cfg.lambda2, instance_rng);
    for (std::size_t mi = 0; mi < nm; ++mi) {
      const Method method = cfg.methods[mi];
      CounterRng rng = trial_stream(cfg.seed, t, 1 + method_index(method));
      try {
        res.records[mi][t] = run_method(method, inst, cfg, rng);
        failed[mi][t] = res.records[mi][t].status == RunStatus::kNumericalFailure;
      } catch (const std::exception&) {
        failed[mi][t] = 1;
      }
    }
  };

  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(cfg.trials)));
  res.threads = threads;
  if (threads == 1) {
    for (std::size_t t = 0; t < cfg.trials; ++t) run_trial(t);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::atomic<bool> has_error{false};
    {
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < threads; ++w) {
        pool.emplace_back([&] {
          for (std::size_t t = next++; t < cfg.trials && !has_error; t = next++) {
            try {
              run_trial(t);
            } catch (...) {
              if (!has_error.exchange(true)) error = std::current_exception();
            }
          }
        });
      }
    }
    if (error) std::rethrow_exception(error);
  }

  for (std::size_t mi = 0; mi < nm; ++mi) {
    MethodStats ms;
    ms.method = cfg.methods[mi];
    std::vector<double> finals;
    std::vector<std::vector<double>> series;
    for (std::size_t t = 0; t < cfg.trials; ++t) {
      res.failed[mi][t] = failed[mi][t] != 0;
      if (res.failed[mi][t] || res.records[mi][t].rows.empty()) {
        res.failed[mi][t] = true;
        ++ms.failed;
        continue;
      }
      ++ms.succeeded;
      const RunRecord& rec = res.records[mi][t];
      finals.push_back(rec.f_best());
      std::vector<double> traj;
      traj.reserve(rec.rows.size());
      for (const auto& row : rec.rows) traj.push_back(row.f_best);
      series.push_back(std::move(traj));
    }
    if (!finals.empty()) {
      ms.final_best = aggregate_stats(finals);
      ms.trajectory = aggregate_trajectories(series, cfg.max_iters + 1);
    }
    res.stats.methods.push_back(std::move(ms));
  }
  res.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return res;
}

}  // namespace specopt
