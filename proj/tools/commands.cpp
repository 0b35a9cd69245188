#include "commands.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "specopt/harness.hpp"
#include "specopt/io.hpp"
#include "specopt/objectives.hpp"
#include "specopt/specdiff.hpp"

namespace specopt::cli {
namespace {

std::optional<std::string> read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::optional<ExperimentConfig> load_config(const std::filesystem::path& path, const Overrides& overrides,
                                            std::ostream& err) {
  const auto text = read_text(path);
  if (!text) {
    err << "error: cannot read config " << path.string() << "\n";
    return std::nullopt;
  }
  try {
    ExperimentConfig cfg = ExperimentConfig::from_json(*text);
    if (overrides.seed) cfg.seed = *overrides.seed;
    if (overrides.trials) cfg.trials = *overrides.trials;
    cfg.validate();
    return cfg;
  } catch (const ConfigError& e) {
    err << "error: " << path.string() << ": " << e.what() << "\n";
    return std::nullopt;
  }
}

void print_summary(const ExperimentResult& res, std::ostream& out) {
  out << std::left << std::setw(8) << "method" << std::right << std::setw(14) << "mean" << std::setw(14)
      << "median" << std::setw(14) << "stddev" << std::setw(8) << "failed" << "\n";
  for (const MethodStats& ms : res.stats.methods) {
    out << std::left << std::setw(8) << method_name(ms.method) << std::right << std::scientific
        << std::setprecision(4);
    if (ms.final_best) {
      out << std::setw(14) << ms.final_best->mean << std::setw(14) << ms.final_best->median << std::setw(14)
          << ms.final_best->stddev;
    } else {
      out << std::setw(14) << "-" << std::setw(14) << "-" << std::setw(14) << "-";
    }
    out << std::defaultfloat << std::setw(8) << ms.failed << "\n";
  }
}

int run_config(const ExperimentConfig& cfg, const std::filesystem::path& out_dir, unsigned threads,
               std::ostream& out, std::ostream& err) {
  ExperimentResult res;
  try {
    res = run_trials(cfg, threads);
    write_bundle(res, out_dir);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  }
  print_summary(res, out);
  out << "wrote " << out_dir.string() << " (" << std::fixed << std::setprecision(1) << res.wall_time_ms
      << " ms)\n"
      << std::defaultfloat;
  if (res.any_failed()) {
    err << "warning: some (trial, method) cells failed; see runmeta.json\n";
    return kCellFailure;
  }
  return kOk;
}

std::string json_real(const ExtendedReal& v) { return v.to_string(); }

}  // namespace

unsigned thread_budget() {
  if (const char* env = std::getenv("SPECOPT_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

int cmd_run(const std::filesystem::path& config_path, const std::filesystem::path& out_dir,
            const Overrides& overrides, unsigned threads, std::ostream& out, std::ostream& err) {
  const auto cfg = load_config(config_path, overrides, err);
  if (!cfg) return kConfigError;
  return run_config(*cfg, out_dir, threads, out, err);
}

std::string sweep_cell_name(double lambda1, double lambda2) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "l1_%g_l2_%g", lambda1, lambda2);
  return buf;
}

int cmd_sweep(const std::filesystem::path& base_config_path, const std::vector<double>& lambda1_list,
              const std::vector<double>& lambda2_list, const std::filesystem::path& out_dir,
              const Overrides& overrides, unsigned threads, std::ostream& out, std::ostream& err) {
  if (lambda1_list.empty() || lambda2_list.empty()) {
    err << "error: lambda1 and lambda2 lists must be nonempty\n";
    return kConfigError;
  }
  for (double v : lambda1_list)
    if (!(v >= 0.0)) return err << "error: lambda values must be nonnegative\n", kConfigError;
  for (double v : lambda2_list)
    if (!(v >= 0.0)) return err << "error: lambda values must be nonnegative\n", kConfigError;
  const auto base = load_config(base_config_path, overrides, err);
  if (!base) return kConfigError;

  nlohmann::ordered_json index;
  index["base_config"] = nlohmann::ordered_json::parse(base->to_json());
  index["cells"] = nlohmann::ordered_json::array();
  int worst = kOk;
  for (double l1 : lambda1_list) {
    for (double l2 : lambda2_list) {
      ExperimentConfig cfg = *base;
      cfg.lambda1 = l1;
      cfg.lambda2 = l2;
      const std::string name = sweep_cell_name(l1, l2);
      out << "== " << name << "\n";
      const int code = run_config(cfg, out_dir / name, threads, out, err);
      worst = std::max(worst, code == kConfigError ? kCellFailure : code);
      index["cells"].push_back({{"lambda1", l1}, {"lambda2", l2}, {"dir", name}, {"exit_code", code}});
    }
  }
  index["exit_code"] = worst;
  try {
    std::filesystem::create_directories(out_dir);
    std::ofstream f(out_dir / "index.json", std::ios::binary | std::ios::trunc);
    f << index.dump(2) << "\n";
    if (!f) throw std::runtime_error("cannot write index.json");
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  }
  return worst;
}

int cmd_check(CheckLevel level, std::ostream& out, std::ostream&) {
  const auto results = run_check_suites(level);
  bool all = true;
  for (const SuiteResult& r : results) {
    all = all && r.passed();
    out << (r.passed() ? "PASS " : "FAIL ") << std::left << std::setw(24) << r.name << std::right
        << " samples=" << r.samples << " failures=" << r.failures << " (" << std::fixed << std::setprecision(2)
        << r.seconds << " s)" << std::defaultfloat << "\n";
    if (!r.passed() && !r.first_failure.empty()) out << "     first failure: " << r.first_failure << "\n";
  }
  return all ? kOk : kCellFailure;
}

int cmd_specgrad(const std::string& function_name, const std::string& point, std::ostream& out,
                 std::ostream& err) {
  std::vector<double> coords;
  std::stringstream ss(point);
  std::string item;
  while (std::getline(ss, item, ',')) {
    char* end = nullptr;
    const double v = std::strtod(item.c_str(), &end);
    if (item.empty() || *end != '\0' || !std::isfinite(v)) {
      err << "error: bad coordinate '" << item << "'\n";
      return kConfigError;
    }
    coords.push_back(v);
  }
  if (coords.empty()) {
    err << "error: empty point\n";
    return kConfigError;
  }
  ObjectivePtr f;
  try {
    f = catalog_objective(function_name, coords.size());
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  }
  const Vector x = Eigen::Map<const Vector>(coords.data(), static_cast<Eigen::Index>(coords.size()));
  const auto pairs = f->coordinate_one_sided(x);
  Vector g;
  try {
    g = specular_gradient(*f, x);
  } catch (const HypothesisViolation& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  }
  nlohmann::ordered_json doc;
  doc["function"] = function_name;
  doc["point"] = coords;
  doc["gradient"] = std::vector<double>(g.data(), g.data() + g.size());
  auto& sides = doc["one_sided"] = nlohmann::ordered_json::array();
  for (const OneSidedPair& p : pairs) {
    nlohmann::ordered_json e;
    if (p.plus.is_finite()) e["plus"] = p.plus.finite_value(); else e["plus"] = json_real(p.plus);
    if (p.minus.is_finite()) e["minus"] = p.minus.finite_value(); else e["minus"] = json_real(p.minus);
    sides.push_back(std::move(e));
  }
  out << doc.dump(2) << "\n";
  return kOk;
}

}  // namespace specopt::cli
