#include "specopt/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace specopt {
namespace {

using ojson = nlohmann::ordered_json;

ojson real_array(const std::vector<double>& xs) {
  ojson a = ojson::array();
  for (double x : xs) a.push_back(std::isfinite(x) ? ojson(x) : ojson(nullptr));
  return a;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << content;
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

double parse_real(std::string_view field) {
  const std::string s(field);
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size()) throw std::runtime_error("bad number '" + s + "'");
  return v;
}

std::size_t parse_count(std::string_view field) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc{} || ptr != field.data() + field.size())
    throw std::runtime_error("bad integer '" + std::string(field) + "'");
  return v;
}

}  // namespace

std::string_view library_version() { return "1.0.0"; }

std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string stats_json(const ExperimentResult& result) {
  ojson methods = ojson::object();
  for (const MethodStats& ms : result.stats.methods) {
    ojson entry;
    entry["succeeded"] = ms.succeeded;
    entry["failed"] = ms.failed;
    if (ms.final_best) {
      entry["mean"] = ms.final_best->mean;
      entry["median"] = ms.final_best->median;
      entry["stddev"] = ms.final_best->stddev;
    } else {
      entry["mean"] = nullptr;
      entry["median"] = nullptr;
      entry["stddev"] = nullptr;
    }
    entry["trajectory"]["mean"] = real_array(ms.trajectory.mean);
    entry["trajectory"]["median"] = real_array(ms.trajectory.median);
    entry["trajectory"]["stddev"] = real_array(ms.trajectory.stddev);
    methods[std::string(method_name(ms.method))] = std::move(entry);
  }
  ojson doc;
  doc["trials"] = result.config.trials;
  doc["max_iters"] = result.config.max_iters;
  doc["methods"] = std::move(methods);
  return doc.dump(2) + "\n";
}

std::string trajectories_csv(const ExperimentResult& result) {
  const auto& methods = result.config.methods;
  std::vector<std::size_t> order(methods.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return method_name(methods[a]) < method_name(methods[b]); });

  std::string out = "method,trial,iter,f_current,f_best,grad_norm\n";
  for (std::size_t mi : order) {
    const std::string name(method_name(methods[mi]));
    for (std::size_t t = 0; t < result.records[mi].size(); ++t) {
      for (const IterationRow& row : result.records[mi][t].rows) {
        out += name;
        out += ',';
        out += std::to_string(t);
        out += ',';
        out += std::to_string(row.k);
        out += ',';
        out += format_real(row.f_current);
        out += ',';
        out += format_real(row.f_best);
        out += ',';
        out += format_real(row.grad_norm);
        out += '\n';
      }
    }
  }
  return out;
}

std::string runmeta_json(const ExperimentResult& result) {
  ojson doc;
  doc["config"] = ojson::parse(result.config.to_json());
  doc["seed"] = result.config.seed;
  doc["version"] = std::string(library_version());
#if defined(__clang__)
  doc["compiler"] = std::string("clang ") + __clang_version__;
#elif defined(__GNUC__)
  doc["compiler"] = std::string("gcc ") + __VERSION__;
#endif
  doc["threads"] = result.threads;
  doc["wall_time_ms"] = result.wall_time_ms;
  ojson per_method = ojson::object();
  for (std::size_t mi = 0; mi < result.config.methods.size(); ++mi) {
    ojson entry;
    double total = 0.0;
    ojson statuses = ojson::array();
    for (std::size_t t = 0; t < result.records[mi].size(); ++t) {
      const RunRecord& rec = result.records[mi][t];
      if (!rec.rows.empty()) total += rec.rows.back().wall_time_ms;
      statuses.push_back(result.failed[mi][t] ? std::string("failed") : std::string(to_string(rec.status)));
    }
    entry["total_run_ms"] = total;
    entry["status"] = std::move(statuses);
    per_method[std::string(method_name(result.config.methods[mi]))] = std::move(entry);
  }
  doc["methods"] = std::move(per_method);
  return doc.dump(2) + "\n";
}

std::vector<TrajectoryRow> parse_trajectories_csv(std::string_view text) {
  std::vector<TrajectoryRow> rows;
  std::size_t pos = 0;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    const std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!header_seen) {
      if (line != "method,trial,iter,f_current,f_best,grad_norm")
        throw std::runtime_error("trajectories.csv: unexpected header");
      header_seen = true;
      continue;
    }
    if (line.empty()) continue;
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = line.find(',', start);
      fields.push_back(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (fields.size() != 6)
      throw std::runtime_error("trajectories.csv line " + std::to_string(line_no) + ": expected 6 fields");
    try {
      rows.push_back({std::string(fields[0]), parse_count(fields[1]), parse_count(fields[2]),
                      parse_real(fields[3]), parse_real(fields[4]), parse_real(fields[5])});
    } catch (const std::runtime_error& e) {
      throw std::runtime_error("trajectories.csv line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!header_seen) throw std::runtime_error("trajectories.csv: missing header");
  return rows;
}

void write_bundle(const ExperimentResult& result, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  write_file(dir / "stats.json", stats_json(result));
  write_file(dir / "trajectories.csv", trajectories_csv(result));
  write_file(dir / "runmeta.json", runmeta_json(result));
}

}  // namespace specopt
