// Copyright 2026 The cvrepeater Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cvrep_cli/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "cvrep/error.hpp"

namespace cvrep::cli {
namespace {

using json = nlohmann::json;
constexpr double kInf = std::numeric_limits<double>::infinity();

// Locates the line of a dotted field path by walking the quoted keys in order.
// Good enough for diagnostics; duplicate key names earlier in the file can
// make it point too early.
int line_of(const std::string& text, const std::string& path) {
  std::size_t pos = 0;
  std::size_t start = 0;
  while (start <= path.size()) {
    const std::size_t dot = path.find('.', start);
    const std::string key = path.substr(start, dot == std::string::npos ? std::string::npos : dot - start);
    const std::size_t hit = text.find('"' + key + '"', pos);
    if (hit == std::string::npos) break;
    pos = hit;
    if (dot == std::string::npos) break;
    start = dot + 1;
  }
  if (pos == 0) return 0;
  return 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<long>(pos), '\n'));
}

void check_keys(const json& obj, const std::set<std::string>& allowed, const std::string& prefix) {
  if (!obj.is_object()) throw ConfigError(prefix, "expected an object");
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.contains(key)) throw ConfigError(prefix.empty() ? key : prefix + "." + key, "unknown key");
  }
}

double number(const json& v, const std::string& field) {
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    if (s == "inf") return kInf;
    throw ConfigError(field, "expected a number or \"inf\", got \"" + s + "\"");
  }
  if (!v.is_number()) throw ConfigError(field, std::string("expected a number, got ") + v.type_name());
  return v.get<double>();
}

long long integer(const json& v, const std::string& field) {
  if (!v.is_number_integer()) throw ConfigError(field, std::string("expected an integer, got ") + v.type_name());
  return v.get<long long>();
}

// A list of numbers, or {"from": a, "to": b, "count": k, "spacing": "linear"|"log"}.
std::vector<double> number_list(const json& v, const std::string& field) {
  if (v.is_array()) {
    std::vector<double> out;
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(number(v[i], field + "[" + std::to_string(i) + "]"));
    return out;
  }
  if (v.is_object()) {
    check_keys(v, {"from", "to", "count", "spacing"}, field);
    for (const char* k : {"from", "to", "count"})
      if (!v.contains(k)) throw ConfigError(field + "." + k, "missing");
    const double lo = number(v["from"], field + ".from");
    const double hi = number(v["to"], field + ".to");
    const long long n = integer(v["count"], field + ".count");
    if (n < 1) throw ConfigError(field + ".count", "must be >= 1");
    const std::string spacing = v.value("spacing", std::string("linear"));
    try {
      if (spacing == "linear") return linear_space(lo, hi, static_cast<std::size_t>(n));
      if (spacing == "log") return log_space(lo, hi, static_cast<std::size_t>(n));
    } catch (const Error& e) {
      throw ConfigError(field, e.what());
    }
    throw ConfigError(field + ".spacing", "expected \"linear\" or \"log\"");
  }
  throw ConfigError(field, "expected a list or a range object");
}

template <typename Int>
std::vector<Int> int_list(const json& v, const std::string& field) {
  if (!v.is_array()) throw ConfigError(field, "expected a list of integers");
  std::vector<Int> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(static_cast<Int>(integer(v[i], field + "[" + std::to_string(i) + "]")));
  }
  return out;
}

nlohmann::ordered_json finite_or_tag(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

void fill(ScenarioConfig& cfg, const json& root) {
  check_keys(root, {"distances_km", "depths", "gains", "mus", "xi", "alpha_db_per_km", "memory",
                    "c_speed_km_s", "coherence_times_s", "capacity_links", "optimizer", "montecarlo",
                    "threads", "output"},
             "");
  if (root.contains("distances_km")) cfg.distances_km = number_list(root["distances_km"], "distances_km");
  if (root.contains("depths")) cfg.depths = int_list<int>(root["depths"], "depths");
  if (root.contains("gains")) cfg.gains = number_list(root["gains"], "gains");
  if (root.contains("mus")) cfg.mus = number_list(root["mus"], "mus");
  if (root.contains("xi")) cfg.xi = number(root["xi"], "xi");
  if (root.contains("alpha_db_per_km")) cfg.alpha_db_per_km = number(root["alpha_db_per_km"], "alpha_db_per_km");
  if (root.contains("c_speed_km_s")) cfg.c_speed_km_s = number(root["c_speed_km_s"], "c_speed_km_s");
  if (root.contains("memory")) {
    const json& m = root["memory"];
    check_keys(m, {"tau_c_s", "xi_qm"}, "memory");
    if (m.contains("tau_c_s")) cfg.mem.tau_c = number(m["tau_c_s"], "memory.tau_c_s");
    if (m.contains("xi_qm")) cfg.mem.xi_qm = number(m["xi_qm"], "memory.xi_qm");
  }
  if (root.contains("coherence_times_s")) {
    cfg.coherence_times_s = number_list(root["coherence_times_s"], "coherence_times_s");
  }
  if (root.contains("capacity_links")) cfg.capacity_links = int_list<long long>(root["capacity_links"], "capacity_links");
  if (root.contains("optimizer")) {
    const json& o = root["optimizer"];
    check_keys(o, {"mu_min", "mu_max", "mu_step", "g_min", "g_max", "g_points", "refine_rounds", "shrink"},
               "optimizer");
    OptimizerBounds& b = cfg.optimizer;
    if (o.contains("mu_min")) b.mu_min = number(o["mu_min"], "optimizer.mu_min");
    if (o.contains("mu_max")) b.mu_max = number(o["mu_max"], "optimizer.mu_max");
    if (o.contains("mu_step")) b.mu_step = number(o["mu_step"], "optimizer.mu_step");
    if (o.contains("g_min")) b.g_min = number(o["g_min"], "optimizer.g_min");
    if (o.contains("g_max")) b.g_max = number(o["g_max"], "optimizer.g_max");
    if (o.contains("g_points")) b.g_points = static_cast<int>(integer(o["g_points"], "optimizer.g_points"));
    if (o.contains("refine_rounds")) {
      b.refine_rounds = static_cast<int>(integer(o["refine_rounds"], "optimizer.refine_rounds"));
    }
    if (o.contains("shrink")) b.shrink = number(o["shrink"], "optimizer.shrink");
  }
  if (root.contains("montecarlo")) {
    const json& m = root["montecarlo"];
    check_keys(m, {"trials", "seed"}, "montecarlo");
    if (m.contains("trials")) cfg.mc_trials = integer(m["trials"], "montecarlo.trials");
    if (m.contains("seed")) {
      if (!m["seed"].is_number_unsigned()) throw ConfigError("montecarlo.seed", "expected an unsigned integer");
      cfg.seed = m["seed"].get<std::uint64_t>();
    }
  }
  if (root.contains("threads")) cfg.threads = static_cast<int>(integer(root["threads"], "threads"));
  if (root.contains("output")) {
    const json& o = root["output"];
    check_keys(o, {"path", "format"}, "output");
    if (o.contains("path")) {
      if (!o["path"].is_string()) throw ConfigError("output.path", "expected a string");
      cfg.out_path = o["path"].get<std::string>();
    }
    if (o.contains("format")) {
      const std::string f = o["format"].is_string() ? o["format"].get<std::string>() : "";
      if (!parse_format(f, cfg.format)) throw ConfigError("output.format", "expected \"auto\", \"csv\" or \"json\"");
    }
  }
}

}  // namespace

void ScenarioConfig::validate() const {
  try {
    grid().validate();
  } catch (const Error& e) {
    throw ConfigError("", e.what());
  }
  for (int n : depths)
    if (n < 0 || n > 30) throw ConfigError("depths", "each depth must lie in [0, 30]");
  if (coherence_times_s.empty()) throw ConfigError("coherence_times_s", "must not be empty");
  for (double t : coherence_times_s)
    if (!(t > 0.0)) throw ConfigError("coherence_times_s", "each coherence time must be > 0");
  if (capacity_links.empty()) throw ConfigError("capacity_links", "must not be empty");
  for (long long n : capacity_links)
    if (n < 1) throw ConfigError("capacity_links", "each link count must be >= 1");
  if (!(c_speed_km_s > 0.0) || std::isinf(c_speed_km_s)) throw ConfigError("c_speed_km_s", "must be finite and > 0");
  try {
    optimizer.validate();
  } catch (const Error& e) {
    throw ConfigError("optimizer", e.what());
  }
  if (mc_trials < 1) throw ConfigError("montecarlo.trials", "must be >= 1");
  if (threads < 1) throw ConfigError("threads", "must be >= 1");
}

SweepGrid ScenarioConfig::grid() const {
  SweepGrid g;
  g.distances_km = distances_km;
  g.depths = depths;
  g.gains = gains;
  g.mus = mus;
  g.xi = xi;
  g.alpha_db_per_km = alpha_db_per_km;
  g.mem = mem;
  g.c_speed_km_s = c_speed_km_s;
  return g;
}

ScenarioConfig parse_config(const std::string& text, const std::string& origin) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    std::string msg = e.what();
    if (const auto p = msg.find("] "); p != std::string::npos) msg = msg.substr(p + 2);
    throw ConfigError("", origin + ": " + msg);
  }
  ScenarioConfig cfg;
  try {
    fill(cfg, root);
    cfg.validate();
  } catch (const ConfigError& e) {
    const int line = e.field().empty() ? 0 : line_of(text, e.field());
    throw ConfigError("", origin + (line > 0 ? ":" + std::to_string(line) : "") + ": " + e.what());
  }
  return cfg;
}

ScenarioConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("", path + ": cannot open config file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), path);
}

nlohmann::ordered_json to_json(const ScenarioConfig& cfg) {
  nlohmann::ordered_json j;
  j["distances_km"] = cfg.distances_km;
  j["depths"] = cfg.depths;
  j["gains"] = cfg.gains;
  j["mus"] = cfg.mus;
  j["xi"] = cfg.xi;
  j["alpha_db_per_km"] = cfg.alpha_db_per_km;
  j["memory"] = {{"tau_c_s", finite_or_tag(cfg.mem.tau_c)}, {"xi_qm", cfg.mem.xi_qm}};
  j["c_speed_km_s"] = cfg.c_speed_km_s;
  nlohmann::ordered_json taus = nlohmann::ordered_json::array();
  for (double t : cfg.coherence_times_s) taus.push_back(finite_or_tag(t));
  j["coherence_times_s"] = taus;
  j["capacity_links"] = cfg.capacity_links;
  const OptimizerBounds& b = cfg.optimizer;
  j["optimizer"] = {{"mu_min", b.mu_min}, {"mu_max", b.mu_max}, {"mu_step", b.mu_step},
                    {"g_min", b.g_min},   {"g_max", b.g_max},   {"g_points", b.g_points},
                    {"refine_rounds", b.refine_rounds}, {"shrink", b.shrink}};
  j["montecarlo"] = {{"trials", cfg.mc_trials}, {"seed", cfg.seed}};
  j["threads"] = cfg.threads;
  j["output"] = {{"path", cfg.out_path}, {"format", format_name(cfg.format)}};
  return j;
}

const char* format_name(OutputFormat f) {
  switch (f) {
    case OutputFormat::kCsv: return "csv";
    case OutputFormat::kJson: return "json";
    default: return "auto";
  }
}

bool parse_format(const std::string& name, OutputFormat& f) {
  if (name == "auto") f = OutputFormat::kAuto;
  else if (name == "csv") f = OutputFormat::kCsv;
  else if (name == "json") f = OutputFormat::kJson;
  else return false;
  return true;
}

}  // namespace cvrep::cli
