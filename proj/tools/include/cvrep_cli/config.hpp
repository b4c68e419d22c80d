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

// Scenario configuration for the cvrep tool: a JSON document plus command
// line overrides, validated before any command runs.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cvrep/memory.hpp"
#include "cvrep/sweep.hpp"

namespace cvrep::cli {

class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& what)
      : std::runtime_error(field.empty() ? what : "field '" + field + "': " + what),
        field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

// kAuto picks CSV for curve commands and JSON for nested reports.
enum class OutputFormat { kAuto, kCsv, kJson };

struct ScenarioConfig {
  std::vector<double> distances_km = {200.0};
  std::vector<int> depths = {1};
  std::vector<double> gains = {1.0};
  std::vector<double> mus = {2.0};
  double xi = 0.0;
  double alpha_db_per_km = 0.2;
  MemoryParams mem;
  double c_speed_km_s = kFiberLightSpeedKmPerS;

  std::vector<double> coherence_times_s = {1e-3, 1e-2, 1e-1, 1.0, 10.0, 100.0, 1000.0};
  std::vector<long long> capacity_links = {1, 2, 4};
  OptimizerBounds optimizer;

  long long mc_trials = 10000;
  std::uint64_t seed = 0;

  int threads = 1;
  std::string out_path;  // empty: standard output
  OutputFormat format = OutputFormat::kAuto;

  // Throws ConfigError naming the field.
  void validate() const;
  SweepGrid grid() const;
};

// Parses a JSON config. Unknown keys and type mismatches raise ConfigError
// with `origin`, the line of the offending key, and the field path.
ScenarioConfig parse_config(const std::string& text, const std::string& origin = "<config>");
ScenarioConfig load_config_file(const std::string& path);

// Effective config, in the same schema parse_config accepts.
nlohmann::ordered_json to_json(const ScenarioConfig& cfg);

const char* format_name(OutputFormat f);
bool parse_format(const std::string& name, OutputFormat& f);

}  // namespace cvrep::cli
