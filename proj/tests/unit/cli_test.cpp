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

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "cvrep/sweep.hpp"
#include "cvrep_cli/commands.hpp"
#include "cvrep_cli/config.hpp"
#include "cvrep_cli/output.hpp"

namespace cvrep::cli {
namespace {

namespace fs = std::filesystem;

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Csv {
  std::vector<std::string> comments;
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  return out;
}

Csv parse_csv(const std::string& text) {
  Csv csv;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    if (line.starts_with("#")) {
      csv.comments.push_back(line);
    } else if (csv.header.empty()) {
      csv.header = split(line);
    } else {
      std::vector<double> row;
      for (const std::string& cell : split(line)) {
        char* end = nullptr;
        row.push_back(std::strtod(cell.c_str(), &end));
        EXPECT_EQ(*end, '\0') << cell;
      }
      EXPECT_EQ(row.size(), csv.header.size());
      csv.rows.push_back(row);
    }
  }
  return csv;
}

ScenarioConfig single_point() {
  ScenarioConfig cfg;
  cfg.distances_km = {200.0};
  cfg.depths = {1};
  cfg.mus = {2.0};
  cfg.gains = {10.0};
  return cfg;
}

TEST(Config, DefaultsParseFromEmptyObject) {
  const ScenarioConfig cfg = parse_config("{}");
  EXPECT_EQ(cfg.distances_km, std::vector<double>{200.0});
  EXPECT_TRUE(std::isinf(cfg.mem.tau_c));
  EXPECT_EQ(cfg.format, OutputFormat::kAuto);
}

TEST(Config, RangesAndInfinity) {
  const ScenarioConfig cfg = parse_config(R"({
    "distances_km": {"from": 100, "to": 300, "count": 3},
    "gains": {"from": 1, "to": 100, "count": 3, "spacing": "log"},
    "memory": {"tau_c_s": "inf", "xi_qm": 0.005},
    "coherence_times_s": [0.001, "inf"]
  })");
  EXPECT_EQ(cfg.distances_km, (std::vector<double>{100.0, 200.0, 300.0}));
  EXPECT_NEAR(cfg.gains[1], 10.0, 1e-12);
  EXPECT_TRUE(std::isinf(cfg.coherence_times_s[1]));
  EXPECT_EQ(cfg.mem.xi_qm, 0.005);
}

std::string config_error(const std::string& text) {
  try {
    parse_config(text, "scenario.json");
  } catch (const ConfigError& e) {
    return e.what();
  }
  return "";
}

TEST(Config, DiagnosticsNameLineAndField) {
  EXPECT_EQ(config_error("{\n  \"xi\": 0,\n  \"mu_list\": [2]\n}"),
            "scenario.json:3: field 'mu_list': unknown key");
  EXPECT_EQ(config_error("{\n \"memory\": {\n  \"xi_qm\": \"high\"\n }\n}"),
            "scenario.json:3: field 'memory.xi_qm': expected a number or \"inf\", got \"high\"");
  EXPECT_NE(config_error("{\"xi\": 0,,}").find("line 1"), std::string::npos);
}

TEST(Config, EmptyDistanceListIsAnError) {
  EXPECT_NE(config_error(R"({"distances_km": []})").find("distances"), std::string::npos);
}

TEST(Config, SemanticChecks) {
  EXPECT_FALSE(config_error(R"({"gains": [0.5]})").empty());
  EXPECT_FALSE(config_error(R"({"memory": {"tau_c_s": -1}})").empty());
  EXPECT_FALSE(config_error(R"({"threads": 0})").empty());
  EXPECT_FALSE(config_error(R"({"output": {"format": "xml"}})").empty());
}

TEST(Config, EchoReparsesToSameConfig) {
  ScenarioConfig cfg = single_point();
  cfg.mem = {3.0, 0.01};
  cfg.seed = 99;
  const ScenarioConfig back = parse_config(to_json(cfg).dump());
  EXPECT_EQ(to_json(back), to_json(cfg));
}

TEST(Output, SeventeenDigitsRoundTrip) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-30.0, 30.0);
  for (int i = 0; i < 10000; ++i) {
    const double x = std::exp(u(rng)) * (i % 2 ? 1 : -1);
    ASSERT_EQ(std::strtod(format_double(x).c_str(), nullptr), x);
  }
  EXPECT_EQ(format_double(NAN), "nan");
  EXPECT_EQ(format_double(-INFINITY), "-inf");
}

TEST(RateCurve, SinglePointGivesOneRowMatchingTheLibrary) {
  std::ostringstream out, diag;
  EXPECT_EQ(run_command(Command::kRateCurve, single_point(), out, diag), 0u);
  const Csv csv = parse_csv(out.str());
  ASSERT_EQ(csv.rows.size(), 1u);
  EXPECT_EQ(csv.header, record_columns());
  ASSERT_EQ(csv.comments.size(), 2u);
  const std::string echo = csv.comments[1].substr(std::string("# config ").size());
  EXPECT_NO_THROW(parse_config(echo));

  const RateRecord r = evaluate_point({200.0, 1, 2.0, 10.0});
  EXPECT_EQ(csv.rows[0][0], 200.0);
  EXPECT_EQ(csv.rows[0][2], 2.0);
  EXPECT_EQ(csv.rows[0][12], r.a);
  EXPECT_EQ(csv.rows[0][21], r.rate_weighted);
  EXPECT_EQ(csv.rows[0][24], r.repeater_cap);
}

TEST(RateCurve, JsonReparses) {
  ScenarioConfig cfg = single_point();
  cfg.gains = {10.0, 30.0};
  cfg.format = OutputFormat::kJson;
  std::ostringstream out, diag;
  run_command(Command::kRateCurve, cfg, out, diag);
  const auto doc = nlohmann::json::parse(out.str());
  ASSERT_EQ(doc["records"].size(), 2u);
  EXPECT_EQ(doc["records"][1]["status"], "invalid");
  EXPECT_TRUE(doc["records"][1]["rate_weighted"].is_null());
  EXPECT_EQ(doc["records"][0]["tau_c_s"], "inf");
}

TEST(MemoryCurve, RowsPerCoherenceTime) {
  ScenarioConfig cfg = single_point();
  cfg.coherence_times_s = {1e-3, 1.0, 1e3};
  std::ostringstream out, diag;
  run_command(Command::kMemoryCurve, cfg, out, diag);
  const Csv csv = parse_csv(out.str());
  ASSERT_EQ(csv.rows.size(), 3u);
  EXPECT_EQ(csv.rows[2][9], 1e3);
  EXPECT_LE(csv.rows[0][22], csv.rows[2][22]);
}

TEST(Capacity, ColumnsAndValues) {
  ScenarioConfig cfg;
  cfg.distances_km = {200.0};
  cfg.capacity_links = {1, 2};
  std::ostringstream out, diag;
  run_command(Command::kCapacity, cfg, out, diag);
  const Csv csv = parse_csv(out.str());
  ASSERT_EQ(csv.rows.size(), 2u);
  EXPECT_EQ(csv.rows[0][3], csv.rows[0][4]);
  EXPECT_NEAR(csv.rows[1][4], 1.45e-2, 1e-4);
}

TEST(Optimize, JsonReportWithAuditGrid) {
  ScenarioConfig cfg = single_point();
  std::ostringstream out, diag;
  EXPECT_EQ(run_command(Command::kOptimize, cfg, out, diag), 0u);
  const auto doc = nlohmann::json::parse(out.str());
  const auto& res = doc["results"][0];
  EXPECT_TRUE(res["found"].get<bool>());
  EXPECT_LT(res["best"]["lambda_g"].get<double>(), 1.0);
  EXPECT_GT(res["evaluated"].size(), 600u);
  cfg.format = OutputFormat::kCsv;
  EXPECT_THROW(run_command(Command::kOptimize, cfg, out, diag), ConfigError);
}

TEST(MonteCarlo, SeedEchoedAndInvalidPointsSkipped) {
  ScenarioConfig cfg = single_point();
  cfg.gains = {10.0, 30.0};
  cfg.mc_trials = 500;
  cfg.seed = 7;
  cfg.mem = {1.0, 0.005};
  std::ostringstream out, diag;
  EXPECT_EQ(run_command(Command::kMonteCarlo, cfg, out, diag), 0u);
  const auto doc = nlohmann::json::parse(out.str());
  EXPECT_EQ(doc["seed"], 7);
  EXPECT_EQ(doc["results"][0]["status"], "ok");
  EXPECT_EQ(doc["results"][0]["link_completion_s"]["count"], 1000);
  EXPECT_EQ(doc["results"][1]["status"], "invalid");
}

#ifdef CVREP_TOOL_PATH
class Tool : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("cvrep_cli_test_" + std::to_string(std::random_device{}()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  int run(const std::string& args) {
    const std::string cmd = std::string(CVREP_TOOL_PATH) + " " + args + " 2>" + (dir_ / "stderr").string();
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }
  fs::path path(const std::string& name) const { return dir_ / name; }

  fs::path dir_;
};

TEST_F(Tool, RerunsAreByteIdentical) {
  const std::string common = "--distance 100 200 300 --depth 1 2 --mu 2 3 --gain 1 5 10 20 ";
  ASSERT_EQ(run("rate-curve " + common + "--out " + path("a.csv").string()), 0);
  ASSERT_EQ(run("rate-curve " + common + "--threads 3 --out " + path("b.csv").string()), 0);
  EXPECT_EQ(slurp(path("a.csv")), slurp(path("b.csv")));
  EXPECT_EQ(parse_csv(slurp(path("a.csv"))).rows.size(), 48u);

  const std::string mc = "montecarlo --distance 200 --depth 2 --mu 2 --gain 8 --tau-c 1 --seed 11 ";
  ASSERT_EQ(run(mc + "--out " + path("a.json").string()), 0);
  ASSERT_EQ(run(mc + "--threads 2 --out " + path("b.json").string()), 0);
  EXPECT_EQ(slurp(path("a.json")), slurp(path("b.json")));
}

TEST_F(Tool, ConfigFileWithOverrides) {
  std::ofstream(path("cfg.json")) << R"({"distances_km": [150], "depths": [1], "mus": [2], "gains": [4]})";
  ASSERT_EQ(run("rate-curve --config " + path("cfg.json").string() + " --gain 4 8 --out " +
                path("o.csv").string()),
            0);
  EXPECT_EQ(parse_csv(slurp(path("o.csv"))).rows.size(), 2u);
}

TEST_F(Tool, ConfigErrorsExitNonZero) {
  std::ofstream(path("empty.json")) << "{\n  \"distances_km\": []\n}\n";
  EXPECT_EQ(run("rate-curve --config " + path("empty.json").string()), 2);
  EXPECT_NE(slurp(path("stderr")).find("distances"), std::string::npos);
  EXPECT_EQ(run("optimize --format csv"), 2);
  EXPECT_EQ(run("rate-curve --tau-c 1 2"), 2);
  EXPECT_NE(run("no-such-command"), 0);
}

TEST_F(Tool, ErroredRecordsGiveExitOne) {
  EXPECT_EQ(run("rate-curve --distance 0 --depth 0 --mu 10 --gain 20 --xi 0.2 --out " + path("e.csv").string()), 1);
  EXPECT_NE(slurp(path("e.csv")).find("# error row 0"), std::string::npos);
}
#endif

}  // namespace
}  // namespace cvrep::cli
