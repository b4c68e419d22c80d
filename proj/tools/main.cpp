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

// cvrep: sweeps, optimisation and Monte Carlo audits for CV repeater chains.
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cvrep_cli/commands.hpp"
#include "cvrep_cli/config.hpp"

namespace {

using cvrep::cli::Command;
using cvrep::cli::ConfigError;
using cvrep::cli::ScenarioConfig;

struct Flags {
  std::string config;
  std::string out;
  std::string format;
  std::uint64_t seed = 0;
  int threads = 1;
  double c_speed = 0.0;
  std::vector<double> distance, gain, mu;
  std::vector<int> depth;
  double xi = 0.0, xi_qm = 0.0, alpha = 0.0;
  std::vector<std::string> tau_c;
};

void add_flags(CLI::App* sub, Flags& f) {
  sub->add_option("--config", f.config, "JSON scenario file")->check(CLI::ExistingFile);
  sub->add_option("--out", f.out, "output path (default: stdout)");
  sub->add_option("--format", f.format, "output format")->check(CLI::IsMember({"auto", "csv", "json"}));
  sub->add_option("--seed", f.seed, "Monte Carlo seed");
  sub->add_option("--threads", f.threads, "worker threads")->check(CLI::PositiveNumber);
  sub->add_option("--c-speed", f.c_speed, "signal speed in km/s");
  sub->add_option("--distance", f.distance, "total distances in km");
  sub->add_option("--depth", f.depth, "repeater depths n (N = 2^n links)");
  sub->add_option("--gain", f.gain, "NLA gains g");
  sub->add_option("--mu", f.mu, "TMSV variances mu");
  sub->add_option("--xi", f.xi, "channel excess noise (snu)");
  sub->add_option("--tau-c", f.tau_c, "memory coherence time(s) in s, or inf");
  sub->add_option("--xi-qm", f.xi_qm, "memory excess noise (snu)");
  sub->add_option("--alpha", f.alpha, "fiber loss in dB/km");
}

double parse_seconds(const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw ConfigError("--tau-c", "not a number: " + s);
  return v;
}

ScenarioConfig effective_config(Command cmd, const CLI::App& sub, const Flags& f) {
  ScenarioConfig cfg = f.config.empty() ? ScenarioConfig{} : cvrep::cli::load_config_file(f.config);
  auto given = [&](const char* name) { return sub.count(name) > 0; };
  if (given("--out")) cfg.out_path = f.out;
  if (given("--format")) cvrep::cli::parse_format(f.format, cfg.format);
  if (given("--seed")) cfg.seed = f.seed;
  if (given("--threads")) cfg.threads = f.threads;
  if (given("--c-speed")) cfg.c_speed_km_s = f.c_speed;
  if (given("--distance")) cfg.distances_km = f.distance;
  if (given("--depth")) cfg.depths = f.depth;
  if (given("--gain")) cfg.gains = f.gain;
  if (given("--mu")) cfg.mus = f.mu;
  if (given("--xi")) cfg.xi = f.xi;
  if (given("--xi-qm")) cfg.mem.xi_qm = f.xi_qm;
  if (given("--alpha")) cfg.alpha_db_per_km = f.alpha;
  if (given("--tau-c")) {
    std::vector<double> taus;
    for (const std::string& s : f.tau_c) taus.push_back(parse_seconds(s));
    if (cmd == Command::kMemoryCurve) {
      cfg.coherence_times_s = taus;
    } else if (taus.size() == 1) {
      cfg.mem.tau_c = taus[0];
    } else {
      throw ConfigError("--tau-c", "takes a single value outside memory-curve");
    }
  }
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rates, optimisation and Monte Carlo audits for CV quantum repeater chains"};
  app.require_subcommand(1);
  Flags flags;
  std::vector<std::pair<Command, CLI::App*>> subs;
  const std::pair<Command, const char*> commands[] = {
      {Command::kRateCurve, "rate vs distance over a (L, n, mu, g) grid"},
      {Command::kOptimize, "optimise (g, mu) per distance and depth"},
      {Command::kMemoryCurve, "rate vs memory coherence time"},
      {Command::kCapacity, "repeaterless and repeater capacities vs distance"},
      {Command::kMonteCarlo, "Monte Carlo audit of heralding and storage times"},
  };
  for (const auto& [cmd, help] : commands) {
    CLI::App* sub = app.add_subcommand(cvrep::cli::command_name(cmd), help);
    add_flags(sub, flags);
    subs.emplace_back(cmd, sub);
  }
  CLI11_PARSE(app, argc, argv);

  for (const auto& [cmd, sub] : subs) {
    if (!sub->parsed()) continue;
    try {
      return cvrep::cli::execute(cmd, effective_config(cmd, *sub, flags), std::cerr);
    } catch (const ConfigError& e) {
      std::cerr << "config error: " << e.what() << '\n';
      return 2;
    }
  }
  return 2;
}
