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

#include "cvrep_cli/commands.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "cvrep/chain.hpp"
#include "cvrep/error.hpp"
#include "cvrep/link.hpp"
#include "cvrep/montecarlo.hpp"
#include "cvrep/sweep.hpp"
#include "cvrep_cli/output.hpp"

namespace cvrep::cli {
namespace {

using ojson = nlohmann::ordered_json;

// Run options (threads, output path) are left out so reruns compare equal.
ojson echoed_config(const ScenarioConfig& cfg) {
  ojson j = to_json(cfg);
  j.erase("threads");
  j["output"].erase("path");
  return j;
}

OutputFormat resolve(Command cmd, OutputFormat f) {
  const bool nested = cmd == Command::kOptimize || cmd == Command::kMonteCarlo;
  if (f == OutputFormat::kAuto) return nested ? OutputFormat::kJson : OutputFormat::kCsv;
  if (nested && f == OutputFormat::kCsv) {
    throw ConfigError("output.format", std::string(command_name(cmd)) + " writes JSON only");
  }
  return f;
}

std::size_t count_errors(const std::vector<RateRecord>& recs, std::ostream& diag) {
  std::size_t errors = 0;
  for (std::size_t i = 0; i < recs.size(); ++i) {
    if (recs[i].status != RateRecord::Status::kError) continue;
    if (errors < 10) diag << "record " << i << ": " << recs[i].error << '\n';
    ++errors;
  }
  return errors;
}

void write_records(Command cmd, const ScenarioConfig& cfg, OutputFormat fmt,
                   const std::vector<RateRecord>& recs, std::ostream& out) {
  if (fmt == OutputFormat::kJson) {
    ojson doc;
    doc["command"] = command_name(cmd);
    doc["config"] = echoed_config(cfg);
    doc["records"] = ojson::array();
    for (const RateRecord& r : recs) doc["records"].push_back(record_json(r));
    out << doc.dump(1) << '\n';
    return;
  }
  out << "# cvrep " << command_name(cmd) << '\n';
  out << "# config " << echoed_config(cfg).dump() << '\n';
  write_csv_header(out, record_columns());
  for (const RateRecord& r : recs) write_csv_row(out, r);
  for (std::size_t i = 0; i < recs.size(); ++i) {
    if (recs[i].status == RateRecord::Status::kError) out << "# error row " << i << ": " << recs[i].error << '\n';
  }
}

std::size_t rate_curve(const ScenarioConfig& cfg, OutputFormat fmt, std::ostream& out, std::ostream& diag) {
  const auto recs = run_sweep(cfg.grid(), cfg.threads);
  write_records(Command::kRateCurve, cfg, fmt, recs, out);
  return count_errors(recs, diag);
}

std::size_t memory_curve(const ScenarioConfig& cfg, OutputFormat fmt, std::ostream& out, std::ostream& diag) {
  const auto recs = run_memory_sweep(cfg.grid(), cfg.coherence_times_s, cfg.threads);
  write_records(Command::kMemoryCurve, cfg, fmt, recs, out);
  return count_errors(recs, diag);
}

std::size_t capacity(const ScenarioConfig& cfg, OutputFormat fmt, std::ostream& out) {
  struct Row {
    double length_km, eta, plob, cap;
    long long links;
  };
  std::vector<Row> rows;
  for (double L : cfg.distances_km) {
    const double eta = transmittance_from_length(L, cfg.alpha_db_per_km);
    for (long long n : cfg.capacity_links) {
      const double inf = std::numeric_limits<double>::infinity();
      rows.push_back({L, eta, eta < 1.0 ? plob_lossy(eta) : inf, eta < 1.0 ? repeater_capacity(eta, n) : inf, n});
    }
  }
  if (fmt == OutputFormat::kJson) {
    ojson doc;
    doc["command"] = command_name(Command::kCapacity);
    doc["config"] = echoed_config(cfg);
    doc["records"] = ojson::array();
    for (const Row& r : rows) {
      doc["records"].push_back({{"L_km", json_number(r.length_km)}, {"N", r.links},
                                {"eta_total", json_number(r.eta)}, {"plob", json_number(r.plob)},
                                {"repeater_cap", json_number(r.cap)}});
    }
    out << doc.dump(1) << '\n';
    return 0;
  }
  out << "# cvrep capacity\n# config " << echoed_config(cfg).dump() << '\n';
  write_csv_header(out, {"L_km", "N", "eta_total", "plob", "repeater_cap"});
  for (const Row& r : rows) {
    out << format_double(r.length_km) << ',' << r.links << ',' << format_double(r.eta) << ','
        << format_double(r.plob) << ',' << format_double(r.cap) << '\n';
  }
  return 0;
}

std::size_t optimize(const ScenarioConfig& cfg, std::ostream& out, std::ostream& diag) {
  ojson doc;
  doc["command"] = command_name(Command::kOptimize);
  doc["config"] = echoed_config(cfg);
  doc["results"] = ojson::array();
  std::size_t errors = 0;
  for (double L : cfg.distances_km) {
    for (int n : cfg.depths) {
      const OptimumPoint opt = optimize_point(
          {L, n, cfg.xi, cfg.mem, cfg.alpha_db_per_km, cfg.c_speed_km_s, cfg.optimizer}, cfg.threads);
      ojson res;
      res["L_km"] = json_number(L);
      res["n"] = n;
      res["found"] = opt.found;
      res["g_opt"] = json_number(opt.g_opt);
      res["mu_opt"] = json_number(opt.mu_opt);
      res["rate_opt"] = json_number(opt.rate_opt);
      res["coarse_rate"] = json_number(opt.coarse_rate);
      res["best"] = opt.found ? record_json(opt.best) : ojson(nullptr);
      res["boundary"] = ojson::array();
      for (const GainBoundary& b : opt.boundary) {
        res["boundary"].push_back({{"mu", b.mu}, {"g_max", b.g_max ? json_number(*b.g_max) : ojson(nullptr)}});
      }
      res["evaluated"] = ojson::array();
      for (const RateRecord& r : opt.evaluated) res["evaluated"].push_back(record_json(r));
      errors += count_errors(opt.evaluated, diag);
      doc["results"].push_back(std::move(res));
    }
  }
  out << doc.dump(1) << '\n';
  return errors;
}

std::size_t montecarlo(const ScenarioConfig& cfg, std::ostream& out, std::ostream& diag) {
  ojson doc;
  doc["command"] = command_name(Command::kMonteCarlo);
  doc["config"] = echoed_config(cfg);
  doc["seed"] = cfg.seed;
  doc["results"] = ojson::array();
  std::size_t errors = 0;
  for (double L : cfg.distances_km)
    for (int n : cfg.depths)
      for (double mu : cfg.mus)
        for (double g : cfg.gains) {
          ojson res{{"L_km", json_number(L)}, {"n", n}, {"mu", mu}, {"g", g}};
          try {
            const long long links = 1LL << n;
            const double link_km = L / static_cast<double>(links);
            const double eta = transmittance_from_length(link_km, cfg.alpha_db_per_km);
            const EquivalentParams eq = nla_equivalent({mu, eta, cfg.xi, g, link_km});
            res["lambda_g"] = json_number(eq.lambda_g);
            res["valid"] = eq.valid;
            if (!eq.valid) {
              res["status"] = "invalid";
              doc["results"].push_back(std::move(res));
              continue;
            }
            const McConfig mc{links, nla_success_probability(g), 2.0 * link_km / cfg.c_speed_km_s,
                              cfg.mc_trials, cfg.seed};
            const McRateReport rep = mc_rate(mc, basic_link_cm(eq), cfg.mem, n, g, cfg.threads);
            res["N"] = links;
            res["p_succ"] = json_number(mc.p_succ);
            res["round_time_s"] = json_number(mc.round_time);
            res["trials"] = rep.trials;
            res["expected_link_completion_s"] = json_number(rep.expected_link_completion);
            res["link_completion_s"] = stats_json(rep.link_completion);
            res["chain_completion_s"] = stats_json(rep.chain_completion);
            res["storage_s"] = stats_json(rep.storage);
            res["lower_bound"] = stats_json(rep.lower_bound);
            res["rate_weighted"] = stats_json(rep.rate_weighted);
            res["uniform_t_store_s"] = json_number(rep.uniform_t_store);
            res["uniform_rate_weighted"] = json_number(rep.uniform_rate_weighted);
            res["mean_at_least_uniform"] = rep.mean_at_least_uniform;
            res["status"] = "ok";
          } catch (const Error& e) {
            res["status"] = "error";
            res["error"] = e.what();
            diag << "L=" << L << " n=" << n << " mu=" << mu << " g=" << g << ": " << e.what() << '\n';
            ++errors;
          }
          doc["results"].push_back(std::move(res));
        }
  out << doc.dump(1) << '\n';
  return errors;
}

}  // namespace

const char* command_name(Command c) {
  switch (c) {
    case Command::kRateCurve: return "rate-curve";
    case Command::kOptimize: return "optimize";
    case Command::kMemoryCurve: return "memory-curve";
    case Command::kCapacity: return "capacity";
    default: return "montecarlo";
  }
}

std::optional<Command> parse_command(const std::string& name) {
  for (Command c : {Command::kRateCurve, Command::kOptimize, Command::kMemoryCurve, Command::kCapacity,
                    Command::kMonteCarlo}) {
    if (name == command_name(c)) return c;
  }
  return std::nullopt;
}

std::size_t run_command(Command cmd, const ScenarioConfig& cfg, std::ostream& out, std::ostream& diag) {
  cfg.validate();
  const OutputFormat fmt = resolve(cmd, cfg.format);
  switch (cmd) {
    case Command::kRateCurve: return rate_curve(cfg, fmt, out, diag);
    case Command::kMemoryCurve: return memory_curve(cfg, fmt, out, diag);
    case Command::kCapacity: return capacity(cfg, fmt, out);
    case Command::kOptimize: return optimize(cfg, out, diag);
    default: return montecarlo(cfg, out, diag);
  }
}

int execute(Command cmd, const ScenarioConfig& cfg, std::ostream& diag) {
  // Buffer first so a config error never leaves a truncated file behind.
  std::ostringstream buf;
  std::size_t errors = 0;
  try {
    errors = run_command(cmd, cfg, buf, diag);
  } catch (const ConfigError& e) {
    diag << "config error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    diag << "error: " << e.what() << '\n';
    return 2;
  }
  if (cfg.out_path.empty()) {
    std::cout << buf.str() << std::flush;
  } else {
    std::ofstream f(cfg.out_path, std::ios::binary);
    if (!(f << buf.str()) || !f.flush()) {
      diag << "error: cannot write " << cfg.out_path << '\n';
      return 2;
    }
  }
  if (errors > 0) {
    diag << errors << " record(s) ended in an error\n";
    return 1;
  }
  return 0;
}

}  // namespace cvrep::cli
