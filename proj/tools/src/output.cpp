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

#include "cvrep_cli/output.hpp"

#include <cmath>
#include <cstdio>

namespace cvrep::cli {

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

const std::vector<std::string>& record_columns() {
  static const std::vector<std::string> cols = {
      "L_km",   "n",         "N",       "mu",    "g",        "eta_total", "xi_snu",
      "lambda_g", "valid",   "tau_c_s", "xi_qm_snu", "t_store_s", "a",   "b",
      "c",      "nu_minus",  "nu_plus", "ci",    "rci",      "lower_bound", "p_succ",
      "rate_weighted", "rate_clamped", "plob", "repeater_cap"};
  return cols;
}

void write_csv_header(std::ostream& out, const std::vector<std::string>& columns) {
  for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << columns[i];
  out << '\n';
}

void write_csv_row(std::ostream& out, const RateRecord& r) {
  const double fields[] = {r.a, r.b, r.c, r.nu_minus, r.nu_plus, r.ci, r.rci, r.lower_bound,
                           r.p_succ, r.rate_weighted, r.rate_clamped, r.plob, r.repeater_cap};
  out << format_double(r.length_km) << ',' << r.depth << ',' << r.links << ',' << format_double(r.mu)
      << ',' << format_double(r.g) << ',' << format_double(r.eta_total) << ',' << format_double(r.xi)
      << ',' << format_double(r.lambda_g) << ',' << (r.valid ? 1 : 0) << ','
      << format_double(r.tau_c) << ',' << format_double(r.xi_qm) << ',' << format_double(r.t_store);
  for (double f : fields) out << ',' << format_double(f);
  out << '\n';
}

nlohmann::ordered_json json_number(double x) {
  if (std::isnan(x)) return nullptr;
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

const char* status_name(RateRecord::Status s) {
  switch (s) {
    case RateRecord::Status::kOk: return "ok";
    case RateRecord::Status::kInvalid: return "invalid";
    default: return "error";
  }
}

nlohmann::ordered_json record_json(const RateRecord& r) {
  nlohmann::ordered_json j;
  j["L_km"] = json_number(r.length_km);
  j["n"] = r.depth;
  j["N"] = r.links;
  j["mu"] = json_number(r.mu);
  j["g"] = json_number(r.g);
  j["eta_total"] = json_number(r.eta_total);
  j["xi_snu"] = json_number(r.xi);
  j["lambda_g"] = json_number(r.lambda_g);
  j["valid"] = r.valid;
  j["tau_c_s"] = json_number(r.tau_c);
  j["xi_qm_snu"] = json_number(r.xi_qm);
  j["t_store_s"] = json_number(r.t_store);
  j["a"] = json_number(r.a);
  j["b"] = json_number(r.b);
  j["c"] = json_number(r.c);
  j["nu_minus"] = json_number(r.nu_minus);
  j["nu_plus"] = json_number(r.nu_plus);
  j["ci"] = json_number(r.ci);
  j["rci"] = json_number(r.rci);
  j["lower_bound"] = json_number(r.lower_bound);
  j["p_succ"] = json_number(r.p_succ);
  j["rate_weighted"] = json_number(r.rate_weighted);
  j["rate_clamped"] = json_number(r.rate_clamped);
  j["plob"] = json_number(r.plob);
  j["repeater_cap"] = json_number(r.repeater_cap);
  j["status"] = status_name(r.status);
  if (!r.error.empty()) j["error"] = r.error;
  return j;
}

nlohmann::ordered_json stats_json(const SummaryStats& s) {
  return {{"mean", json_number(s.mean)},     {"std_error", json_number(s.std_error)},
          {"median", json_number(s.median)}, {"p05", json_number(s.p05)},
          {"p95", json_number(s.p95)},       {"min", json_number(s.min)},
          {"max", json_number(s.max)},       {"count", s.count}};
}

}  // namespace cvrep::cli
