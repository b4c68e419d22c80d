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

// Benchmark capacities and the achievable-rate functional.
#pragma once

#include <limits>
#include <string>

#include "cvrep/gaussian.hpp"

namespace cvrep {

// Repeaterless secret-key capacity of the pure-loss channel, -log2(1 - eta).
// Throws DomainError unless 0 < eta < 1.
double plob_lossy(double eta_total);

// End-to-end capacity of a chain of N equal pure-loss links of total
// transmittance eta: -log2(1 - eta^{1/N}). N = 1 is plob_lossy.
double repeater_capacity(double eta_total, long long links);

struct RateFragment {
  double ci = 0.0;
  double rci = 0.0;
  double lower_bound = 0.0;    // max(ci, rci), may be negative
  double p_succ = 1.0;         // 1 / g^2 for the whole parallel chain
  double rate_weighted = 0.0;  // p_succ * lower_bound
  double rate_clamped = 0.0;   // p_succ * max(0, lower_bound), for plotting
};

RateFragment achievable_rate(const TwoModeCM& cm, double g);

// One evaluated configuration. Fields that were not reached are NaN: an
// invalid point (lambda_g >= 1) carries its inputs and lambda_g only.
struct RateRecord {
  enum class Status { kOk, kInvalid, kError };
  static constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

  // Inputs.
  double length_km = kNaN;
  int depth = 0;
  long long links = 1;
  double mu = kNaN;
  double g = kNaN;
  double eta_total = kNaN;
  double xi = kNaN;
  double tau_c = kNaN;
  double xi_qm = kNaN;

  // Link and chain.
  double lambda_g = kNaN;
  bool valid = false;
  double t_store = kNaN;
  double a = kNaN;
  double b = kNaN;
  double c = kNaN;
  double nu_minus = kNaN;
  double nu_plus = kNaN;

  // Rates and benchmarks (bits per channel use).
  double ci = kNaN;
  double rci = kNaN;
  double lower_bound = kNaN;
  double p_succ = kNaN;
  double rate_weighted = kNaN;
  double rate_clamped = kNaN;
  double plob = kNaN;
  double repeater_cap = kNaN;

  Status status = Status::kOk;
  std::string error;
};

}  // namespace cvrep
