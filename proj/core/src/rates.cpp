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

#include "cvrep/rates.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cvrep/error.hpp"
#include "cvrep/memory.hpp"

namespace cvrep {
namespace {

double neg_log2_one_minus(double x) { return -std::log1p(-x) / std::numbers::ln2; }

void check_transmittance(double eta) {
  if (!(eta > 0.0 && eta < 1.0)) {
    throw DomainError("capacity: total transmittance must lie strictly inside (0, 1)");
  }
}

}  // namespace

double plob_lossy(double eta_total) {
  check_transmittance(eta_total);
  return neg_log2_one_minus(eta_total);
}

double repeater_capacity(double eta_total, long long links) {
  check_transmittance(eta_total);
  if (links < 1) throw DomainError("capacity: link count must be >= 1");
  // pow(x, 1.0) == x, so N = 1 reproduces plob_lossy bit for bit.
  return neg_log2_one_minus(std::pow(eta_total, 1.0 / static_cast<double>(links)));
}

RateFragment achievable_rate(const TwoModeCM& cm, double g) {
  RateFragment r;
  r.ci = coherent_information(cm);
  r.rci = reverse_coherent_information(cm);
  r.lower_bound = std::max(r.ci, r.rci);
  r.p_succ = nla_success_probability(g);
  r.rate_weighted = r.p_succ * r.lower_bound;
  r.rate_clamped = r.p_succ * std::max(0.0, r.lower_bound);
  return r;
}

}  // namespace cvrep
