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

// Non-ideal CV quantum memories: storage acts on each mode as a thermal-loss
// channel with transmissivity exp(-t / tau_c) relaxing towards a thermal state
// of variance 1 + xi_qm.
#pragma once

#include <limits>

#include "cvrep/gaussian.hpp"

namespace cvrep {

// Light in fibre.
inline constexpr double kFiberLightSpeedKmPerS = 2.0e5;

struct MemoryParams {
  double tau_c = std::numeric_limits<double>::infinity();  // seconds
  double xi_qm = 0.0;                                      // snu

  static MemoryParams ideal() { return {}; }
  bool is_ideal() const noexcept;
  void validate() const;
};

struct TimingParams {
  double length_km = 0.0;
  double c_speed_km_s = kFiberLightSpeedKmPerS;
  double p_succ = 1.0;

  void validate() const;
};

// Both memories of a pair decay together:
//   a(t) = 1 + xi_qm + (a(0) - 1 - xi_qm) e^{-t/tau_c}, likewise b,
//   c(t) = c(0) e^{-t/tau_c}.
// An ideal memory (tau_c = inf) returns v unchanged. Throws DomainError for t < 0.
TwoModeCM decohere(const TwoModeCM& v, double t, const MemoryParams& mem);

// Mean time until a link's NLA heralds success: 2 L0 / (c p_succ).
double heralding_time(const TimingParams& tp);

// Ideal-NLA success probability 1 / g^2.
double nla_success_probability(double g);

}  // namespace cvrep
