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

#include "cvrep/memory.hpp"

#include <cmath>

#include "cvrep/error.hpp"

namespace cvrep {

bool MemoryParams::is_ideal() const noexcept { return std::isinf(tau_c) && xi_qm == 0.0; }

void MemoryParams::validate() const {
  if (!(tau_c > 0.0)) throw DomainError("memory: tau_c must be > 0 (or inf)");
  if (!(xi_qm >= 0.0) || std::isinf(xi_qm)) throw DomainError("memory: xi_qm must be >= 0");
}

void TimingParams::validate() const {
  if (!(length_km >= 0.0)) throw DomainError("timing: link length must be >= 0");
  if (!(c_speed_km_s > 0.0)) throw DomainError("timing: signal speed must be > 0");
  if (!(p_succ > 0.0 && p_succ <= 1.0)) throw DomainError("timing: p_succ must lie in (0, 1]");
}

TwoModeCM decohere(const TwoModeCM& v, double t, const MemoryParams& mem) {
  if (!(t >= 0.0)) throw DomainError("decohere: storage time must be >= 0");
  mem.validate();
  if (std::isinf(mem.tau_c)) return v;

  const double keep = std::exp(-t / mem.tau_c);
  const double thermal = 1.0 + mem.xi_qm;
  const double added = thermal * (1.0 - keep);
  const double a = thermal + (v.a() - thermal) * keep;
  const double b = thermal + (v.b() - thermal) * keep;
  const double c = v.c() * keep;
  // (k a + n)(k b + n) - k^2 c^2 with n the added variance; all terms >= 0.
  const double det_root =
      keep * keep * v.det_root() + added * keep * (v.a() + v.b()) + added * added;
  return TwoModeCM::with_det_root(a, b, c, det_root);
}

double heralding_time(const TimingParams& tp) {
  tp.validate();
  return 2.0 * tp.length_km / (tp.c_speed_km_s * tp.p_succ);
}

double nla_success_probability(double g) {
  if (!(g >= 1.0)) throw DomainError("NLA gain g must be >= 1");
  return 1.0 / (g * g);
}

}  // namespace cvrep
