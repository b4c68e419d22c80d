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

// Entanglement swapping with CV Bell measurements: the standard-form recursion
// for chains of identical links, a closed-form relay for two unequal
// standard-form links, and the general block-matrix conditioning formula.
#pragma once

#include "cvrep/gaussian.hpp"
#include "cvrep/memory.hpp"

namespace cvrep {

struct ChainSpec {
  int depth = 0;  // N = 2^depth identical links
  TwoModeCM link_cm = tmsv(1.0);
  MemoryParams mem;
  double t_store = 0.0;  // seconds every link spends in memory before swapping

  void validate() const;
  long long link_count() const { return 1LL << depth; }
};

// Relay of two standard-form links (a1, b1, c1) and (a2, b2, c2) by a Bell
// measurement on modes b1 and a2:
//   a' = a1 - c1^2 / s,  b' = b2 - c2^2 / s,  c' = c1 c2 / s,  s = b1 + a2.
TwoModeCM bell_relay(const TwoModeCM& left, const TwoModeCM& right);

// One recursion step for two identical copies of v:
//   a' = a - c^2/(a+b),  b' = b - c^2/(a+b),  c' = c^2/(a+b).
// Throws DegeneracyError if a + b <= 1e-12.
TwoModeCM swap_once(const TwoModeCM& v);

// Decoheres the link for t_store, then applies swap_once `depth` times.
TwoModeCM chain_cm(const ChainSpec& spec);

// Compound CM of two independent links with modes ordered (a1, b2, b1, a2),
// i.e. the outer modes first and the two measured modes last.
FourModeCM assemble_relay_input(const TwoModeCM& left, const TwoModeCM& right);

// Conditional CM of (a1, b2) after CV Bell detection on (b1, a2):
//
//   V' = V_{a1 b2} - 1/(2 det Y) sum_{j,k} C_j (w_j^T Y w_k) C_k^T,
//   Y  = (Z B Z + A - Z D - D^T Z) / 2,
//
// with B, A, D the blocks of the measured modes b1, a2 and C_1, C_2 their
// cross-correlations with (a1, b2); w_1 = [[0,1],[1,0]], w_2 = [[0,1],[-1,0]].
// The result does not depend on the measurement outcome. Throws
// DegeneracyError if |det Y| <= 1e-12.
GeneralCM bell_relay_general(const FourModeCM& v);

}  // namespace cvrep
