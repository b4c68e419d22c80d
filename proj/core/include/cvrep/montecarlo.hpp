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

// Monte Carlo audit of the uniform storage-time assumption: every link
// retries its NLA once per round trip until it heralds, and waits in memory
// for the slowest link before the swaps run.
#pragma once

#include <cstdint>
#include <vector>

#include "cvrep/gaussian.hpp"
#include "cvrep/memory.hpp"

namespace cvrep {

struct McConfig {
  long long links = 1;      // N = 2^n
  double p_succ = 1.0;      // per-round NLA success probability
  double round_time = 0.0;  // seconds per attempt, 2 L0 / c
  long long trials = 1;
  std::uint64_t seed = 0;

  void validate() const;
};

struct HeraldingTrial {
  std::vector<std::uint64_t> rounds;  // G_i >= 1, round of first success
  std::vector<double> storage;        // max_j T_j - T_i
  double completion = 0.0;            // max_j T_j
};

// Trial k draws from a std::mt19937_64 seeded with (seed, k) through
// std::seed_seq, so results do not depend on `threads`.
std::vector<HeraldingTrial> simulate_heralding(const McConfig& cfg, int threads = 1);

struct SummaryStats {
  double mean = 0.0;
  double std_error = 0.0;
  double median = 0.0;
  double p05 = 0.0;
  double p95 = 0.0;
  double min = 0.0;
  double max = 0.0;
  std::size_t count = 0;
};

// Percentiles interpolate linearly between order statistics.
SummaryStats summarize(std::vector<double> samples);

struct McRateReport {
  std::uint64_t seed = 0;
  long long trials = 0;
  long long links = 1;
  double expected_link_completion = 0.0;  // round_time / p_succ
  SummaryStats link_completion;           // pooled T_i over links and trials
  SummaryStats chain_completion;          // max_i T_i per trial
  SummaryStats storage;                   // pooled storage durations
  SummaryStats lower_bound;               // max(CI, RCI) per trial
  SummaryStats rate_weighted;             // lower_bound / g^2 per trial
  // Deterministic comparison: every link stored for round_time / p_succ.
  double uniform_t_store = 0.0;
  double uniform_rate_weighted = 0.0;
  bool mean_at_least_uniform = false;
};

// Per trial: each link decoheres for its own storage time, neighbouring links
// are relayed pairwise for `depth` rounds, and the end-to-end CM is rated with
// success probability 1 / g^2. Requires cfg.links == 2^depth.
McRateReport mc_rate(const McConfig& cfg, const TwoModeCM& link_cm, const MemoryParams& mem,
                     int depth, double g, int threads = 1);

}  // namespace cvrep
