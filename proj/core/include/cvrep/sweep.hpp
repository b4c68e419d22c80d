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

// Parameter sweeps over (L, n, mu, g) and the per-distance (g, mu) optimizer.
#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "cvrep/memory.hpp"
#include "cvrep/rates.hpp"

namespace cvrep {

// One fully specified configuration: total distance L split into N = 2^depth
// identical links of length L / N.
struct ScenarioPoint {
  double length_km = 0.0;
  int depth = 0;
  double mu = 1.0;
  double g = 1.0;
  double xi = 0.0;
  double alpha_db_per_km = 0.2;
  MemoryParams mem;
  double c_speed_km_s = kFiberLightSpeedKmPerS;
};

// Composes link-builder, memory-model, repeater-chain and rate-bounds for one
// point. Library errors are captured into the record (status kError) rather
// than thrown; lambda_g >= 1 yields status kInvalid with no rate fields.
RateRecord evaluate_point(const ScenarioPoint& p);

struct SweepGrid {
  std::vector<double> distances_km;
  std::vector<int> depths;
  std::vector<double> gains;
  std::vector<double> mus;
  double xi = 0.0;
  double alpha_db_per_km = 0.2;
  MemoryParams mem;
  double c_speed_km_s = kFiberLightSpeedKmPerS;

  // Throws DomainError naming the offending field.
  void validate() const;
  std::size_t size() const {
    return distances_km.size() * depths.size() * mus.size() * gains.size();
  }
};

// One record per grid point in lexicographic (distance, depth, mu, g) order,
// independent of `threads`.
std::vector<RateRecord> run_sweep(const SweepGrid& grid, int threads = 1);

// As run_sweep with the memory coherence time as innermost axis: order is
// (distance, depth, mu, g, tau_c), so each (n, g, mu) series is contiguous.
std::vector<RateRecord> run_memory_sweep(const SweepGrid& grid, std::span<const double> taus_s,
                                         int threads = 1);

// For each (distance, depth, tau_c) the record with the highest rate_weighted
// among valid points (ties: smaller g, then smaller mu). Input order preserved
// by first appearance of each key.
std::vector<RateRecord> best_per_coherence_time(std::span<const RateRecord> records);

// `count` points from `lo` to `hi` inclusive, evenly spaced (log spacing
// requires lo > 0). count == 1 yields {lo}.
std::vector<double> linear_space(double lo, double hi, std::size_t count);
std::vector<double> log_space(double lo, double hi, std::size_t count);

struct OptimizerBounds {
  double mu_min = 1.5;
  double mu_max = 6.0;
  double mu_step = 0.5;
  double g_min = 1.0;
  double g_max = 50.0;
  int g_points = 60;  // log-spaced on [g_min, g_max]
  int refine_rounds = 3;
  double shrink = 4.0;

  void validate() const;
  std::vector<double> coarse_mus() const;
  std::vector<double> coarse_gains() const;
};

struct OptimizeRequest {
  double length_km = 0.0;
  int depth = 0;
  double xi = 0.0;
  MemoryParams mem;
  double alpha_db_per_km = 0.2;
  double c_speed_km_s = kFiberLightSpeedKmPerS;
  OptimizerBounds bounds;
};

struct GainBoundary {
  double mu = 0.0;
  std::optional<double> g_max;  // largest valid gain, nullopt if none in bounds
};

struct OptimumPoint {
  bool found = false;
  double g_opt = RateRecord::kNaN;
  double mu_opt = RateRecord::kNaN;
  double rate_opt = RateRecord::kNaN;  // rate_weighted at the optimum
  double coarse_rate = RateRecord::kNaN;
  RateRecord best;
  std::vector<GainBoundary> boundary;  // per coarse mu
  std::vector<RateRecord> evaluated;   // every point visited, in visit order
};

// Coarse (mu, log g) grid, then `refine_rounds` rounds that shrink both
// spacings by `shrink` and scan a local grid spanning one previous spacing on
// each side of the incumbent. Every visited mu also contributes its largest
// valid gain. Only valid points (lambda_g < 1) compete; ties
// go to the smaller g, then the smaller mu. No valid point gives found=false.
OptimumPoint optimize_point(const OptimizeRequest& req, int threads = 1);

}  // namespace cvrep
