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

#include "cvrep/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "cvrep/chain.hpp"
#include "cvrep/error.hpp"
#include "cvrep/rates.hpp"
#include "parallel.hpp"

namespace cvrep {
namespace {

std::mt19937_64 trial_engine(std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  return std::mt19937_64(seq);
}

// Inversion sampling on a 53-bit uniform in (0, 1]; avoids the unspecified
// algorithms of std::geometric_distribution so streams are portable.
std::uint64_t geometric_rounds(std::mt19937_64& rng, double p) {
  if (p >= 1.0) return 1;
  const double u = static_cast<double>((rng() >> 11) + 1) * 0x1.0p-53;
  return 1 + static_cast<std::uint64_t>(std::floor(std::log(u) / std::log1p(-p)));
}

double percentile(const std::vector<double>& sorted, double q) {
  const double pos = q * static_cast<double>(sorted.size() - 1);
  const std::size_t lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (pos - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

}  // namespace

void McConfig::validate() const {
  if (links < 1 || (links & (links - 1)) != 0) throw DomainError("montecarlo: links must be a power of two");
  if (!(p_succ > 0.0 && p_succ <= 1.0)) throw DomainError("montecarlo: p_succ must lie in (0, 1]");
  if (!(round_time >= 0.0) || std::isinf(round_time)) throw DomainError("montecarlo: round_time must be >= 0");
  if (trials < 1) throw DomainError("montecarlo: trials must be >= 1");
}

std::vector<HeraldingTrial> simulate_heralding(const McConfig& cfg, int threads) {
  cfg.validate();
  const auto n = static_cast<std::size_t>(cfg.links);
  std::vector<HeraldingTrial> trials(static_cast<std::size_t>(cfg.trials));
  detail::parallel_for(trials.size(), threads, [&](std::size_t k) {
    std::mt19937_64 rng = trial_engine(cfg.seed, k);
    HeraldingTrial& t = trials[k];
    t.rounds.resize(n);
    for (auto& g : t.rounds) g = geometric_rounds(rng, cfg.p_succ);
    const std::uint64_t last = *std::max_element(t.rounds.begin(), t.rounds.end());
    t.completion = static_cast<double>(last) * cfg.round_time;
    t.storage.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      t.storage[i] = static_cast<double>(last - t.rounds[i]) * cfg.round_time;
    }
  });
  return trials;
}

SummaryStats summarize(std::vector<double> samples) {
  if (samples.empty()) throw DomainError("summarize: no samples");
  SummaryStats s;
  s.count = samples.size();
  const double n = static_cast<double>(samples.size());
  s.mean = std::accumulate(samples.begin(), samples.end(), 0.0) / n;
  if (samples.size() > 1) {
    double ss = 0.0;
    for (double x : samples) ss += (x - s.mean) * (x - s.mean);
    s.std_error = std::sqrt(ss / (n - 1.0)) / std::sqrt(n);
  }
  std::sort(samples.begin(), samples.end());
  s.min = samples.front();
  s.max = samples.back();
  s.median = percentile(samples, 0.5);
  s.p05 = percentile(samples, 0.05);
  s.p95 = percentile(samples, 0.95);
  return s;
}

McRateReport mc_rate(const McConfig& cfg, const TwoModeCM& link_cm, const MemoryParams& mem,
                     int depth, double g, int threads) {
  cfg.validate();
  mem.validate();
  if (depth < 0 || depth > 62 || cfg.links != (1LL << depth)) {
    throw DomainError("montecarlo: links must equal 2^depth");
  }
  const std::vector<HeraldingTrial> trials = simulate_heralding(cfg, threads);

  std::vector<double> lower(trials.size());
  std::vector<double> weighted(trials.size());
  detail::parallel_for(trials.size(), threads, [&](std::size_t k) {
    std::vector<TwoModeCM> level;
    level.reserve(trials[k].storage.size());
    for (double s : trials[k].storage) level.push_back(decohere(link_cm, s, mem));
    while (level.size() > 1) {
      std::vector<TwoModeCM> next;
      next.reserve(level.size() / 2);
      for (std::size_t i = 0; i + 1 < level.size(); i += 2) {
        next.push_back(bell_relay(level[i], level[i + 1]));
      }
      level = std::move(next);
    }
    const RateFragment r = achievable_rate(level.front(), g);
    lower[k] = r.lower_bound;
    weighted[k] = r.rate_weighted;
  });

  McRateReport rep;
  rep.seed = cfg.seed;
  rep.trials = cfg.trials;
  rep.links = cfg.links;
  rep.expected_link_completion = cfg.round_time / cfg.p_succ;

  std::vector<double> link_times, chain_times, storage;
  link_times.reserve(trials.size() * static_cast<std::size_t>(cfg.links));
  storage.reserve(link_times.capacity());
  chain_times.reserve(trials.size());
  for (const HeraldingTrial& t : trials) {
    for (std::uint64_t r : t.rounds) link_times.push_back(static_cast<double>(r) * cfg.round_time);
    storage.insert(storage.end(), t.storage.begin(), t.storage.end());
    chain_times.push_back(t.completion);
  }
  rep.link_completion = summarize(std::move(link_times));
  rep.chain_completion = summarize(std::move(chain_times));
  rep.storage = summarize(std::move(storage));
  rep.lower_bound = summarize(std::move(lower));
  rep.rate_weighted = summarize(std::move(weighted));

  rep.uniform_t_store = rep.expected_link_completion;
  const TwoModeCM uniform = chain_cm(ChainSpec{depth, link_cm, mem, rep.uniform_t_store});
  rep.uniform_rate_weighted = achievable_rate(uniform, g).rate_weighted;
  rep.mean_at_least_uniform = rep.rate_weighted.mean >= rep.uniform_rate_weighted;
  return rep;
}

}  // namespace cvrep
