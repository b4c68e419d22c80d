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

#include <cmath>

#include <gtest/gtest.h>

#include "cvrep/chain.hpp"
#include "cvrep/error.hpp"
#include "cvrep/rates.hpp"

namespace cvrep {
namespace {

TEST(Summarize, InterpolatedPercentiles) {
  const SummaryStats s = summarize({4.0, 1.0, 3.0, 2.0, 5.0});
  EXPECT_EQ(s.count, 5u);
  EXPECT_DOUBLE_EQ(s.mean, 3.0);
  EXPECT_DOUBLE_EQ(s.median, 3.0);
  EXPECT_DOUBLE_EQ(s.p05, 1.2);
  EXPECT_DOUBLE_EQ(s.p95, 4.8);
  EXPECT_DOUBLE_EQ(s.min, 1.0);
  EXPECT_DOUBLE_EQ(s.max, 5.0);
  EXPECT_NEAR(s.std_error, std::sqrt(2.5 / 5.0), 1e-15);
}

TEST(Heralding, CertainSuccessStoresNothing) {
  const auto trials = simulate_heralding({8, 1.0, 1e-3, 200, 1});
  for (const auto& t : trials) {
    for (auto g : t.rounds) ASSERT_EQ(g, 1u);
    for (double s : t.storage) ASSERT_EQ(s, 0.0);
    ASSERT_DOUBLE_EQ(t.completion, 1e-3);
  }
}

TEST(Heralding, SingleLinkNeverWaits) {
  for (const auto& t : simulate_heralding({1, 0.1, 1.0, 500, 7})) {
    ASSERT_EQ(t.storage.size(), 1u);
    ASSERT_EQ(t.storage[0], 0.0);
    ASSERT_EQ(t.completion, static_cast<double>(t.rounds[0]));
  }
}

TEST(Heralding, ReproducibleAcrossThreadCounts) {
  const McConfig cfg{4, 0.3, 1.0, 1000, 42};
  const auto a = simulate_heralding(cfg, 1);
  const auto b = simulate_heralding(cfg, 4);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) ASSERT_EQ(a[i].rounds, b[i].rounds);
  const auto c = simulate_heralding({4, 0.3, 1.0, 1000, 43}, 1);
  bool differs = false;
  for (std::size_t i = 0; i < a.size(); ++i) differs |= a[i].rounds != c[i].rounds;
  EXPECT_TRUE(differs);
}

// E[max of N iid Geometric(p)] = sum_k (1 - (1 - (1-p)^k)^N); 8/3 for p=1/2,
// N=2 and 9.836287707029626 for p=0.2, N=4.
TEST(Heralding, MaxRoundMeanMatchesExactExpectation) {
  const struct {
    long long n;
    double p;
    double expect;
  } cases[] = {{2, 0.5, 8.0 / 3.0}, {4, 0.2, 9.836287707029626}};
  for (const auto& tc : cases) {
    std::vector<double> maxima;
    for (const auto& t : simulate_heralding({tc.n, tc.p, 1.0, 200000, 11})) maxima.push_back(t.completion);
    const SummaryStats s = summarize(maxima);
    EXPECT_NEAR(s.mean, tc.expect, 3.0 * s.std_error);
  }
}

TEST(Heralding, LinkMeanMatchesGeometricMean) {
  std::vector<double> all;
  for (const auto& t : simulate_heralding({4, 0.25, 2.0, 50000, 5}))
    for (auto g : t.rounds) all.push_back(2.0 * static_cast<double>(g));
  const SummaryStats s = summarize(all);
  EXPECT_NEAR(s.mean, 8.0, 3.0 * s.std_error);
}

TEST(McRate, IdealMemoryReproducesDeterministicChain) {
  const TwoModeCM link(3.0, 2.0, 2.0);
  const McRateReport rep = mc_rate({4, 0.2, 1e-3, 300, 9}, link, MemoryParams::ideal(), 2, 3.0);
  const RateFragment det = achievable_rate(chain_cm({2, link, MemoryParams::ideal(), 0.0}), 3.0);
  EXPECT_EQ(rep.rate_weighted.min, det.rate_weighted);
  EXPECT_EQ(rep.rate_weighted.max, det.rate_weighted);
  EXPECT_EQ(rep.uniform_rate_weighted, det.rate_weighted);
}

TEST(McRate, ReportsUniformComparison) {
  const TwoModeCM link(3.0, 2.0, 2.0);
  const McRateReport rep = mc_rate({2, 0.25, 1e-3, 2000, 3}, link, {0.01, 0.001}, 1, 2.0);
  EXPECT_DOUBLE_EQ(rep.uniform_t_store, 4e-3);
  EXPECT_DOUBLE_EQ(rep.expected_link_completion, 4e-3);
  EXPECT_EQ(rep.mean_at_least_uniform, rep.rate_weighted.mean >= rep.uniform_rate_weighted);
  EXPECT_EQ(rep.trials, 2000);
  EXPECT_EQ(rep.chain_completion.count, 2000u);
}

TEST(McRate, RejectsBadConfig) {
  EXPECT_THROW(simulate_heralding({3, 0.5, 1.0, 10, 0}), DomainError);
  EXPECT_THROW(simulate_heralding({2, 0.0, 1.0, 10, 0}), DomainError);
  EXPECT_THROW(simulate_heralding({2, 0.5, 1.0, 0, 0}), DomainError);
  EXPECT_THROW(mc_rate({4, 0.5, 1.0, 10, 0}, tmsv(2.0), MemoryParams::ideal(), 1, 2.0), DomainError);
}

}  // namespace
}  // namespace cvrep
