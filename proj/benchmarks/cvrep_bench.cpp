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

#include <benchmark/benchmark.h>

#include "cvrep/chain.hpp"
#include "cvrep/link.hpp"
#include "cvrep/montecarlo.hpp"
#include "cvrep/sweep.hpp"

namespace {

using namespace cvrep;

void BM_SymplecticEigenvalues(benchmark::State& state) {
  const TwoModeCM v(7.3, 2.1, 1.9);
  for (auto _ : state) benchmark::DoNotOptimize(symplectic_eigenvalues(v));
}
BENCHMARK(BM_SymplecticEigenvalues);

void BM_GeneralSpectrum(benchmark::State& state) {
  const Eigen::MatrixXd m = TwoModeCM(7.3, 2.1, 1.9).matrix();
  for (auto _ : state) benchmark::DoNotOptimize(symplectic_spectrum(m));
}
BENCHMARK(BM_GeneralSpectrum);

void BM_BellRelayGeneral(benchmark::State& state) {
  const FourModeCM in = assemble_relay_input(TwoModeCM(3.0, 2.0, 2.0), TwoModeCM(5.0, 4.0, 3.0));
  for (auto _ : state) benchmark::DoNotOptimize(bell_relay_general(in));
}
BENCHMARK(BM_BellRelayGeneral);

void BM_ChainCm(benchmark::State& state) {
  const ChainSpec spec{static_cast<int>(state.range(0)), TwoModeCM(3.0, 2.0, 2.0), {1.0, 0.005}, 0.1};
  for (auto _ : state) benchmark::DoNotOptimize(chain_cm(spec));
}
BENCHMARK(BM_ChainCm)->Arg(1)->Arg(4)->Arg(16);

void BM_EvaluatePoint(benchmark::State& state) {
  const ScenarioPoint p{200.0, 1, 2.0, 10.0, 0.005, 0.2, {1.0, 0.005}};
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_point(p));
}
BENCHMARK(BM_EvaluatePoint);

void BM_OptimizePoint(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(optimize_point({200.0, 1}));
}
BENCHMARK(BM_OptimizePoint)->Unit(benchmark::kMillisecond);

void BM_McRate(benchmark::State& state) {
  const McConfig cfg{4, 1.0 / 16.0, 1e-3, 1000, 1};
  const TwoModeCM link = basic_link_cm(nla_equivalent({2.0, 0.1, 0.0, 4.0}));
  for (auto _ : state) benchmark::DoNotOptimize(mc_rate(cfg, link, {1.0, 0.005}, 2, 4.0));
}
BENCHMARK(BM_McRate)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
