// Copyright 2026 The qnb authors
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

#include "qnb/bounds.hpp"
#include "qnb/indexing.hpp"
#include "qnb/measures.hpp"
#include "qnb/states.hpp"

using namespace qnb;

namespace {

void BM_overlap_objective(benchmark::State& state) {
  const DensityMatrix w = werner(2, 0.2);
  const DensityMatrix joint = kron(w, w);
  const int targets[] = {1, 2};
  const OverlapObjective obj(joint, targets);
  auto [base, st] = eigenmeasurement(kron(partial_trace(w, std::vector<int>{1}),
                                          partial_trace(w, std::vector<int>{0})));
  const MeasurementFamily fam = MeasurementFamily::general(std::move(base), std::move(st));
  const BlockUnitaryParams params(fam.param_count(), 0.3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(obj.normalized(fam.build(params)));
  }
}
BENCHMARK(BM_overlap_objective);

void BM_haar_unitary_4(benchmark::State& state) {
  auto rng = seeded_rng(7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(haar_unitary(4, rng));
  }
}
BENCHMARK(BM_haar_unitary_4);

void BM_eigenmeasurement_4(benchmark::State& state) {
  const DensityMatrix rho = random_density(4, 4, 11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(eigenmeasurement(rho));
  }
}
BENCHMARK(BM_eigenmeasurement_4);

void BM_partial_trace_16_to_4(benchmark::State& state) {
  const DensityMatrix joint = kron(werner(2, 0.4), isotropic(2, 0.7));
  const int keep[] = {1, 2};
  for (auto _ : state) {
    benchmark::DoNotOptimize(partial_trace(joint, keep));
  }
}
BENCHMARK(BM_partial_trace_16_to_4);

void BM_bound_thm1(benchmark::State& state) {
  const DensityMatrix x = random_density(4, 3, 21).regrouped({2, 2});
  const DensityMatrix y = random_density(4, 2, 22).regrouped({2, 2});
  for (auto _ : state) {
    benchmark::DoNotOptimize(bound_thm1(x, y));
  }
}
BENCHMARK(BM_bound_thm1);

void BM_nonbilocal_bell_pair(benchmark::State& state) {
  const DensityMatrix bell = bell_state(2).to_density();
  OptimizerConfig cfg;
  cfg.seed = 5;
  cfg.starts = 8;
  cfg.certify_samples = 0;  // optimizer cost only
  for (auto _ : state) {
    benchmark::DoNotOptimize(nonbilocal(bell, bell, cfg));
  }
}
BENCHMARK(BM_nonbilocal_bell_pair);

void BM_nonbilocal_werner_certified(benchmark::State& state) {
  const DensityMatrix w = werner(2, 0.2);
  OptimizerConfig cfg;
  cfg.seed = 5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(nonbilocal(w, w, cfg));
  }
}
BENCHMARK(BM_nonbilocal_werner_certified);

}  // namespace

BENCHMARK_MAIN();
