// Copyright 2026 The lorentz-harmonics Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <cmath>
#include <complex>

#include "lh/expansion/expansion.hpp"
#include "lh/principal/principal_series.hpp"
#include "lh/wigner/su2_fourier.hpp"

namespace {

void BM_DiagonalExact(benchmark::State& state) {
  lh::EvaluationPolicy policy;
  policy.selection = lh::PathSelection::kExact;
  const int j = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lh::diagonal_coefficient(j, 1, 0.3, 2.0, policy));
}
BENCHMARK(BM_DiagonalExact)->Arg(8)->Arg(64)->Arg(200);

void BM_DiagonalAsymptotic(benchmark::State& state) {
  lh::EvaluationPolicy policy;
  policy.selection = lh::PathSelection::kAsymptotic;
  const int j = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lh::diagonal_coefficient(j, 1, 0.0, 2.0, policy));
}
BENCHMARK(BM_DiagonalAsymptotic)->Arg(64)->Arg(200);

void BM_GeneralFormula(benchmark::State& state) {
  const int j = static_cast<int>(state.range(0));
  const auto label = lh::PrincipalSeriesLabel::simple(j, 0.3);
  for (auto _ : state) benchmark::DoNotOptimize(lh::duc_hieu_general(label, {j, j, 0, 0}, 2.0));
}
BENCHMARK(BM_GeneralFormula)->Arg(2)->Arg(6);

void BM_RatioTest(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(lh::ratio_test(1, 0.5, 2.0, 200));
}
BENCHMARK(BM_RatioTest)->Unit(benchmark::kMillisecond);

void BM_TripleSum(benchmark::State& state) {
  lh::ExpansionConfig cfg;
  cfg.epsilon = 2.0;
  cfg.j_max = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lh::partial_sum_triple(cfg));
}
BENCHMARK(BM_TripleSum)->Arg(60)->Unit(benchmark::kMillisecond);

void BM_SU2Fourier(benchmark::State& state) {
  lh::SU2Function phi = [](const lh::SU2Element& u) {
    return std::complex<double>(std::exp(u.matrix().trace().real()), 0.0);
  };
  const int band = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lh::su2_fourier(phi, 0, band));
}
BENCHMARK(BM_SU2Fourier)->Arg(8)->Arg(24)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
