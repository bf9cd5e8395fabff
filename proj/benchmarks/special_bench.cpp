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

#include <complex>

#include "lh/special/gamma.hpp"
#include "lh/special/hypergeometric.hpp"
#include "lh/wigner/wigner.hpp"

namespace {

void BM_LogGamma(benchmark::State& state) {
  const std::complex<double> z(static_cast<double>(state.range(0)) + 0.5, 3.25);
  for (auto _ : state) benchmark::DoNotOptimize(lh::log_gamma(z));
}
BENCHMARK(BM_LogGamma)->Arg(1)->Arg(19)->Arg(400);

// 2F1 with the diagonal-coefficient parameters at eps = range(1)/10.
void BM_Hyp2F1(benchmark::State& state) {
  const int j = static_cast<int>(state.range(0));
  const double eps = static_cast<double>(state.range(1)) / 10.0;
  const lh::Hyp2F1Params p{{j + 1.0, 0.15 * j}, j + 1.0, 2.0 * j + 2.0, 1.0 - eps * eps * eps * eps};
  for (auto _ : state) benchmark::DoNotOptimize(lh::hyp2f1(p));
}
BENCHMARK(BM_Hyp2F1)->ArgsProduct({{4, 64, 400}, {5, 20}});

void BM_Hyp2F1Contour(benchmark::State& state) {
  const int j = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(lh::detail::euler_contour({j + 1.0, 0.0}, j + 1.0, 2.0 * j + 2.0, -15.0));
  }
}
BENCHMARK(BM_Hyp2F1Contour)->Arg(16)->Arg(128);

void BM_WignerSmallD(benchmark::State& state) {
  const int tj = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lh::wigner_small_d({tj}, tj % 2, -tj, 1.1));
}
BENCHMARK(BM_WignerSmallD)->Arg(8)->Arg(64)->Arg(400);

}  // namespace
