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

#ifndef LH_YMAP_YMAP_HPP_
#define LH_YMAP_YMAP_HPP_

#include <complex>
#include <variant>
#include <vector>

#include "lh/lie/group.hpp"
#include "lh/principal/principal_series.hpp"
#include "lh/series_report.hpp"
#include "lh/wigner/su2_fourier.hpp"

namespace lh {

// Sends an SU(2) Fourier row d^{j/2}_{|p|/2, m/2} to the partial sums of
//   psi(g) = sum_{j >= |p|} sum_{|m| <= j} d^{j/2}_{|p|/2, m/2} D^{(j, tau j)}_{jm, jm}(eps(g)).
// Table keys are (twice_j, twice_m) = (j, m); entries outside the table read
// as zero.
struct YMapRequest {
  FourierTableSU2 table;
  std::complex<double> tau;
  std::variant<SL2CElement, double> target = 2.0;
  int j_max = 200;
  double cauchy_tolerance = 1e-6;
  int cauchy_window = 10;
  EvaluationPolicy policy;

  double epsilon() const;
};

SeriesReport ymap_apply(const YMapRequest& req);

struct MajorizationCheck {
  int j = 0;
  double partial_sum_abs = 0.0;
  double bound = 0.0;  // fourier_sum_bound * coefficient bound through j
  bool holds = false;
};

struct YMapConvergenceReport {
  double epsilon = 0.0;
  double fourier_sum_bound = 0.0;  // sum |d| over the table
  Verdict fourier_verdict = Verdict::kInconclusive;
  double coefficient_sum_bound = 0.0;  // sum_j |sum_m D_{jm}| through j_max
  Verdict coefficient_verdict = Verdict::kInconclusive;
  double product_bound = 0.0;
  std::vector<MajorizationCheck> checkpoints;
  bool majorization_holds = true;
  // Cauchy verdict of the Y-map series itself. The bound verdicts above only
  // describe the majorant, which may diverge while the series converges.
  Verdict verdict = Verdict::kInconclusive;
  Verdict bound_verdict = Verdict::kInconclusive;
  SeriesReport coefficient_series;
};

YMapConvergenceReport ymap_convergence_report(const YMapRequest& req);

}  // namespace lh

#endif  // LH_YMAP_YMAP_HPP_
