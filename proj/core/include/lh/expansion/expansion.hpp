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

#ifndef LH_EXPANSION_EXPANSION_HPP_
#define LH_EXPANSION_EXPANSION_HPP_

#include <complex>
#include <map>
#include <vector>

#include "lh/principal/principal_series.hpp"
#include "lh/series_report.hpp"

namespace lh {

struct ExpansionConfig {
  std::complex<double> tau;
  int m = 0;
  double epsilon = 2.0;
  int j_max = 300;
  double cauchy_tolerance = 1e-6;
  int cauchy_window = 10;
  EvaluationPolicy policy;

  CauchySettings cauchy() const { return {cauchy_tolerance, cauchy_window}; }
};

// Partial sums of sum_j D^{(j, tau j)}_{jm, jm}(eps) from j = max(|m|, 1).
SeriesReport partial_sum_diagonal(const ExpansionConfig& cfg);

// Partial sums over j >= 1 of the blocks sum_{|m| <= j} D^{(j, tau j)}_{jm, jm}(eps).
// cfg.m is ignored.
SeriesReport partial_sum_triple(const ExpansionConfig& cfg);

struct NormIdentityResult {
  std::complex<double> tau;
  int j_max = 0;
  std::complex<double> computed;
  std::complex<double> target;
  double deviation = 0.0;
  double tail_bound = 0.0;  // |sum_{j > j_max}| <= 1 / (j_max |1 + tau^2|)
  bool within_budget = false;
};

// sum_{j=1}^{j_max} 1/(j^2 (1 + tau^2)) against pi^2 / (6 (1 + tau^2)).
// Throws DomainError for tau = +-i.
NormIdentityResult norm_identity(std::complex<double> tau, int j_max);

struct DivergenceIncrement {
  long long from = 0;
  long long to = 0;
  std::complex<double> increment;
  std::complex<double> model;  // 2 ln(to/from) / (1 + tau^2)
  double relative_deviation = 0.0;
};

struct DivergenceReport {
  std::complex<double> tau;
  std::vector<long long> checkpoints;
  std::vector<std::complex<double>> partial_sums;
  std::vector<DivergenceIncrement> increments;
  double model_tolerance = 0.05;
  Verdict verdict = Verdict::kInconclusive;
};

// Partial sums of sum_j (2j+1)/(j^2 (1 + tau^2)) at increasing checkpoints.
// Diverged when the last increment exceeds 10x the Cauchy tolerance and
// matches the logarithmic model within model_tolerance.
DivergenceReport divergence_probe(std::complex<double> tau, std::vector<long long> checkpoints,
                                  double cauchy_tolerance = 1e-6, double model_tolerance = 0.05);

// Synthetic expansion coefficients c_{jmm} for one m.
struct CoefficientTable {
  int m = 0;
  std::map<int, std::complex<double>> entries;

  std::complex<double> at(int j) const;
  // c_j = r^j for max(|m|, 1) <= j <= j_max.
  static CoefficientTable geometric(int m, std::complex<double> r, int j_max);
};

// Partial sums of sum_j j^2 (1 + tau^2) c_{jmm} D^{(j, tau j)}_{jm, jm}(eps).
// Throws DomainError when the table fails the decay check (median tail
// ratio |c_{j+1}/c_j| above 1) or tau = +-i.
SeriesReport synthesize(const CoefficientTable& table, std::complex<double> tau, double epsilon,
                        int j_max, const ExpansionConfig& settings = {});

}  // namespace lh

#endif  // LH_EXPANSION_EXPANSION_HPP_
