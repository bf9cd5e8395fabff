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

#ifndef LH_PRINCIPAL_PRINCIPAL_SERIES_HPP_
#define LH_PRINCIPAL_PRINCIPAL_SERIES_HPP_

#include <complex>
#include <string_view>
#include <utility>
#include <vector>

#include "lh/series_report.hpp"
#include "lh/special/hypergeometric.hpp"
#include "lh/special/log_complex.hpp"
#include "lh/special/watson.hpp"

namespace lh {

// Principal-series labels (k, rho).
struct PrincipalSeriesLabel {
  int k = 0;
  std::complex<double> rho;

  // k = j, rho = tau j.
  static PrincipalSeriesLabel simple(int j, std::complex<double> tau) {
    return {j, tau * static_cast<double>(j)};
  }
};

struct CoefficientIndex {
  int j = 0;
  int j_prime = 0;
  int m = 0;
  int n = 0;
};

// (d, d') pairs for which every factorial argument of the general
// coefficient formula is non-negative.
std::vector<std::pair<int, int>> admissible_pairs(const PrincipalSeriesLabel& label,
                                                  const CoefficientIndex& idx);

// General matrix coefficient D^{(k, rho)}_{jm, j'n} of the boost
// diag(1/eps, eps) as a double sum of 2F1 values. Exact zero for m != n.
// Intended for small j, j'. Throws IndexError unless |k| <= min(j, j') and
// |m|, |n| <= min(j, j').
LogComplexValue duc_hieu_general(const PrincipalSeriesLabel& label, const CoefficientIndex& idx,
                                 double epsilon);

enum class EvaluationPath { kExact, kAsymptotic };
std::string_view to_string(EvaluationPath path);

enum class PathSelection { kAuto, kExact, kAsymptotic };

struct EvaluationPolicy {
  PathSelection selection = PathSelection::kAuto;
  // Auto: exact evaluation up to this j.
  int exact_max_j = 64;
  // Auto beyond exact_max_j: the asymptotic term is used only for real
  // tau = 0 and when its leading error (1 + m^2)/(2j) is below this bound.
  double asymptotic_max_error = 0.025;
  AsymptoticBranch branch = AsymptoticBranch::kMinus;
  Hyp2F1Options hyp2f1;
  int threads = 1;
};

struct CoefficientValue {
  LogComplexValue value;
  EvaluationPath path = EvaluationPath::kExact;
  double error_estimate = 0.0;  // relative
  Hyp2F1Method method = Hyp2F1Method::kTrivial;
};

// D^{(j, tau j)}_{jm, jm} = eps^{2(m+j+1+i tau j/2)} 2F1(j+1+i tau j/2, m+j+1; 2j+2; 1-eps^4).
// Throws IndexError for |m| > j or j < 0, DomainError for eps <= 0.
CoefficientValue diagonal_coefficient(int j, int m, std::complex<double> tau, double epsilon,
                                      const EvaluationPolicy& policy = {});

// 4 eps^2 / (eps^2 + 1)^2
double diagonal_ratio_limit(double epsilon);
// eps^2 / (eps^2 + 1)^2
double top_track_ratio_limit(double epsilon);

// |D_{j+1}/D_j| for j from max(|m|, 1) to j_max against 4 eps^2/(eps^2+1)^2.
// The empirical limit is the median of the last ten ratios.
SeriesReport ratio_test(int m, std::complex<double> tau, double epsilon, int j_max,
                        const EvaluationPolicy& policy = {});

enum class BoundaryTrack { kMEqualsJ, kMEqualsZero };
std::string_view to_string(BoundaryTrack track);

// Term ratios of the bounding sums: (j+1)|D_{j,j}| for the m = j track and
// j|D_{j,0}| for the m = 0 track.
SeriesReport boundary_ratio_test(BoundaryTrack track, std::complex<double> tau, double epsilon,
                                 int j_max, const EvaluationPolicy& policy = {});

}  // namespace lh

#endif  // LH_PRINCIPAL_PRINCIPAL_SERIES_HPP_
