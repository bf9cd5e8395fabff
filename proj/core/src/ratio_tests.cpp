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

#include <cmath>
#include <string>

#include "lh/errors.hpp"
#include "lh/parallel.hpp"
#include "lh/principal/principal_series.hpp"

namespace lh {

namespace {

using cplx = std::complex<double>;

nlohmann::json complex_json(cplx z) { return {{"re", z.real()}, {"im", z.imag()}}; }

void check_ratio_inputs(double epsilon, int j_max) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) throw DomainError("epsilon must be positive");
  if (epsilon == 1.0) throw DomainError("ratio diagnostics need epsilon != 1");
  if (j_max < 1) throw DomainError("j_max must be positive");
}

// Fills ratios from consecutive log magnitudes and derives the summary fields.
void summarize_ratios(SeriesReport& report, double predicted, cplx tau) {
  std::vector<double> ratios;
  for (std::size_t i = 0; i + 1 < report.terms.size(); ++i) {
    const double r = std::exp(report.terms[i + 1].value.log_mag() - report.terms[i].value.log_mag());
    report.terms[i].ratio = r;
    ratios.push_back(r);
  }
  report.predicted_limit = predicted;
  report.empirical_limit = tail_ratio(ratios);
  if (report.empirical_limit) {
    report.relative_deviation = std::abs(*report.empirical_limit - predicted) / predicted;
    const double e = *report.empirical_limit;
    report.verdict = e < 1.0 ? Verdict::kConverged : (e > 1.0 ? Verdict::kDiverged : Verdict::kInconclusive);
  }
  report.comparison_informational = tau.imag() != 0.0;
  if (report.comparison_informational) {
    report.notes.push_back("tau has a nonzero imaginary part; the closed-form comparison is informational");
  }
}

}  // namespace

std::string_view to_string(BoundaryTrack track) {
  return track == BoundaryTrack::kMEqualsJ ? "m_equals_j" : "m_equals_0";
}

SeriesReport ratio_test(int m, cplx tau, double epsilon, int j_max, const EvaluationPolicy& policy) {
  check_ratio_inputs(epsilon, j_max);
  if (j_max < std::abs(m) + 8) throw DomainError("ratio_test: j_max must be at least |m| + 8");
  const int j0 = std::max(std::abs(m), 1);
  const std::size_t count = static_cast<std::size_t>(j_max - j0 + 1);

  SeriesReport report;
  report.kind = "ratio";
  report.params = {{"m", m}, {"tau", complex_json(tau)}, {"epsilon", epsilon}, {"j_max", j_max}};
  report.terms.resize(count);
  parallel_for(count, policy.threads, [&](std::size_t i) {
    const int j = j0 + static_cast<int>(i);
    const CoefficientValue c = diagonal_coefficient(j, m, tau, epsilon, policy);
    report.terms[i] = SeriesTerm{j, c.value, std::nullopt, std::nullopt, std::string(to_string(c.path))};
  });
  if (m == 0) report.j0_term = diagonal_coefficient(0, 0, tau, epsilon, policy).value;
  summarize_ratios(report, diagonal_ratio_limit(epsilon), tau);
  return report;
}

SeriesReport boundary_ratio_test(BoundaryTrack track, cplx tau, double epsilon, int j_max,
                                 const EvaluationPolicy& policy) {
  check_ratio_inputs(epsilon, j_max);
  if (j_max < 9) throw DomainError("boundary_ratio_test: j_max must be at least 9");
  const std::size_t count = static_cast<std::size_t>(j_max);
  SeriesReport report;
  report.kind = "boundary_ratio";
  report.params = {{"track", std::string(to_string(track))},
                   {"tau", complex_json(tau)},
                   {"epsilon", epsilon},
                   {"j_max", j_max}};
  report.terms.resize(count);
  parallel_for(count, policy.threads, [&](std::size_t i) {
    const int j = 1 + static_cast<int>(i);
    const bool top = track == BoundaryTrack::kMEqualsJ;
    const CoefficientValue c = diagonal_coefficient(j, top ? j : 0, tau, epsilon, policy);
    const double weight = top ? j + 1.0 : static_cast<double>(j);
    const LogComplexValue magnitude(c.value.log_mag() + std::log(weight), 0.0);
    report.terms[i] = SeriesTerm{j, magnitude, std::nullopt, std::nullopt, std::string(to_string(c.path))};
  });
  const double predicted = track == BoundaryTrack::kMEqualsJ ? top_track_ratio_limit(epsilon)
                                                             : diagonal_ratio_limit(epsilon);
  summarize_ratios(report, predicted, tau);
  return report;
}

}  // namespace lh
