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

#ifndef LH_SERIES_REPORT_HPP_
#define LH_SERIES_REPORT_HPP_

#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "lh/special/log_complex.hpp"

namespace lh {

enum class Verdict { kConverged, kDiverged, kInconclusive };

std::string_view to_string(Verdict verdict);
Verdict verdict_from_string(std::string_view text);

struct SeriesTerm {
  int j = 0;
  LogComplexValue value;
  // |term_{j+1} / term_j|; absent for the last term.
  std::optional<double> ratio;
  // Partial sum through this j, when the report sums its terms.
  std::optional<std::complex<double>> partial_sum;
  // Evaluation path of the coefficient(s) behind the term.
  std::string path;
};

struct SeriesReport {
  std::string kind;
  nlohmann::json params = nlohmann::json::object();
  std::vector<SeriesTerm> terms;
  std::optional<double> predicted_limit;
  std::optional<double> empirical_limit;
  std::optional<double> relative_deviation;
  // The predicted limit is compared only for real tau; otherwise informational.
  bool comparison_informational = false;
  Verdict verdict = Verdict::kInconclusive;
  std::optional<double> cauchy_delta;
  // Term at j = 0, kept out of sums that start at j = 1.
  std::optional<LogComplexValue> j0_term;
  std::vector<std::string> notes;

  std::vector<std::complex<double>> partial_sums() const;
  std::vector<double> term_ratios() const;
};

// Median of the last `count` ratios (fewer when not available).
std::optional<double> tail_ratio(const std::vector<double>& ratios, std::size_t count = 10);

struct CauchySettings {
  double tolerance = 1e-6;
  int window = 10;
};

// Converged iff |S_J - S_{J-window}| < tolerance. Otherwise diverged when the
// tail ratio is at least 1, the last three windowed deltas do not shrink, or
// the last term is at least half the largest term of the second half of the
// range; inconclusive in between.
Verdict cauchy_verdict(const std::vector<std::complex<double>>& partial_sums,
                       const std::vector<double>& ratios, const CauchySettings& settings,
                       double* delta_out = nullptr);

}  // namespace lh

#endif  // LH_SERIES_REPORT_HPP_
