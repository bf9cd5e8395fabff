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

#include "lh/series_report.hpp"

#include <algorithm>
#include <cmath>

#include "lh/errors.hpp"

namespace lh {

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::kConverged: return "converged";
    case Verdict::kDiverged: return "diverged";
    case Verdict::kInconclusive: return "inconclusive";
  }
  return "inconclusive";
}

Verdict verdict_from_string(std::string_view text) {
  if (text == "converged") return Verdict::kConverged;
  if (text == "diverged") return Verdict::kDiverged;
  if (text == "inconclusive") return Verdict::kInconclusive;
  throw DomainError("unknown verdict: " + std::string(text));
}

std::vector<std::complex<double>> SeriesReport::partial_sums() const {
  std::vector<std::complex<double>> out;
  for (const auto& t : terms) {
    if (t.partial_sum) out.push_back(*t.partial_sum);
  }
  return out;
}

std::vector<double> SeriesReport::term_ratios() const {
  std::vector<double> out;
  for (const auto& t : terms) {
    if (t.ratio) out.push_back(*t.ratio);
  }
  return out;
}

std::optional<double> tail_ratio(const std::vector<double>& ratios, std::size_t count) {
  std::vector<double> tail;
  for (auto it = ratios.rbegin(); it != ratios.rend() && tail.size() < count; ++it) {
    if (std::isfinite(*it)) tail.push_back(*it);
  }
  if (tail.empty()) return std::nullopt;
  std::sort(tail.begin(), tail.end());
  const std::size_t n = tail.size();
  return n % 2 == 1 ? tail[n / 2] : 0.5 * (tail[n / 2 - 1] + tail[n / 2]);
}

Verdict cauchy_verdict(const std::vector<std::complex<double>>& s, const std::vector<double>& ratios,
                       const CauchySettings& settings, double* delta_out) {
  if (!(settings.tolerance > 0.0) || settings.window < 1) {
    throw DomainError("cauchy settings need tolerance > 0 and window >= 1");
  }
  const std::size_t w = static_cast<std::size_t>(settings.window);
  const std::size_t n = s.size();
  if (n <= w) {
    if (delta_out != nullptr) *delta_out = std::nan("");
    return Verdict::kInconclusive;
  }
  auto delta_at = [&](std::size_t end) { return std::abs(s[end] - s[end - w]); };
  const double delta = delta_at(n - 1);
  if (delta_out != nullptr) *delta_out = delta;
  if (delta < settings.tolerance) return Verdict::kConverged;

  if (auto r = tail_ratio(ratios); r && *r >= 1.0) return Verdict::kDiverged;
  if (n > 3 * w) {
    const double d2 = delta_at(n - 1 - w);
    const double d3 = delta_at(n - 1 - 2 * w);
    if (delta >= d2 && d2 >= d3) return Verdict::kDiverged;
  }
  // Terms that stop shrinking: the last term is at least half the largest
  // term over the second half of the range.
  auto term = [&](std::size_t i) { return i == 0 ? std::abs(s[0]) : std::abs(s[i] - s[i - 1]); };
  double largest = 0.0;
  for (std::size_t i = n / 2; i < n; ++i) largest = std::max(largest, term(i));
  if (largest > 0.0 && term(n - 1) >= 0.5 * largest) return Verdict::kDiverged;
  return Verdict::kInconclusive;
}

}  // namespace lh
