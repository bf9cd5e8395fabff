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

#include "lh/principal/principal_series.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "lh/errors.hpp"
#include "lh/special/gamma.hpp"

namespace lh {

namespace {

using cplx = std::complex<double>;

void check_epsilon(double epsilon) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw DomainError("epsilon must be a positive finite number");
  }
}

}  // namespace

std::string_view to_string(EvaluationPath path) {
  return path == EvaluationPath::kExact ? "exact" : "asymptotic";
}

std::vector<std::pair<int, int>> admissible_pairs(const PrincipalSeriesLabel& label,
                                                  const CoefficientIndex& idx) {
  const int j = idx.j;
  const int jp = idx.j_prime;
  const int m = idx.m;
  const int k = label.k;
  std::vector<std::pair<int, int>> pairs;
  const int d_lo = std::max(0, -k - m);
  const int d_hi = std::min(j - m, j - k);
  const int dp_lo = std::max(0, -k - m);
  const int dp_hi = std::min(jp - m, jp - k);
  for (int d = d_lo; d <= d_hi; ++d) {
    for (int dp = dp_lo; dp <= dp_hi; ++dp) {
      const int top = d + dp + m + k;
      if (top < 0 || j + jp - top < 0) continue;
      pairs.emplace_back(d, dp);
    }
  }
  return pairs;
}

LogComplexValue duc_hieu_general(const PrincipalSeriesLabel& label, const CoefficientIndex& idx,
                                 double epsilon) {
  check_epsilon(epsilon);
  const int j = idx.j;
  const int jp = idx.j_prime;
  const int k = label.k;
  const int m = idx.m;
  const int lo = std::min(j, jp);
  if (j < 0 || jp < 0) throw IndexError("duc_hieu_general: j and j' must be non-negative");
  if (std::abs(k) > lo) throw IndexError("duc_hieu_general: requires |k| <= min(j, j')");
  if (std::abs(m) > lo || std::abs(idx.n) > lo) {
    throw IndexError("duc_hieu_general: requires |m|, |n| <= min(j, j')");
  }
  if (idx.m != idx.n) return LogComplexValue::zero();

  const double log_root =
      0.5 * (std::log(2.0 * j + 1.0) + std::log(2.0 * jp + 1.0) + log_factorial(j + m) +
             log_factorial(jp + m) + log_factorial(j - m) + log_factorial(jp - m) +
             log_factorial(j + k) + log_factorial(jp + k) + log_factorial(j - k) +
             log_factorial(jp - k));
  const double log_prefactor = log_root - log_factorial(j + jp + 1);
  const cplx i_rho_half = cplx(0.0, 0.5) * label.rho;
  const double log_eps = std::log(epsilon);
  const double z = 1.0 - std::pow(epsilon, 4);

  LogComplexValue total;
  for (const auto& [d, dp] : admissible_pairs(label, idx)) {
    const int top = d + dp + m + k;
    const double log_ratio = log_factorial(top) + log_factorial(j + jp - top) -
                             (log_factorial(d) + log_factorial(dp) + log_factorial(j - m - d) +
                              log_factorial(jp - m - dp) + log_factorial(k + m + d) +
                              log_factorial(k + m + dp) + log_factorial(j - k - d) +
                              log_factorial(jp - k - dp));
    const double sign_phase = ((d + dp) % 2 == 0) ? 0.0 : std::numbers::pi;
    const cplx eps_power = 2.0 * (2.0 * dp + m + k + 1.0 + i_rho_half) * log_eps;
    const Hyp2F1Params params{static_cast<double>(jp) + 1.0 + i_rho_half,
                              static_cast<double>(top) + 1.0,
                              static_cast<double>(j + jp) + 2.0, z};
    total += LogComplexValue(log_ratio, sign_phase) * LogComplexValue::from_log(eps_power) *
             hyp2f1(params);
  }
  return LogComplexValue(log_prefactor, 0.0) * total;
}

CoefficientValue diagonal_coefficient(int j, int m, cplx tau, double epsilon,
                                      const EvaluationPolicy& policy) {
  if (j < 0) throw IndexError("diagonal_coefficient: j must be non-negative");
  if (std::abs(m) > j) {
    throw IndexError("diagonal_coefficient: |m| = " + std::to_string(std::abs(m)) +
                     " exceeds j = " + std::to_string(j));
  }
  check_epsilon(epsilon);
  const double dj = j;
  const cplx i_tau_j_half = cplx(0.0, 0.5) * tau * dj;
  const cplx log_eps_power = 2.0 * (m + dj + 1.0 + i_tau_j_half) * std::log(epsilon);
  const double leading_error = (1.0 + static_cast<double>(m) * m) / (2.0 * std::max(dj, 1.0));

  bool asymptotic = false;
  const bool asymptotic_possible = j >= 1 && epsilon != 1.0;
  switch (policy.selection) {
    case PathSelection::kExact:
      break;
    case PathSelection::kAsymptotic:
      asymptotic = asymptotic_possible;
      break;
    case PathSelection::kAuto:
      asymptotic = asymptotic_possible && j > policy.exact_max_j && tau == cplx(0.0, 0.0) &&
                   leading_error <= policy.asymptotic_max_error;
      break;
  }

  CoefficientValue out;
  const LogComplexValue eps_power = LogComplexValue::from_log(log_eps_power);
  if (asymptotic) {
    out.value = eps_power * watson_asymptotic_2f1(j, m, tau, epsilon, policy.branch);
    out.path = EvaluationPath::kAsymptotic;
    out.error_estimate = leading_error;
    out.method = Hyp2F1Method::kTrivial;
    return out;
  }
  const Hyp2F1Params params{dj + 1.0 + i_tau_j_half, static_cast<double>(m + j) + 1.0,
                            2.0 * dj + 2.0, 1.0 - std::pow(epsilon, 4)};
  const Hyp2F1Result r = hyp2f1_detailed(params, policy.hyp2f1);
  out.value = eps_power * r.value;
  out.path = EvaluationPath::kExact;
  out.error_estimate = r.error_estimate;
  out.method = r.method;
  return out;
}

double diagonal_ratio_limit(double epsilon) {
  const double e2 = epsilon * epsilon;
  return 4.0 * e2 / ((e2 + 1.0) * (e2 + 1.0));
}

double top_track_ratio_limit(double epsilon) {
  const double e2 = epsilon * epsilon;
  return e2 / ((e2 + 1.0) * (e2 + 1.0));
}

}  // namespace lh
