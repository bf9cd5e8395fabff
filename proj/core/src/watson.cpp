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

#include "lh/special/watson.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "lh/errors.hpp"
#include "lh/special/gamma.hpp"

namespace lh {

namespace {

using cplx = std::complex<double>;

// Logarithm of a real number; negative values take the selected branch.
cplx branch_log(double x, double sign) {
  if (x > 0.0) return std::log(x);
  return {std::log(-x), sign * std::numbers::pi};
}

}  // namespace

LogComplexValue watson_asymptotic_2f1(int j, int m, cplx tau, double epsilon,
                                      AsymptoticBranch branch) {
  if (j < 1) throw IndexError("watson_asymptotic_2f1: j must be positive");
  if (std::abs(m) > j) throw IndexError("watson_asymptotic_2f1: |m| > j");
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw DomainError("watson_asymptotic_2f1: epsilon must be positive");
  }
  if (epsilon == 1.0) {
    throw DomainError("watson_asymptotic_2f1: degenerate at epsilon = 1 (argument 0)");
  }
  const double sign = branch == AsymptoticBranch::kMinus ? -1.0 : 1.0;
  const double dj = j;
  const double dm = m;
  const cplx i_tau_j_half = cplx(0.0, 1.0) * tau * dj * 0.5;
  const double e2 = epsilon * epsilon;
  const double e4 = e2 * e2;

  cplx log_value = -(1.0 + dj + i_tau_j_half) * branch_log(e4 - 1.0, sign);
  log_value += (1.0 + 2.0 * i_tau_j_half) * std::log(2.0);
  log_value += log_gamma(2.0 + 2.0 * dj);
  log_value += 0.5 * std::log(std::numbers::pi) - 0.5 * std::log(dj);
  log_value -= log_gamma(dm + 1.0 + dj) + log_gamma(1.0 - dm + dj);
  log_value += (1.0 + i_tau_j_half + dj) * branch_log((e2 - 1.0) / (e2 + 1.0), sign);
  log_value += (-0.5 - i_tau_j_half + dm) * std::log(2.0 / (e2 + 1.0));
  log_value += (-dm - i_tau_j_half - 0.5) * std::log(2.0 * e2 / (e2 + 1.0));
  if (!std::isfinite(log_value.real())) {
    throw NumericalError("watson_asymptotic_2f1: non-finite result at j = " + std::to_string(j));
  }
  return LogComplexValue::from_log(log_value);
}

}  // namespace lh
