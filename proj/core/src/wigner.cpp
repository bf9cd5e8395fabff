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

#include "lh/wigner/wigner.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lh/errors.hpp"
#include "lh/special/gamma.hpp"

namespace lh {

namespace {

double log_binomial(int n, int k) {
  return log_factorial(n) - log_factorial(k) - log_factorial(n - k);
}

// Jacobi polynomial P_n^{(a,b)}(x) by the three-term recurrence.
double jacobi(int n, double a, double b, double x) {
  if (n == 0) return 1.0;
  double p0 = 1.0;
  double p1 = (a + 1.0) + 0.5 * (a + b + 2.0) * (x - 1.0);
  for (int k = 2; k <= n; ++k) {
    const double s = 2.0 * k + a + b;
    const double c1 = 2.0 * k * (k + a + b) * (s - 2.0);
    const double c2 = (s - 1.0) * (s * (s - 2.0) * x + a * a - b * b);
    const double c3 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * s;
    const double p2 = (c2 * p1 - c3 * p0) / c1;
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

double log_power(double base, int exponent) {
  if (exponent == 0) return 0.0;
  return exponent * std::log(base);
}

}  // namespace

void check_magnetic_index(SpinLabel spin, int twice_m) {
  if (spin.twice_j < 0) throw IndexError("spin label must be non-negative");
  if (std::abs(twice_m) > spin.twice_j || (spin.twice_j - twice_m) % 2 != 0) {
    throw IndexError("magnetic index " + std::to_string(twice_m) + "/2 invalid for spin " +
                     std::to_string(spin.twice_j) + "/2");
  }
}

double wigner_small_d(SpinLabel spin, int twice_m, int twice_n, double beta) {
  check_magnetic_index(spin, twice_m);
  check_magnetic_index(spin, twice_n);
  const int tj = spin.twice_j;
  // Row m' = twice_m/2, column m = twice_n/2; all combinations below are integers.
  const int j_plus_m = (tj + twice_n) / 2;
  const int j_minus_m = (tj - twice_n) / 2;
  const int j_plus_mp = (tj + twice_m) / 2;
  const int j_minus_mp = (tj - twice_m) / 2;
  const int mp_minus_m = (twice_m - twice_n) / 2;
  const int k = std::min({j_plus_m, j_minus_m, j_plus_mp, j_minus_mp});
  int a = 0;
  int lambda = 0;
  if (k == j_plus_m) {
    a = mp_minus_m;
    lambda = mp_minus_m;
  } else if (k == j_minus_m) {
    a = -mp_minus_m;
  } else if (k == j_plus_mp) {
    a = -mp_minus_m;
  } else {
    a = mp_minus_m;
    lambda = mp_minus_m;
  }
  const int b = tj - 2 * k - a;
  const double s = std::sin(0.5 * beta);
  const double c = std::cos(0.5 * beta);
  const double log_scale = 0.5 * (log_binomial(tj - k, k + a) - log_binomial(k + b, b)) +
                           log_power(std::abs(s), a) + log_power(std::abs(c), b);
  double value = std::exp(log_scale) * jacobi(k, a, b, std::cos(beta));
  if (s < 0.0 && a % 2 != 0) value = -value;
  if (c < 0.0 && b % 2 != 0) value = -value;
  return (lambda % 2 != 0) ? -value : value;
}

double wigner_small_d_factorial_sum(SpinLabel spin, int twice_m, int twice_n, double beta) {
  check_magnetic_index(spin, twice_m);
  check_magnetic_index(spin, twice_n);
  const int tj = spin.twice_j;
  const int jpm = (tj + twice_n) / 2;   // j + m
  const int jmm = (tj - twice_n) / 2;   // j - m
  const int jpmp = (tj + twice_m) / 2;  // j + m'
  const int jmmp = (tj - twice_m) / 2;  // j - m'
  const int delta = (twice_m - twice_n) / 2;  // m' - m
  const int s_min = std::max(0, -delta);
  const int s_max = std::min(jpm, jmmp);
  const double c = std::cos(0.5 * beta);
  const double s = std::sin(0.5 * beta);
  const bool use_logs = tj > 60;
  const double log_root =
      0.5 * (log_factorial(jpmp) + log_factorial(jmmp) + log_factorial(jpm) + log_factorial(jmm));
  double total = 0.0;
  for (int k = s_min; k <= s_max; ++k) {
    const int cos_power = tj - delta - 2 * k;
    const int sin_power = delta + 2 * k;
    const double sign = ((delta + k) % 2 == 0) ? 1.0 : -1.0;
    const double log_denominator = log_factorial(jpm - k) + log_factorial(k) +
                                   log_factorial(delta + k) + log_factorial(jmmp - k);
    double term = 0.0;
    if (use_logs) {
      const double lc = cos_power == 0 ? 0.0 : cos_power * std::log(std::abs(c));
      const double ls = sin_power == 0 ? 0.0 : sin_power * std::log(std::abs(s));
      term = std::exp(log_root - log_denominator + lc + ls);
      if (c < 0.0 && cos_power % 2 != 0) term = -term;
      if (s < 0.0 && sin_power % 2 != 0) term = -term;
    } else {
      term = std::exp(log_root - log_denominator) * std::pow(c, cos_power) * std::pow(s, sin_power);
    }
    total += sign * term;
  }
  return total;
}

std::complex<double> wigner_D(SpinLabel spin, int twice_m, int twice_n, const SU2Element& u) {
  const double d = wigner_small_d(spin, twice_m, twice_n, u.beta());
  const int sum = (twice_m + twice_n) / 2;
  const int diff = (twice_m - twice_n) / 2;
  const double angle = -(sum * u.half_sum() + diff * u.half_difference());
  return d * std::polar(1.0, angle);
}

}  // namespace lh
