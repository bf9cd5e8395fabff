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

#include "lh/special/gamma.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "lh/errors.hpp"
#include "lh/special/compensated_sum.hpp"

namespace lh {

namespace {

// B_{2k} / (2k (2k-1)), k = 1..10.
constexpr std::array<double, 10> kStirlingCoeffs = {
    1.0 / 12.0,          -1.0 / 360.0,        1.0 / 1260.0,          -1.0 / 1680.0,
    1.0 / 1188.0,        -691.0 / 360360.0,   1.0 / 156.0,           -3617.0 / 122400.0,
    43867.0 / 244188.0,  -174611.0 / 125400.0};

constexpr double kStirlingRadius = 20.0;

std::complex<double> stirling(std::complex<double> z) {
  const double half_log_two_pi = 0.5 * std::log(2.0 * std::numbers::pi);
  std::complex<double> result = (z - 0.5) * std::log(z) - z + half_log_two_pi;
  const std::complex<double> inv = 1.0 / z;
  const std::complex<double> inv2 = inv * inv;
  std::complex<double> power = inv;
  for (double coeff : kStirlingCoeffs) {
    result += coeff * power;
    power *= inv2;
  }
  return result;
}

// log n! for small n, filled once. std::lgamma is correctly rounded to within
// an ulp or two here; calling it only during this one-time initialization
// keeps its global sign variable out of the parallel paths.
constexpr int kFactorialTableSize = 2048;

const std::array<double, kFactorialTableSize>& factorial_table() {
  static const std::array<double, kFactorialTableSize> table = [] {
    std::array<double, kFactorialTableSize> t{};
    for (int n = 2; n < kFactorialTableSize; ++n) t[n] = std::lgamma(static_cast<double>(n) + 1.0);
    return t;
  }();
  return table;
}

}  // namespace

bool is_nonpositive_integer(std::complex<double> z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

std::complex<double> log_gamma(std::complex<double> z) {
  if (is_nonpositive_integer(z)) throw PoleError("log_gamma: pole at non-positive integer");
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError("log_gamma: non-finite argument");
  }
  if (z.imag() == 0.0 && z.real() >= 1.0 && z.real() <= kFactorialTableSize &&
      z.real() == std::floor(z.real())) {
    return factorial_table()[static_cast<int>(z.real()) - 1];
  }
  // Stirling is accurate for |z| >= 20 away from the negative real axis.
  const bool stirling_ok = std::abs(z) >= kStirlingRadius &&
                           (z.real() >= 0.0 || std::abs(z.imag()) >= std::abs(z.real()));
  if (stirling_ok) return stirling(z);

  // Shift up with log Gamma(z) = log Gamma(z + n) - sum log(z + k). Each log
  // is principal, which selects the principal branch of log Gamma.
  NeumaierSum re;
  NeumaierSum im;
  std::complex<double> w = z;
  while (!(std::abs(w) >= kStirlingRadius && w.real() >= 0.0)) {
    const std::complex<double> l = std::log(w);
    re.add(l.real());
    im.add(l.imag());
    w += 1.0;
  }
  const std::complex<double> s = stirling(w);
  return {s.real() - re.value(), s.imag() - im.value()};
}

double log_factorial(int n) {
  if (n < 0) throw DomainError("log_factorial: negative argument");
  if (n < kFactorialTableSize) return factorial_table()[n];
  return log_gamma(static_cast<double>(n) + 1.0).real();
}

LogComplexValue reciprocal_gamma(std::complex<double> z) {
  if (is_nonpositive_integer(z)) return LogComplexValue::zero();
  return LogComplexValue::from_log(-log_gamma(z));
}

LogComplexValue pochhammer(std::complex<double> q, int n) {
  if (n < 0) throw DomainError("pochhammer: negative length");
  if (n == 0) return LogComplexValue::one();
  const bool hits_zero = is_nonpositive_integer(q) && -q.real() < n;
  if (hits_zero) return LogComplexValue::zero();
  if (n > 64 && !is_nonpositive_integer(q)) {
    return LogComplexValue::from_log(log_gamma(q + static_cast<double>(n)) - log_gamma(q));
  }
  LogComplexValue result = LogComplexValue::one();
  for (int k = 0; k < n; ++k) result *= LogComplexValue::from_complex(q + static_cast<double>(k));
  return result;
}

}  // namespace lh
