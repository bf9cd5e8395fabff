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

#include "lh/special/log_complex.hpp"

#include <cmath>
#include <numbers>

#include "lh/errors.hpp"

namespace lh {

namespace {
constexpr double kMaxLogDouble = 709.782712893384;
}  // namespace

double wrap_phase(double phase) {
  if (!std::isfinite(phase)) return phase;
  constexpr double kPi = std::numbers::pi;
  if (phase > -kPi && phase <= kPi) return phase;
  double r = std::remainder(phase, 2.0 * kPi);
  if (r <= -kPi) r += 2.0 * kPi;
  return r;
}

LogComplexValue::LogComplexValue(double log_mag, double phase)
    : log_mag_(log_mag), phase_(wrap_phase(phase)) {
  if (is_zero()) phase_ = 0.0;
}

LogComplexValue LogComplexValue::from_complex(std::complex<double> z) {
  if (z == std::complex<double>(0.0, 0.0)) return zero();
  return {std::log(std::abs(z)), std::arg(z)};
}

LogComplexValue LogComplexValue::from_log(std::complex<double> w) {
  return {w.real(), w.imag()};
}

std::optional<std::complex<double>> LogComplexValue::try_to_complex() const {
  if (is_zero()) return std::complex<double>(0.0, 0.0);
  if (!(log_mag_ < kMaxLogDouble)) return std::nullopt;
  return std::polar(std::exp(log_mag_), phase_);
}

std::complex<double> LogComplexValue::to_complex() const {
  auto v = try_to_complex();
  if (!v) throw NumericalError("LogComplexValue: magnitude overflows double");
  return *v;
}

LogComplexValue LogComplexValue::pow(std::complex<double> exponent) const {
  if (is_zero()) {
    if (exponent.real() > 0.0) return zero();
    if (exponent == std::complex<double>(0.0, 0.0)) return one();
    throw DomainError("LogComplexValue: zero raised to a non-positive power");
  }
  return from_log(exponent * log());
}

LogComplexValue& LogComplexValue::operator*=(const LogComplexValue& other) {
  if (is_zero() || other.is_zero()) {
    *this = zero();
    return *this;
  }
  log_mag_ += other.log_mag_;
  phase_ = wrap_phase(phase_ + other.phase_);
  return *this;
}

LogComplexValue& LogComplexValue::operator/=(const LogComplexValue& other) {
  if (other.is_zero()) throw DomainError("LogComplexValue: division by zero");
  if (is_zero()) return *this;
  log_mag_ -= other.log_mag_;
  phase_ = wrap_phase(phase_ - other.phase_);
  return *this;
}

LogComplexValue& LogComplexValue::operator+=(const LogComplexValue& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) {
    *this = other;
    return *this;
  }
  const LogComplexValue& big = log_mag_ >= other.log_mag_ ? *this : other;
  const LogComplexValue& small = log_mag_ >= other.log_mag_ ? other : *this;
  const double r = std::exp(small.log_mag_ - big.log_mag_);
  const double d = wrap_phase(small.phase_ - big.phase_);
  // Exact opposite phases (as produced by negation) must cancel exactly.
  const std::complex<double> s =
      std::abs(d) == std::numbers::pi ? std::complex<double>(1.0 - r, 0.0) : 1.0 + std::polar(r, d);
  if (s == std::complex<double>(0.0, 0.0)) {
    *this = zero();
    return *this;
  }
  *this = LogComplexValue(big.log_mag_ + std::log(std::abs(s)), big.phase_ + std::arg(s));
  return *this;
}

LogComplexValue LogComplexValue::operator-() const {
  if (is_zero()) return *this;
  return {log_mag_, phase_ + std::numbers::pi};
}

LogComplexValue& LogComplexValue::operator-=(const LogComplexValue& other) {
  return *this += -other;
}

}  // namespace lh
