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

#ifndef LH_SPECIAL_LOG_COMPLEX_HPP_
#define LH_SPECIAL_LOG_COMPLEX_HPP_

#include <complex>
#include <limits>
#include <optional>

namespace lh {

// Maps an angle into (-pi, pi].
double wrap_phase(double phase);

// A complex number stored as (log|z|, arg z). Zero is log_mag = -inf with
// phase 0. Products of many huge or tiny factors stay representable.
class LogComplexValue {
 public:
  LogComplexValue() = default;
  LogComplexValue(double log_mag, double phase);

  static LogComplexValue zero() { return {}; }
  static LogComplexValue one() { return {0.0, 0.0}; }
  static LogComplexValue from_complex(std::complex<double> z);
  // exp(w) for a complex logarithm w.
  static LogComplexValue from_log(std::complex<double> w);

  double log_mag() const { return log_mag_; }
  double phase() const { return phase_; }
  bool is_zero() const { return log_mag_ == -std::numeric_limits<double>::infinity(); }

  // Principal logarithm; -inf real part for zero.
  std::complex<double> log() const { return {log_mag_, phase_}; }
  // Throws NumericalError when |z| overflows a double.
  std::complex<double> to_complex() const;
  std::optional<std::complex<double>> try_to_complex() const;

  LogComplexValue conj() const { return {log_mag_, -phase_}; }
  LogComplexValue pow(std::complex<double> exponent) const;

  LogComplexValue& operator*=(const LogComplexValue& other);
  LogComplexValue& operator/=(const LogComplexValue& other);
  LogComplexValue& operator+=(const LogComplexValue& other);
  LogComplexValue& operator-=(const LogComplexValue& other);
  LogComplexValue operator-() const;

  friend LogComplexValue operator*(LogComplexValue a, const LogComplexValue& b) { return a *= b; }
  friend LogComplexValue operator/(LogComplexValue a, const LogComplexValue& b) { return a /= b; }
  friend LogComplexValue operator+(LogComplexValue a, const LogComplexValue& b) { return a += b; }
  friend LogComplexValue operator-(LogComplexValue a, const LogComplexValue& b) { return a -= b; }

 private:
  double log_mag_ = -std::numeric_limits<double>::infinity();
  double phase_ = 0.0;
};

}  // namespace lh

#endif  // LH_SPECIAL_LOG_COMPLEX_HPP_
