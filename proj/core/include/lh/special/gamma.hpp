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

#ifndef LH_SPECIAL_GAMMA_HPP_
#define LH_SPECIAL_GAMMA_HPP_

#include <complex>

#include "lh/special/log_complex.hpp"

namespace lh {

// Principal branch of log Gamma(z): analytic off the non-positive real axis,
// with log_gamma(z + 1) = log_gamma(z) + log(z). Throws PoleError at
// z = 0, -1, -2, ...
std::complex<double> log_gamma(std::complex<double> z);

// log n! for n >= 0.
double log_factorial(int n);

// True when z is (numerically exactly) a non-positive integer.
bool is_nonpositive_integer(std::complex<double> z);

// 1 / Gamma(z) in log form; exact zero at the poles.
LogComplexValue reciprocal_gamma(std::complex<double> z);

// Rising factorial (q)_n = q (q+1) ... (q+n-1), n >= 0.
LogComplexValue pochhammer(std::complex<double> q, int n);

}  // namespace lh

#endif  // LH_SPECIAL_GAMMA_HPP_
