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

#ifndef LH_WIGNER_WIGNER_HPP_
#define LH_WIGNER_WIGNER_HPP_

#include <complex>

#include "lh/lie/group.hpp"

namespace lh {

// Spin twice_j / 2. Magnetic indices are passed doubled as well.
struct SpinLabel {
  int twice_j = 0;
};

// Throws IndexError unless |twice_m| <= twice_j and twice_m = twice_j mod 2.
void check_magnetic_index(SpinLabel spin, int twice_m);

// d^j_{mn}(beta) through the Jacobi-polynomial form, stable for large j.
double wigner_small_d(SpinLabel spin, int twice_m, int twice_n, double beta);

// d^j_{mn}(beta) through the alternating factorial sum, in log space for
// twice_j > 60. Loses accuracy to cancellation at large j; kept as a
// reference evaluation.
double wigner_small_d_factorial_sum(SpinLabel spin, int twice_m, int twice_n, double beta);

// D^j_{mn}(u) = exp(-i m alpha) d^j_{mn}(beta) exp(-i n gamma).
std::complex<double> wigner_D(SpinLabel spin, int twice_m, int twice_n, const SU2Element& u);

}  // namespace lh

#endif  // LH_WIGNER_WIGNER_HPP_
