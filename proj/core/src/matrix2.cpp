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

#include "lh/lie/matrix2.hpp"

#include <algorithm>
#include <cmath>

namespace lh {

std::array<double, 8> Matrix2c::to_reals() const {
  return {a.real(), a.imag(), b.real(), b.imag(), c.real(), c.imag(), d.real(), d.imag()};
}

Matrix2c Matrix2c::from_reals(const std::array<double, 8>& v) {
  return {{v[0], v[1]}, {v[2], v[3]}, {v[4], v[5]}, {v[6], v[7]}};
}

double max_abs_diff(const Matrix2c& x, const Matrix2c& y) {
  return std::max({std::abs(x.a - y.a), std::abs(x.b - y.b), std::abs(x.c - y.c),
                   std::abs(x.d - y.d)});
}

double unitarity_defect(const Matrix2c& x) {
  return max_abs_diff(x * x.adjoint(), Matrix2c::identity());
}

}  // namespace lh
