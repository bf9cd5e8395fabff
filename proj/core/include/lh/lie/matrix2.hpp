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

#ifndef LH_LIE_MATRIX2_HPP_
#define LH_LIE_MATRIX2_HPP_

#include <array>
#include <complex>

namespace lh {

// Row-major 2x2 complex matrix (a, b; c, d).
struct Matrix2c {
  std::complex<double> a{1.0, 0.0};
  std::complex<double> b{0.0, 0.0};
  std::complex<double> c{0.0, 0.0};
  std::complex<double> d{1.0, 0.0};

  static Matrix2c identity() { return {}; }
  static Matrix2c diagonal(std::complex<double> x, std::complex<double> y) {
    return {x, 0.0, 0.0, y};
  }

  std::complex<double> det() const { return a * d - b * c; }
  std::complex<double> trace() const { return a + d; }
  Matrix2c adjoint() const { return {std::conj(a), std::conj(c), std::conj(b), std::conj(d)}; }
  // Inverse for a determinant-one matrix.
  Matrix2c unimodular_inverse() const { return {d, -b, -c, a}; }

  // Re/im interleaved, row-major: a.re a.im b.re b.im c.re c.im d.re d.im.
  std::array<double, 8> to_reals() const;
  static Matrix2c from_reals(const std::array<double, 8>& v);

  friend Matrix2c operator*(const Matrix2c& x, const Matrix2c& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
            x.c * y.b + x.d * y.d};
  }
};

// Largest entrywise modulus of x - y.
double max_abs_diff(const Matrix2c& x, const Matrix2c& y);

// Largest entrywise modulus of x x^dagger - I.
double unitarity_defect(const Matrix2c& x);

}  // namespace lh

#endif  // LH_LIE_MATRIX2_HPP_
