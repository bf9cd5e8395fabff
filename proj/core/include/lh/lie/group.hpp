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

#ifndef LH_LIE_GROUP_HPP_
#define LH_LIE_GROUP_HPP_

#include "lh/lie/matrix2.hpp"

namespace lh {

// Default tolerance for group-membership checks on user-supplied matrices.
inline constexpr double kGroupTolerance = 1e-9;

class SL2CElement {
 public:
  SL2CElement() = default;
  // Throws GroupError when |det - 1| > tol.
  static SL2CElement from_matrix(const Matrix2c& m, double tol = kGroupTolerance);

  const Matrix2c& matrix() const { return m_; }
  SL2CElement inverse() const { return SL2CElement(m_.unimodular_inverse()); }

  friend SL2CElement operator*(const SL2CElement& x, const SL2CElement& y) {
    return SL2CElement(x.m_ * y.m_);
  }

 private:
  explicit SL2CElement(const Matrix2c& m) : m_(m) {}
  Matrix2c m_;
};

struct EulerAngles {
  double alpha = 0.0;  // [0, 2 pi)
  double beta = 0.0;   // [0, pi]
  double gamma = 0.0;  // [0, 4 pi)
};

// Element of SU(2), u = (a, -conj(b); b, conj(a)) with |a|^2 + |b|^2 = 1.
// Euler angles follow the z-y-z convention
//   u = exp(-i alpha s3/2) exp(-i beta s2/2) exp(-i gamma s3/2),
// so the spin-1/2 Wigner matrix of u is u itself.
class SU2Element {
 public:
  SU2Element() = default;
  // Throws GroupError when u is not unitary with unit determinant within tol.
  static SU2Element from_matrix(const Matrix2c& m, double tol = kGroupTolerance);
  static SU2Element from_euler(double alpha, double beta, double gamma);
  // Normalizes (a, b) onto the unit sphere.
  static SU2Element from_columns(std::complex<double> a, std::complex<double> b);
  static SU2Element identity() { return {}; }

  const Matrix2c& matrix() const { return m_; }
  SL2CElement as_sl2c() const { return SL2CElement::from_matrix(m_, 1e-6); }
  SU2Element inverse() const { return SU2Element(m_.adjoint()); }
  EulerAngles euler() const;

  // Angle data used by Wigner matrices: beta and the half sums
  // (alpha + gamma)/2 and (alpha - gamma)/2, well defined at the poles.
  double beta() const;
  double half_sum() const;
  double half_difference() const;

  friend SU2Element operator*(const SU2Element& x, const SU2Element& y) {
    return SU2Element(x.m_ * y.m_);
  }

 private:
  explicit SU2Element(const Matrix2c& m) : m_(m) {}
  Matrix2c m_;
};

SU2Element su2_from_euler(double alpha, double beta, double gamma);

}  // namespace lh

#endif  // LH_LIE_GROUP_HPP_
