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

#include "lh/lie/cartan.hpp"

#include <cmath>

namespace lh {

namespace {

using cplx = std::complex<double>;

// Below this value of epsilon - 1/epsilon the element is treated as unitary.
constexpr double kDegenerateSpread = 1e-13;

}  // namespace

Matrix2c CartanFactors::recompose() const {
  return u1.matrix() * Matrix2c::diagonal(1.0 / epsilon, epsilon) * u2.matrix();
}

double epsilon_of(const SL2CElement& g) {
  const Matrix2c& m = g.matrix();
  // For det g = 1, |a - conj d|^2 + |b + conj c|^2 = (epsilon - 1/epsilon)^2.
  const double spread = std::hypot(std::abs(m.a - std::conj(m.d)), std::abs(m.b + std::conj(m.c)));
  return 0.5 * (spread + std::sqrt(spread * spread + 4.0));
}

CartanFactors cartan_decompose(const SL2CElement& g) {
  const Matrix2c& m = g.matrix();
  const double spread = std::hypot(std::abs(m.a - std::conj(m.d)), std::abs(m.b + std::conj(m.c)));
  CartanFactors out;
  if (spread <= kDegenerateSpread) {
    out.epsilon = 1.0;
    out.u1 = SU2Element::from_columns(0.5 * (m.a + std::conj(m.d)), 0.5 * (m.c - std::conj(m.b)));
    out.u2 = SU2Element::identity();
    return out;
  }
  const double eps = 0.5 * (spread + std::sqrt(spread * spread + 4.0));
  const double lambda_min = 1.0 / (eps * eps);

  // g g^+ = u1 diag(eps^-2, eps^2) u1^+. The eigenvector of the large
  // eigenvalue is formed without cancellation; the small one is orthogonal.
  const Matrix2c h = m * m.adjoint();
  const double h11 = h.a.real();
  const double h22 = h.d.real();
  const cplx h12 = h.b;
  const cplx v1(h12);
  const cplx v2(h22 - lambda_min);
  const cplx w1(h11 - lambda_min);
  const cplx w2(std::conj(h12));
  cplx big0;
  cplx big1;
  if (std::hypot(std::abs(v1), std::abs(v2)) >= std::hypot(std::abs(w1), std::abs(w2))) {
    big0 = v1;
    big1 = v2;
  } else {
    big0 = w1;
    big1 = w2;
  }
  cplx small0 = -std::conj(big1);
  cplx small1 = std::conj(big0);
  const double norm = std::hypot(std::abs(small0), std::abs(small1));
  small0 /= norm;
  small1 /= norm;
  // First nonzero component real positive.
  const cplx lead = std::abs(small0) > 1e-300 ? small0 : small1;
  const cplx phase = std::conj(lead) / std::abs(lead);
  small0 *= phase;
  small1 *= phase;

  out.epsilon = eps;
  out.u1 = SU2Element::from_columns(small0, small1);
  const Matrix2c u2 = Matrix2c::diagonal(eps, 1.0 / eps) * out.u1.matrix().adjoint() * m;
  // Re-project onto SU(2) to remove rounding in the diagonal scaling.
  out.u2 = SU2Element::from_columns(0.5 * (u2.a + std::conj(u2.d)), 0.5 * (u2.c - std::conj(u2.b)));
  return out;
}

}  // namespace lh
