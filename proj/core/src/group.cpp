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

#include "lh/lie/group.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "lh/errors.hpp"

namespace lh {

namespace {

using cplx = std::complex<double>;

bool finite(const Matrix2c& m) {
  for (double v : m.to_reals()) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

double wrap_to(double x, double period) {
  double r = std::fmod(x, period);
  if (r < 0.0) r += period;
  if (r >= period) r -= period;
  return r;
}

}  // namespace

SL2CElement SL2CElement::from_matrix(const Matrix2c& m, double tol) {
  if (!finite(m)) throw GroupError("SL(2,C) element has non-finite entries");
  const double defect = std::abs(m.det() - 1.0);
  if (!(defect <= tol)) {
    throw GroupError("matrix is not in SL(2,C): |det - 1| = " + std::to_string(defect));
  }
  return SL2CElement(m);
}

SU2Element SU2Element::from_matrix(const Matrix2c& m, double tol) {
  if (!finite(m)) throw GroupError("SU(2) element has non-finite entries");
  const double det_defect = std::abs(m.det() - 1.0);
  const double unit_defect = unitarity_defect(m);
  if (!(det_defect <= tol && unit_defect <= tol)) {
    throw GroupError("matrix is not in SU(2): |det - 1| = " + std::to_string(det_defect) +
                     ", |u u^+ - I| = " + std::to_string(unit_defect));
  }
  return SU2Element(m);
}

SU2Element SU2Element::from_columns(cplx a, cplx b) {
  const double norm = std::hypot(std::abs(a), std::abs(b));
  if (!(norm > 0.0) || !std::isfinite(norm)) throw GroupError("SU(2) column has zero norm");
  a /= norm;
  b /= norm;
  return SU2Element(Matrix2c{a, -std::conj(b), b, std::conj(a)});
}

SU2Element SU2Element::from_euler(double alpha, double beta, double gamma) {
  const double c = std::cos(0.5 * beta);
  const double s = std::sin(0.5 * beta);
  const double half_sum = 0.5 * (alpha + gamma);
  const double half_diff = 0.5 * (alpha - gamma);
  const cplx a = std::polar(c, -half_sum);
  const cplx b = std::polar(s, half_diff);
  return SU2Element(Matrix2c{a, -std::conj(b), b, std::conj(a)});
}

double SU2Element::beta() const { return 2.0 * std::atan2(std::abs(m_.c), std::abs(m_.a)); }

double SU2Element::half_sum() const { return -std::arg(m_.a); }

double SU2Element::half_difference() const { return std::arg(m_.c); }

EulerAngles SU2Element::euler() const {
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  const double hs = half_sum();
  const double hd = half_difference();
  double alpha = hs + hd;
  double gamma = hs - hd;
  // (alpha + 2 pi, gamma + 2 pi) and (alpha, gamma + 4 pi) name the same element.
  const double turns = std::floor(alpha / kTwoPi);
  alpha -= turns * kTwoPi;
  gamma -= turns * kTwoPi;
  alpha = wrap_to(alpha, kTwoPi);
  gamma = wrap_to(gamma, 2.0 * kTwoPi);
  return {alpha, beta(), gamma};
}

SU2Element su2_from_euler(double alpha, double beta, double gamma) {
  return SU2Element::from_euler(alpha, beta, gamma);
}

}  // namespace lh
