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

#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "lh/errors.hpp"
#include "lh/special/hypergeometric.hpp"

namespace lh {
namespace {

using cplx = std::complex<double>;

double rel_error(const LogComplexValue& v, double log_mag, double phase) {
  return std::abs(std::exp(cplx(v.log_mag() - log_mag, v.phase() - phase)) - 1.0);
}

struct Reference {
  cplx a, b, c;
  double z;
  double log_mag, phase;
};

// mpmath.hyp2f1 at 30 digits.
const Reference kReferences[] = {
    {{0.5, 0}, {1.5, 0}, {2.25, 0}, 0.3, 0.11504714326678536, 0.0},
    {{1, 2}, {3, 0}, {4.5, 0}, -7.0, -1.8793119380497957, 3.0335682644078945},
    {{2, -1}, {1, 0.5}, {3, 0}, 0.85, 1.2729150314294962, -0.14641982787864588},
    {{10, 3}, {21, 0}, {22, 0}, -15.0, -27.166220850682668, -1.8003961252421331},
    {{0.25, 0}, {0.75, 0}, {1, 0}, 0.99, 0.68052216127477773, 0.0},
    {{3, 0}, {5, 0}, {8, 0}, 0.999, 5.8767865000035267, 0.0},
    {{40.5, 20}, {61, 0}, {120, 0}, 0.9375, 30.68215968141411, 2.3144480453235453},
    {{101, 0}, {151, 0}, {202, 0}, -255.0, -516.12777802746372, 0.0},
};

TEST(Hyp2F1Test, MatchesReferenceValues) {
  for (const auto& r : kReferences) {
    const auto res = hyp2f1_detailed({r.a, r.b, r.c, r.z});
    EXPECT_LT(rel_error(res.value, r.log_mag, r.phase), 1e-10)
        << "a=" << r.a << " b=" << r.b << " c=" << r.c << " z=" << r.z
        << " method=" << to_string(res.method);
    EXPECT_LE(res.error_estimate, 1e-6);
  }
}

TEST(Hyp2F1Test, ElementaryClosedForms) {
  // 2F1(1, 1; 2; z) = -log(1 - z) / z
  for (double z : {-50.0, -0.7, 0.2, 0.6, 0.95}) {
    const double expect = -std::log1p(-z) / z;
    EXPECT_NEAR(hyp2f1({1.0, 1.0, 2.0, z}).to_complex().real(), expect, 1e-12 * std::abs(expect))
        << z;
  }
  // 2F1(a, b; b; z) = (1 - z)^{-a}
  const cplx a(0.7, -1.3);
  for (double z : {-3.0, 0.4, 0.8}) {
    const cplx expect = std::pow(1.0 - z, -a);
    EXPECT_NEAR(std::abs(hyp2f1({a, 2.5, 2.5, z}).to_complex() - expect), 0.0,
                1e-12 * std::abs(expect))
        << z;
  }
}

TEST(Hyp2F1Test, TerminatingSeries) {
  // 2F1(-2, b; c; z) = 1 - 2bz/c + b(b+1)z^2/(c(c+1))
  const double b = 1.5, c = 3.0;
  for (double z : {-100.0, 0.5, 0.99}) {
    const double expect = 1.0 - 2.0 * b * z / c + b * (b + 1.0) * z * z / (c * (c + 1.0));
    EXPECT_NEAR(hyp2f1({-2.0, b, c, z}).to_complex().real(), expect, 1e-12 * std::abs(expect));
  }
}

TEST(Hyp2F1Test, ZeroArgumentIsOne) {
  const auto res = hyp2f1_detailed({{3.0, 2.0}, 7.0, 9.0, 0.0});
  EXPECT_EQ(res.value.to_complex(), cplx(1.0, 0.0));
  EXPECT_EQ(res.method, Hyp2F1Method::kTrivial);
}

TEST(Hyp2F1Test, DegenerateConnectionCase) {
  // c - a - b = 0: the plain connection formula has cancelling poles.
  // 2F1(1/2, 1/2; 1; z) = 2 K(z) / pi; K(0.9) from mpmath.ellipk.
  const double k = 2.5780921133481733;
  EXPECT_NEAR(hyp2f1({0.5, 0.5, 1.0, 0.9}).to_complex().real(), 2.0 * k / std::numbers::pi, 1e-10);
}

TEST(Hyp2F1Test, DomainErrors) {
  EXPECT_THROW(hyp2f1({1.0, 1.0, 2.0, 1.0}), DomainError);
  EXPECT_THROW(hyp2f1({1.0, 1.0, 2.0, 3.0}), DomainError);
  EXPECT_THROW(hyp2f1({1.0, 1.0, -2.0, 0.5}), DomainError);
  EXPECT_THROW(hyp2f1({1.0, 1.0, 2.0, NAN}), DomainError);
}

TEST(Hyp2F1Test, SeriesAndContourAgree) {
  const cplx a(6.0, 2.5);
  const double b = 9.0, c = 14.0, z = 0.45;
  const auto series = detail::gauss_series(a, b, c, z, 100000, 1e-17);
  ASSERT_TRUE(series.converged);
  const auto contour = detail::euler_contour(a, b, c, z);
  EXPECT_LT(std::abs((contour.value / series.value).to_complex() - 1.0), 1e-10);
  EXPECT_LT(contour.error_estimate, 1e-9);
}

TEST(Hyp2F1Test, ContourHandlesLargeNegativeArgument) {
  // Diagonal-coefficient shape at j = 150, eps = 3: z = 1 - 81.
  const int j = 150;
  const cplx a(j + 1.0, 0.5 * 0.3 * j);
  const double b = j + 1.0, c = 2.0 * j + 2.0, z = -80.0;
  const auto res = hyp2f1_detailed({a, b, c, z});
  const auto contour = detail::euler_contour(a, b, c, z);
  EXPECT_LT(std::abs((contour.value / res.value).to_complex() - 1.0), 1e-9)
      << to_string(res.method);
}

}  // namespace
}  // namespace lh
