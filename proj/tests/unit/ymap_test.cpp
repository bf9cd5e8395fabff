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

#include "lh/errors.hpp"
#include "lh/lie/cartan.hpp"
#include "lh/wigner/su2_fourier.hpp"
#include "lh/ymap/ymap.hpp"

namespace lh {
namespace {

using cplx = std::complex<double>;

FourierTableSU2 smooth_table(int band) {
  SU2Function phi = [](const SU2Element& u) { return cplx(std::exp(u.matrix().trace().real()), 0.0); };
  return su2_fourier(phi, 0, band);
}

TEST(YMapTest, TermsAreTableWeightedCoefficients) {
  FourierTableSU2 t;
  t.p = 0;
  t.band_limit = 4;
  t.entries[{2, 0}] = {0.5, 0.25};
  t.entries[{4, -2}] = {-1.0, 0.0};
  YMapRequest req;
  req.table = t;
  req.tau = 0.3;
  req.target = 2.0;
  req.j_max = 6;
  const SeriesReport r = ymap_apply(req);
  ASSERT_EQ(r.terms.front().j, 0);
  const cplx d2 = diagonal_coefficient(2, 0, 0.3, 2.0).value.to_complex();
  const cplx d4 = diagonal_coefficient(4, -2, 0.3, 2.0).value.to_complex();
  const cplx expect = cplx(0.5, 0.25) * d2 - d4;
  EXPECT_LT(std::abs(r.terms.back().partial_sum.value() - expect), 1e-14 * std::abs(expect));
  EXPECT_TRUE(r.terms[1].value.is_zero());
  EXPECT_FALSE(r.notes.empty());  // band below j_max
}

TEST(YMapTest, GroupElementTargetUsesCartanEpsilon) {
  const Matrix2c m =
      SU2Element::from_euler(0.3, 1.1, 2.0).matrix() * Matrix2c::diagonal(0.5, 2.0) *
      SU2Element::from_euler(1.0, 0.2, 0.7).matrix();
  YMapRequest a;
  a.table = smooth_table(6);
  a.tau = 0.3;
  a.target = SL2CElement::from_matrix(m);
  a.j_max = 20;
  YMapRequest b = a;
  b.target = 2.0;
  EXPECT_NEAR(a.epsilon(), 2.0, 1e-12);
  const auto sa = ymap_apply(a).terms.back().partial_sum.value();
  const auto sb = ymap_apply(b).terms.back().partial_sum.value();
  EXPECT_LT(std::abs(sa - sb), 1e-10 * std::abs(sb));
}

TEST(YMapTest, RejectsBadRequests) {
  YMapRequest req;
  req.table = smooth_table(4);
  req.target = -1.0;
  EXPECT_THROW(ymap_apply(req), DomainError);
  req.target = 2.0;
  req.table.p = 6;
  req.j_max = 4;
  EXPECT_THROW(ymap_apply(req), DomainError);
}

TEST(YMapTest, ConvergenceReportMajorizes) {
  YMapRequest req;
  req.table = smooth_table(8);
  req.tau = 0.3;
  req.target = 0.5;
  req.j_max = 40;
  const YMapConvergenceReport r = ymap_convergence_report(req);
  EXPECT_TRUE(r.majorization_holds);
  EXPECT_EQ(r.checkpoints.size(), 41u);
  EXPECT_EQ(r.verdict, Verdict::kConverged);
  EXPECT_EQ(r.fourier_verdict, Verdict::kConverged);
  EXPECT_NEAR(r.fourier_sum_bound, req.table.abs_sum(), 1e-12 * r.fourier_sum_bound);
  EXPECT_GT(r.coefficient_sum_bound, 0.0);
}

}  // namespace
}  // namespace lh
