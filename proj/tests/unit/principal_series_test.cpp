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
#include "lh/principal/principal_series.hpp"

namespace lh {
namespace {

using cplx = std::complex<double>;

double rel(const LogComplexValue& a, const LogComplexValue& b) {
  if (a.is_zero() && b.is_zero()) return 0.0;
  return std::abs(std::exp(cplx(a.log_mag() - b.log_mag(), a.phase() - b.phase())) - 1.0);
}

TEST(DiagonalCoefficientTest, SpinZeroClosedForm) {
  // j = 0: eps^2 2F1(1, 1; 2; 1 - eps^4) = 4 eps^2 log(eps) / (eps^4 - 1).
  for (double eps : {0.2, 0.5, 0.9, 1.1, 2.0, 5.0}) {
    const double expect = 4.0 * eps * eps * std::log(eps) / (std::pow(eps, 4) - 1.0);
    const cplx v = diagonal_coefficient(0, 0, 0.7, eps).value.to_complex();
    EXPECT_NEAR(v.real(), expect, 1e-13) << eps;
    EXPECT_NEAR(v.imag(), 0.0, 1e-14);
  }
}

TEST(DiagonalCoefficientTest, IdentityBoost) {
  // eps = 1 is the identity element, where D_{jm,jm} = 1.
  for (int j : {0, 3, 80}) {
    const cplx v = diagonal_coefficient(j, j / 2, {0.4, 0.1}, 1.0).value.to_complex();
    EXPECT_NEAR(std::abs(v - 1.0), 0.0, 1e-14) << j;
  }
}

TEST(DiagonalCoefficientTest, Errors) {
  EXPECT_THROW(diagonal_coefficient(1, 2, 0.0, 2.0), IndexError);
  EXPECT_THROW(diagonal_coefficient(-1, 0, 0.0, 2.0), IndexError);
  EXPECT_THROW(diagonal_coefficient(1, 0, 0.0, 0.0), DomainError);
  EXPECT_THROW(diagonal_coefficient(1, 0, 0.0, -2.0), DomainError);
}

TEST(DiagonalCoefficientTest, AutoPolicyGating) {
  EXPECT_EQ(diagonal_coefficient(64, 0, 0.0, 2.0).path, EvaluationPath::kExact);
  EXPECT_EQ(diagonal_coefficient(200, 0, 0.0, 2.0).path, EvaluationPath::kAsymptotic);
  // Leading-term error (1 + m^2)/(2j) too large.
  EXPECT_EQ(diagonal_coefficient(200, 5, 0.0, 2.0).path, EvaluationPath::kExact);
  // The leading term does not track the exact value for tau != 0.
  EXPECT_EQ(diagonal_coefficient(200, 0, 0.5, 2.0).path, EvaluationPath::kExact);
  EvaluationPolicy exact;
  exact.selection = PathSelection::kExact;
  EXPECT_LT(rel(diagonal_coefficient(200, 0, 0.0, 2.0).value,
                diagonal_coefficient(200, 0, 0.0, 2.0, exact).value),
            0.01);
}

TEST(DiagonalCoefficientTest, LeadingTermIsBranchIndependentForRealEpsilon) {
  // For eps < 1 both branch factors appear with opposite exponents and cancel;
  // for eps > 1 no negative base occurs.
  EvaluationPolicy minus, plus;
  minus.selection = plus.selection = PathSelection::kAsymptotic;
  plus.branch = AsymptoticBranch::kPlus;
  for (double eps : {0.5, 2.0}) {
    const auto a = diagonal_coefficient(40, 1, 0.5, eps, minus).value;
    const auto b = diagonal_coefficient(40, 1, 0.5, eps, plus).value;
    EXPECT_LT(rel(a, b), 1e-12) << eps;
  }
}

TEST(GeneralFormulaTest, AgreesWithDiagonalForSmallSpins) {
  EvaluationPolicy exact;
  exact.selection = PathSelection::kExact;
  for (int j = 0; j <= 6; ++j) {
    for (int m = -j; m <= j; ++m) {
      for (double eps : {0.5, 2.0}) {
        for (cplx tau : {cplx(0.0), cplx(0.3), cplx(1.0, 0.2)}) {
          const auto general =
              duc_hieu_general(PrincipalSeriesLabel::simple(j, tau), {j, j, m, m}, eps);
          const auto diag = diagonal_coefficient(j, m, tau, eps, exact).value;
          EXPECT_LT(rel(general, diag), 1e-9) << j << " " << m << " " << eps << " " << tau;
        }
      }
    }
  }
}

TEST(GeneralFormulaTest, OffDiagonalIsExactlyZero) {
  const auto label = PrincipalSeriesLabel::simple(3, 0.3);
  EXPECT_TRUE(duc_hieu_general(label, {3, 4, 1, 0}, 2.0).is_zero());
  EXPECT_TRUE(duc_hieu_general(label, {3, 3, -2, 2}, 0.5).is_zero());
}

TEST(GeneralFormulaTest, NonDiagonalSpins) {
  // j != j' with the same m: finite and independent of the sum order.
  const PrincipalSeriesLabel label{1, {0.5, 0.0}};
  const auto v = duc_hieu_general(label, {1, 2, 0, 0}, 2.0);
  EXPECT_FALSE(v.is_zero());
  EXPECT_TRUE(std::isfinite(v.log_mag()));
  EXPECT_THROW(duc_hieu_general(label, {1, 2, 2, 2}, 2.0), IndexError);
  EXPECT_THROW(duc_hieu_general({3, 0.0}, {1, 2, 0, 0}, 2.0), IndexError);
}

TEST(GeneralFormulaTest, AdmissiblePairs) {
  const auto pairs = admissible_pairs({1, 0.0}, {1, 1, 0, 0});
  // (j - m - d) >= 0, (j - k - d) >= 0, (k + m + d) >= 0 with k = j = 1, m = 0:
  // d in {0}, d' in {0}.
  ASSERT_EQ(pairs.size(), 1u);
  EXPECT_EQ(pairs[0], std::make_pair(0, 0));
}

TEST(RatioLimitTest, ClosedForms) {
  EXPECT_DOUBLE_EQ(diagonal_ratio_limit(2.0), 0.64);
  EXPECT_DOUBLE_EQ(top_track_ratio_limit(2.0), 0.16);
  for (double eps : {0.3, 1.7, 4.0}) {
    EXPECT_NEAR(diagonal_ratio_limit(eps), diagonal_ratio_limit(1.0 / eps), 1e-15);
    EXPECT_NEAR(top_track_ratio_limit(eps), top_track_ratio_limit(1.0 / eps), 1e-15);
  }
}

TEST(RatioTestTest, RealTauZeroMatchesPrediction) {
  const SeriesReport r = ratio_test(1, 0.0, 2.0, 200);
  ASSERT_TRUE(r.empirical_limit && r.predicted_limit);
  EXPECT_NEAR(*r.predicted_limit, 0.64, 1e-15);
  EXPECT_NEAR(*r.empirical_limit, 0.64, 0.02 * 0.64);
  EXPECT_EQ(r.verdict, Verdict::kConverged);
  EXPECT_EQ(r.terms.front().j, 1);
  EXPECT_EQ(r.terms.back().j, 200);
  EXPECT_FALSE(r.terms.back().ratio.has_value());
}

TEST(RatioTestTest, SpinZeroTermReportedSeparately) {
  const SeriesReport r = ratio_test(0, 0.0, 2.0, 40);
  ASSERT_TRUE(r.j0_term.has_value());
  EXPECT_EQ(r.terms.front().j, 1);
}

TEST(RatioTestTest, Preconditions) {
  EXPECT_THROW(ratio_test(0, 0.0, 1.0, 100), DomainError);
  EXPECT_THROW(ratio_test(5, 0.0, 2.0, 10), DomainError);
  EXPECT_THROW(boundary_ratio_test(BoundaryTrack::kMEqualsJ, 0.0, 2.0, 5), DomainError);
}

TEST(RatioTestTest, ThreadCountDoesNotChangeResults) {
  EvaluationPolicy one, four;
  four.threads = 4;
  const SeriesReport a = ratio_test(2, 0.3, 0.5, 90, one);
  const SeriesReport b = ratio_test(2, 0.3, 0.5, 90, four);
  ASSERT_EQ(a.terms.size(), b.terms.size());
  for (std::size_t i = 0; i < a.terms.size(); ++i) {
    EXPECT_EQ(a.terms[i].value.log_mag(), b.terms[i].value.log_mag());
    EXPECT_EQ(a.terms[i].value.phase(), b.terms[i].value.phase());
  }
}

TEST(BoundaryTrackTest, MEqualsZeroTrackNearPrediction) {
  const SeriesReport r = boundary_ratio_test(BoundaryTrack::kMEqualsZero, 0.0, 2.0, 200);
  ASSERT_TRUE(r.empirical_limit);
  EXPECT_NEAR(*r.predicted_limit, 0.64, 1e-15);
  EXPECT_NEAR(*r.empirical_limit, 0.64, 0.03 * 0.64);
}

}  // namespace
}  // namespace lh
