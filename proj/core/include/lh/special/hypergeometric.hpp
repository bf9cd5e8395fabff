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

#ifndef LH_SPECIAL_HYPERGEOMETRIC_HPP_
#define LH_SPECIAL_HYPERGEOMETRIC_HPP_

#include <complex>
#include <string_view>

#include "lh/special/log_complex.hpp"

namespace lh {

struct Hyp2F1Params {
  std::complex<double> a;
  std::complex<double> b;
  std::complex<double> c;
  double z = 0.0;
};

struct Hyp2F1Options {
  int max_terms = 100000;
  // Direct series stop once the tail bound drops below this fraction of |sum|.
  double tail_tolerance = 1e-17;
  // Estimated relative error accepted without trying a fallback method.
  double target_error = 1e-10;
  // Estimated relative error above which evaluation fails.
  double reject_error = 1e-6;
};

enum class Hyp2F1Method {
  kTrivial,        // z == 0
  kDirect,         // Gauss series at z
  kPfaffDirect,    // Pfaff transform, series at z/(z-1)
  kConnection,     // 1 - z connection formula (after Pfaff when z < 0)
  kMappedSeries,   // Gauss series at the mapped argument beyond 1/2
  kContour,        // Euler integral on a deformed contour
};

std::string_view to_string(Hyp2F1Method method);

struct Hyp2F1Result {
  LogComplexValue value;
  Hyp2F1Method method = Hyp2F1Method::kTrivial;
  int terms = 0;               // series terms or integrand evaluations
  double error_estimate = 0.0; // relative
};

// Gauss hypergeometric 2F1(a, b; c; z) for real z < 1.
//
// Throws DomainError for z >= 1 or c in {0, -1, -2, ...}, and
// NonConvergenceError when no method reaches options.reject_error.
Hyp2F1Result hyp2f1_detailed(const Hyp2F1Params& p, const Hyp2F1Options& options = {});

LogComplexValue hyp2f1(const Hyp2F1Params& p, const Hyp2F1Options& options = {});

namespace detail {

struct SeriesOutcome {
  LogComplexValue value;
  int terms = 0;
  bool converged = false;
  double error_estimate = 0.0;
};

// Gauss series at |x| < 1 with running rescaling; never overflows.
SeriesOutcome gauss_series(std::complex<double> a, std::complex<double> b,
                           std::complex<double> c, double x, int max_terms,
                           double tail_tolerance);

struct ContourOutcome {
  LogComplexValue value;
  int evaluations = 0;
  double error_estimate = 0.0;
};

// Euler integral Gamma(c)/(Gamma(b)Gamma(c-b)) int_0^1 t^{b-1} (1-t)^{c-b-1}
// (1-zt)^{-a} dt for real b, c with c > b > 0 and real z < 1. The path is
// pushed through the saddle points of the integrand into the complex plane.
ContourOutcome euler_contour(std::complex<double> a, double b, double c, double z);

}  // namespace detail
}  // namespace lh

#endif  // LH_SPECIAL_HYPERGEOMETRIC_HPP_
