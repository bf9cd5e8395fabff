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

#ifndef LH_SPECIAL_WATSON_HPP_
#define LH_SPECIAL_WATSON_HPP_

#include <complex>

#include "lh/special/log_complex.hpp"

namespace lh {

// Branch of log(x) taken for negative real arguments: log|x| + i*sign*pi.
enum class AsymptoticBranch { kMinus, kPlus };

// Leading large-j term of 2F1(j+1+i tau j/2, m+j+1; 2j+2; 1-eps^4), from the
// large-parameter expansion in which a and c grow together. Evaluated in
// log space. Throws DomainError at eps == 1 or eps <= 0, IndexError for
// |m| > j or j < 1.
LogComplexValue watson_asymptotic_2f1(int j, int m, std::complex<double> tau, double epsilon,
                                      AsymptoticBranch branch = AsymptoticBranch::kMinus);

}  // namespace lh

#endif  // LH_SPECIAL_WATSON_HPP_
