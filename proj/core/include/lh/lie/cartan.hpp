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

#ifndef LH_LIE_CARTAN_HPP_
#define LH_LIE_CARTAN_HPP_

#include "lh/lie/group.hpp"

namespace lh {

// g = u1 diag(1/epsilon, epsilon) u2 with epsilon >= 1.
struct CartanFactors {
  SU2Element u1;
  double epsilon = 1.0;
  SU2Element u2;

  Matrix2c recompose() const;
};

// Phase convention: the first column of u1 (the singular direction of
// 1/epsilon) has its first nonzero component real positive; u2 absorbs the
// rest. At epsilon == 1, u2 is the identity and u1 is g projected to SU(2).
CartanFactors cartan_decompose(const SL2CElement& g);

// Larger singular value of g.
double epsilon_of(const SL2CElement& g);

}  // namespace lh

#endif  // LH_LIE_CARTAN_HPP_
