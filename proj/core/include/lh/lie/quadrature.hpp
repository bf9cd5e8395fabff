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

#ifndef LH_LIE_QUADRATURE_HPP_
#define LH_LIE_QUADRATURE_HPP_

#include <cstddef>
#include <vector>

#include "lh/lie/group.hpp"

namespace lh {

struct GaussLegendreRule {
  std::vector<double> nodes;    // ascending in (-1, 1)
  std::vector<double> weights;  // sum to 2
};

GaussLegendreRule gauss_legendre(int n);

struct QuadratureNode {
  SU2Element u;
  double weight = 0.0;
};

// Tensor-product rule for normalized Haar measure on SU(2): uniform alpha on
// [0, 2 pi), uniform gamma on [0, 4 pi), Gauss-Legendre in cos(beta).
// Products of two Wigner entries of spin at most twice_band_limit/2 are
// integrated exactly.
class QuadratureGrid {
 public:
  explicit QuadratureGrid(int twice_band_limit);

  int twice_band_limit() const { return twice_band_limit_; }
  const std::vector<double>& alphas() const { return alphas_; }
  const std::vector<double>& betas() const { return betas_; }
  const std::vector<double>& gammas() const { return gammas_; }
  // Weight of the beta node; alpha and gamma weights are uniform.
  const std::vector<double>& beta_weights() const { return beta_weights_; }
  double alpha_weight() const { return 1.0 / static_cast<double>(alphas_.size()); }
  double gamma_weight() const { return 1.0 / static_cast<double>(gammas_.size()); }

  std::size_t size() const { return alphas_.size() * betas_.size() * gammas_.size(); }
  // Flat index order: alpha outermost, then beta, then gamma.
  QuadratureNode node(std::size_t index) const;
  std::vector<QuadratureNode> nodes() const;

 private:
  int twice_band_limit_;
  std::vector<double> alphas_;
  std::vector<double> betas_;
  std::vector<double> beta_weights_;
  std::vector<double> gammas_;
};

QuadratureGrid haar_quadrature_su2(int twice_band_limit);

}  // namespace lh

#endif  // LH_LIE_QUADRATURE_HPP_
