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

#include "lh/lie/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "lh/errors.hpp"

namespace lh {

GaussLegendreRule gauss_legendre(int n) {
  if (n < 1) throw DomainError("gauss_legendre: need at least one node");
  GaussLegendreRule rule;
  rule.nodes.assign(n, 0.0);
  rule.weights.assign(n, 0.0);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Tricomi initial guess, then Newton on P_n.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 1.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) <= 1e-16 * std::abs(x) + 1e-300) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

QuadratureGrid::QuadratureGrid(int twice_band_limit) : twice_band_limit_(twice_band_limit) {
  if (twice_band_limit < 0) throw DomainError("haar_quadrature_su2: negative band limit");
  const int n_angle = 2 * twice_band_limit + 2;
  const int n_beta = twice_band_limit + 1;
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  alphas_.resize(n_angle);
  gammas_.resize(n_angle);
  for (int k = 0; k < n_angle; ++k) {
    alphas_[k] = kTwoPi * k / n_angle;
    gammas_[k] = 2.0 * kTwoPi * k / n_angle;
  }
  const GaussLegendreRule rule = gauss_legendre(n_beta);
  betas_.resize(n_beta);
  beta_weights_.resize(n_beta);
  for (int k = 0; k < n_beta; ++k) {
    betas_[k] = std::acos(rule.nodes[k]);
    beta_weights_[k] = 0.5 * rule.weights[k];
  }
}

QuadratureNode QuadratureGrid::node(std::size_t index) const {
  const std::size_t ng = gammas_.size();
  const std::size_t nb = betas_.size();
  const std::size_t ig = index % ng;
  const std::size_t ib = (index / ng) % nb;
  const std::size_t ia = index / (ng * nb);
  return {SU2Element::from_euler(alphas_[ia], betas_[ib], gammas_[ig]),
          alpha_weight() * beta_weights_[ib] * gamma_weight()};
}

std::vector<QuadratureNode> QuadratureGrid::nodes() const {
  std::vector<QuadratureNode> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.push_back(node(i));
  return out;
}

QuadratureGrid haar_quadrature_su2(int twice_band_limit) { return QuadratureGrid(twice_band_limit); }

}  // namespace lh
