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

#include "lh/wigner/su2_fourier.hpp"

#include <cmath>
#include <limits>

#include "lh/errors.hpp"
#include "lh/special/compensated_sum.hpp"
#include "lh/wigner/wigner.hpp"

namespace lh {

namespace {

using cplx = std::complex<double>;

// Relative resolution of a double-precision quadrature against ||phi||_2.
constexpr double kNoiseFactor = 1e3 * std::numeric_limits<double>::epsilon();

struct SampledFunction {
  QuadratureGrid grid;
  std::vector<cplx> values;  // alpha outermost, then beta, then gamma
  double l2_norm_squared = 0.0;
};

SampledFunction sample(const SU2Function& phi, int band_limit, const FourierOptions& options) {
  if (band_limit < 0) throw DomainError("su2_fourier: negative band limit");
  const int grid_band = options.grid_twice_band.value_or(band_limit);
  if (grid_band < band_limit && options.warnings != nullptr) {
    options.warnings->push_back("quadrature grid band " + std::to_string(grid_band) +
                                " is below the transform band " + std::to_string(band_limit) +
                                "; coefficients may be under-resolved");
  }
  SampledFunction s{QuadratureGrid(grid_band), {}, 0.0};
  const auto& al = s.grid.alphas();
  const auto& be = s.grid.betas();
  const auto& ga = s.grid.gammas();
  s.values.resize(s.grid.size());
  NeumaierSum norm;
  std::size_t idx = 0;
  for (std::size_t ia = 0; ia < al.size(); ++ia) {
    for (std::size_t ib = 0; ib < be.size(); ++ib) {
      const double w = s.grid.alpha_weight() * s.grid.beta_weights()[ib] * s.grid.gamma_weight();
      for (std::size_t ig = 0; ig < ga.size(); ++ig, ++idx) {
        const cplx v = phi(SU2Element::from_euler(al[ia], be[ib], ga[ig]));
        s.values[idx] = v;
        norm.add(w * std::norm(v));
      }
    }
  }
  s.l2_norm_squared = norm.value();
  return s;
}

// Coefficients (twice_j, twice_m) -> (j+1)^{1/2} int phi conj(D_{row, m}) for
// one signed row, using the separable structure of D in alpha and gamma.
std::map<std::pair<int, int>, cplx> transform_row(const SampledFunction& s, int twice_row,
                                                  int band_limit) {
  const auto& al = s.grid.alphas();
  const auto& be = s.grid.betas();
  const auto& ga = s.grid.gammas();
  const std::size_t na = al.size();
  const std::size_t nb = be.size();
  const std::size_t ng = ga.size();
  const int abs_row = std::abs(twice_row);

  // A[ib][ig] = sum_alpha w_alpha phi exp(i row alpha / 2)
  std::vector<cplx> alpha_sum(nb * ng, 0.0);
  for (std::size_t ia = 0; ia < na; ++ia) {
    const cplx phase = std::polar(s.grid.alpha_weight(), 0.5 * twice_row * al[ia]);
    const cplx* row = &s.values[ia * nb * ng];
    for (std::size_t k = 0; k < nb * ng; ++k) alpha_sum[k] += phase * row[k];
  }

  std::map<std::pair<int, int>, cplx> out;
  for (int twice_m = -band_limit; twice_m <= band_limit; ++twice_m) {
    if ((twice_m - abs_row) % 2 != 0) continue;
    // G[ib] = sum_gamma w_gamma A[ib][ig] exp(i m gamma / 2)
    std::vector<cplx> g(nb, 0.0);
    for (std::size_t ig = 0; ig < ng; ++ig) {
      const cplx phase = std::polar(s.grid.gamma_weight(), 0.5 * twice_m * ga[ig]);
      for (std::size_t ib = 0; ib < nb; ++ib) g[ib] += phase * alpha_sum[ib * ng + ig];
    }
    const int j_start = std::max(abs_row, std::abs(twice_m));
    for (int twice_j = j_start; twice_j <= band_limit; twice_j += 2) {
      ComplexNeumaierSum acc;
      for (std::size_t ib = 0; ib < nb; ++ib) {
        const double d = wigner_small_d(SpinLabel{twice_j}, twice_row, twice_m, be[ib]);
        acc.add(s.grid.beta_weights()[ib] * d * g[ib]);
      }
      out[{twice_j, twice_m}] = std::sqrt(twice_j + 1.0) * acc.value();
    }
  }
  return out;
}

}  // namespace

cplx FourierTableSU2::at(int twice_j, int twice_m) const {
  auto it = entries.find({twice_j, twice_m});
  return it == entries.end() ? cplx(0.0, 0.0) : it->second;
}

double FourierTableSU2::abs_sum() const {
  NeumaierSum total;
  for (const auto& [key, value] : entries) total.add(std::abs(value));
  return total.value();
}

cplx SU2Spectrum::at(int twice_j, int twice_row, int twice_m) const {
  auto it = entries.find({twice_j, twice_row, twice_m});
  return it == entries.end() ? cplx(0.0, 0.0) : it->second;
}

double SU2Spectrum::coefficient_norm_squared() const {
  NeumaierSum total;
  for (const auto& [key, value] : entries) total.add(std::norm(value));
  return total.value();
}

FourierTableSU2 su2_fourier(const SU2Function& phi, int p, int band_limit,
                            const FourierOptions& options) {
  const SampledFunction s = sample(phi, band_limit, options);
  FourierTableSU2 table;
  table.p = p;
  table.band_limit = band_limit;
  table.resolution = kNoiseFactor * std::sqrt(s.l2_norm_squared);
  const int row = std::abs(p);
  if (row <= band_limit) table.entries = transform_row(s, row, band_limit);
  return table;
}

SU2Spectrum su2_fourier_spectrum(const SU2Function& phi, int band_limit,
                                 const FourierOptions& options) {
  const SampledFunction s = sample(phi, band_limit, options);
  SU2Spectrum spectrum;
  spectrum.band_limit = band_limit;
  spectrum.l2_norm_squared = s.l2_norm_squared;
  for (int row = -band_limit; row <= band_limit; ++row) {
    for (const auto& [key, value] : transform_row(s, row, band_limit)) {
      spectrum.entries[{key.first, row, key.second}] = value;
    }
  }
  return spectrum;
}

cplx su2_synthesize(const SU2Spectrum& spectrum, const SU2Element& u) {
  ComplexNeumaierSum total;
  for (const auto& [key, value] : spectrum.entries) {
    const auto [twice_j, twice_row, twice_m] = key;
    total.add(std::sqrt(twice_j + 1.0) * value * wigner_D(SpinLabel{twice_j}, twice_row, twice_m, u));
  }
  return total.value();
}

cplx su2_synthesize(const FourierTableSU2& table, const SU2Element& u) {
  ComplexNeumaierSum total;
  for (const auto& [key, value] : table.entries) {
    total.add(std::sqrt(key.first + 1.0) * value *
              wigner_D(SpinLabel{key.first}, table.twice_row(), key.second, u));
  }
  return total.value();
}

PaleyWienerReport paley_wiener_report(const FourierTableSU2& table, const std::vector<int>& powers) {
  PaleyWienerReport report;
  report.p = table.p;
  report.band_limit = table.band_limit;
  report.noise_floor = table.resolution;
  report.powers = powers;
  for (int n : powers) {
    if (n < 0) throw DomainError("paley_wiener_report: powers must be non-negative");
  }

  const int row = table.twice_row();
  std::vector<PaleyWienerRow> series;  // every admissible spin, floored
  for (int twice_j = row; twice_j <= table.band_limit; twice_j += 2) {
    double sup = 0.0;
    for (int twice_m = -twice_j; twice_m <= twice_j; twice_m += 2) {
      sup = std::max(sup, std::abs(table.at(twice_j, twice_m)));
    }
    if (sup <= report.noise_floor) sup = 0.0;
    PaleyWienerRow r{twice_j, sup, {}};
    const double k = 0.5 * twice_j;
    for (int n : powers) r.weighted.push_back(sup * std::pow(k, n));
    series.push_back(r);
    if (sup > 0.0) report.rows.push_back(r);
  }

  const int half = (table.band_limit + 1) / 2;
  for (std::size_t i = 0; i < powers.size(); ++i) {
    bool ok = true;
    const PaleyWienerRow* prev = nullptr;
    for (const auto& r : series) {
      if (r.twice_j < half) continue;
      if (prev != nullptr && r.weighted[i] > prev->weighted[i]) ok = false;
      prev = &r;
    }
    report.non_increasing_top_half.push_back(ok);
  }
  return report;
}

}  // namespace lh
