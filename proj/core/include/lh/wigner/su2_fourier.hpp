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

#ifndef LH_WIGNER_SU2_FOURIER_HPP_
#define LH_WIGNER_SU2_FOURIER_HPP_

#include <complex>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "lh/lie/group.hpp"
#include "lh/lie/quadrature.hpp"

namespace lh {

using SU2Function = std::function<std::complex<double>(const SU2Element&)>;

// Fourier coefficients d^{j/2}_{|p|/2, m/2} = (j+1)^{1/2} int phi conj(D) du of
// one row of the SU(2) transform. Keys are (twice_j, twice_m); the row index
// is twice_row = |p|. Missing keys read as zero.
struct FourierTableSU2 {
  int p = 0;
  int band_limit = 0;  // largest twice_j stored
  std::map<std::pair<int, int>, std::complex<double>> entries;
  // Absolute level below which entries are quadrature noise; 0 if unknown.
  double resolution = 0.0;

  int twice_row() const { return p < 0 ? -p : p; }
  std::complex<double> at(int twice_j, int twice_m) const;
  // Sum of |d| over all entries.
  double abs_sum() const;
};

struct FourierOptions {
  // Band of the quadrature grid; defaults to the transform band.
  std::optional<int> grid_twice_band;
  // Filled with a message when the grid band is below the transform band.
  std::vector<std::string>* warnings = nullptr;
};

FourierTableSU2 su2_fourier(const SU2Function& phi, int p, int band_limit,
                            const FourierOptions& options = {});

// All rows at once: keys (twice_j, twice_row, twice_m).
struct SU2Spectrum {
  int band_limit = 0;
  std::map<std::tuple<int, int, int>, std::complex<double>> entries;
  double l2_norm_squared = 0.0;  // quadrature of |phi|^2

  std::complex<double> at(int twice_j, int twice_row, int twice_m) const;
  double coefficient_norm_squared() const;
};

SU2Spectrum su2_fourier_spectrum(const SU2Function& phi, int band_limit,
                                 const FourierOptions& options = {});

// phi(u) = sum (twice_j + 1)^{1/2} d D(u).
std::complex<double> su2_synthesize(const SU2Spectrum& spectrum, const SU2Element& u);
std::complex<double> su2_synthesize(const FourierTableSU2& table, const SU2Element& u);

struct PaleyWienerRow {
  int twice_j = 0;
  double sup_abs = 0.0;          // sup over m of |d|
  std::vector<double> weighted;  // sup_abs * (twice_j/2)^n per requested power
};

struct PaleyWienerReport {
  int p = 0;
  int band_limit = 0;
  double noise_floor = 0.0;
  std::vector<int> powers;
  // Only spins with a resolved (above noise floor) coefficient appear.
  std::vector<PaleyWienerRow> rows;
  // Per power: sup|d| (j/2)^n is non-increasing over the upper half of the
  // band, with unresolved coefficients read as zero.
  std::vector<bool> non_increasing_top_half;
};

PaleyWienerReport paley_wiener_report(const FourierTableSU2& table, const std::vector<int>& powers);

}  // namespace lh

#endif  // LH_WIGNER_SU2_FOURIER_HPP_
