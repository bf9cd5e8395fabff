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

#ifndef LH_IO_JSON_HPP_
#define LH_IO_JSON_HPP_

#include <complex>

#include <nlohmann/json.hpp>

#include "lh/expansion/expansion.hpp"
#include "lh/lie/cartan.hpp"
#include "lh/lie/group.hpp"
#include "lh/principal/principal_series.hpp"
#include "lh/series_report.hpp"
#include "lh/special/log_complex.hpp"
#include "lh/wigner/su2_fourier.hpp"
#include "lh/ymap/ymap.hpp"

namespace lh {

using Json = nlohmann::json;

// Group elements: 8 reals, row-major, re/im interleaved.
Json to_json(const Matrix2c& m);
Matrix2c matrix_from_json(const Json& j);
Json to_json(const SL2CElement& g);
SL2CElement sl2c_from_json(const Json& j, double tol = kGroupTolerance);
Json to_json(const SU2Element& u);
SU2Element su2_from_json(const Json& j, double tol = kGroupTolerance);
Json to_json(const CartanFactors& f);

// {"log_mag": x, "phase": y}; a zero value has log_mag null.
Json to_json(const LogComplexValue& v);
LogComplexValue log_complex_from_json(const Json& j);

Json complex_to_json(std::complex<double> z);
std::complex<double> complex_from_json(const Json& j);

// {p, band_limit, entries: [{twice_j, twice_m, re, im}]}
Json to_json(const FourierTableSU2& t);
FourierTableSU2 fourier_table_from_json(const Json& j);

// {m, entries: [{j, re, im}]}
Json to_json(const CoefficientTable& t);
CoefficientTable coefficient_table_from_json(const Json& j);

// {params, terms: [{j, log_mag, phase, ratio, ...}], predicted_limit,
//  empirical_limit, relative_deviation, verdict, ...}
Json to_json(const SeriesReport& r);
SeriesReport series_report_from_json(const Json& j);

Json to_json(const CoefficientValue& v);
Json to_json(const NormIdentityResult& r);
Json to_json(const DivergenceReport& r);
Json to_json(const PaleyWienerReport& r);
Json to_json(const YMapConvergenceReport& r);

}  // namespace lh

#endif  // LH_IO_JSON_HPP_
