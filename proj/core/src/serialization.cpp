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

#include "lh/io/json.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "lh/errors.hpp"

namespace lh {

namespace {

using cplx = std::complex<double>;

Json number(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

Json optional_number(const std::optional<double>& x) {
  return x ? number(*x) : Json(nullptr);
}

std::optional<double> read_optional(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<double>();
}

}  // namespace

Json to_json(const Matrix2c& m) {
  Json out = Json::array();
  for (double v : m.to_reals()) out.push_back(v);
  return out;
}

Matrix2c matrix_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 8) {
    throw DomainError("group element must be an array of 8 real numbers");
  }
  std::array<double, 8> v{};
  for (std::size_t i = 0; i < 8; ++i) v[i] = j.at(i).get<double>();
  return Matrix2c::from_reals(v);
}

Json to_json(const SL2CElement& g) { return to_json(g.matrix()); }

SL2CElement sl2c_from_json(const Json& j, double tol) {
  return SL2CElement::from_matrix(matrix_from_json(j), tol);
}

Json to_json(const SU2Element& u) { return to_json(u.matrix()); }

SU2Element su2_from_json(const Json& j, double tol) {
  return SU2Element::from_matrix(matrix_from_json(j), tol);
}

Json to_json(const CartanFactors& f) {
  return {{"u1", to_json(f.u1)}, {"epsilon", f.epsilon}, {"u2", to_json(f.u2)}};
}

Json to_json(const LogComplexValue& v) {
  return {{"log_mag", number(v.log_mag())}, {"phase", v.phase()}};
}

LogComplexValue log_complex_from_json(const Json& j) {
  if (j.at("log_mag").is_null()) return LogComplexValue::zero();
  return {j.at("log_mag").get<double>(), j.at("phase").get<double>()};
}

Json complex_to_json(cplx z) { return {{"re", number(z.real())}, {"im", number(z.imag())}}; }

cplx complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2) return {j.at(0).get<double>(), j.at(1).get<double>()};
  return {j.at("re").get<double>(), j.value("im", 0.0)};
}

Json to_json(const FourierTableSU2& t) {
  Json entries = Json::array();
  for (const auto& [key, value] : t.entries) {
    entries.push_back({{"twice_j", key.first},
                       {"twice_m", key.second},
                       {"re", value.real()},
                       {"im", value.imag()}});
  }
  Json out = {{"p", t.p}, {"band_limit", t.band_limit}, {"entries", entries}};
  if (t.resolution > 0.0) out["resolution"] = t.resolution;
  return out;
}

FourierTableSU2 fourier_table_from_json(const Json& j) {
  FourierTableSU2 t;
  t.p = j.at("p").get<int>();
  t.band_limit = j.at("band_limit").get<int>();
  t.resolution = j.value("resolution", 0.0);
  const int row = t.twice_row();
  for (const auto& e : j.at("entries")) {
    const int tj = e.at("twice_j").get<int>();
    const int tm = e.at("twice_m").get<int>();
    if (tj < row || tj > t.band_limit || std::abs(tm) > tj || (tj - tm) % 2 != 0 ||
        (tj - row) % 2 != 0) {
      throw IndexError("Fourier table entry (" + std::to_string(tj) + ", " + std::to_string(tm) +
                       ") is outside the table's index range");
    }
    t.entries[{tj, tm}] = {e.at("re").get<double>(), e.value("im", 0.0)};
  }
  return t;
}

Json to_json(const CoefficientTable& t) {
  Json entries = Json::array();
  for (const auto& [j, value] : t.entries) {
    entries.push_back({{"j", j}, {"re", value.real()}, {"im", value.imag()}});
  }
  return {{"m", t.m}, {"entries", entries}};
}

CoefficientTable coefficient_table_from_json(const Json& j) {
  CoefficientTable t;
  t.m = j.at("m").get<int>();
  for (const auto& e : j.at("entries")) {
    t.entries[e.at("j").get<int>()] = {e.at("re").get<double>(), e.value("im", 0.0)};
  }
  return t;
}

Json to_json(const SeriesReport& r) {
  Json terms = Json::array();
  for (const auto& t : r.terms) {
    Json term = {{"j", t.j},
                 {"log_mag", number(t.value.log_mag())},
                 {"phase", t.value.phase()},
                 {"ratio", optional_number(t.ratio)}};
    if (t.partial_sum) term["partial_sum"] = complex_to_json(*t.partial_sum);
    if (!t.path.empty()) term["path"] = t.path;
    terms.push_back(term);
  }
  Json out = {{"kind", r.kind},
              {"params", r.params},
              {"terms", terms},
              {"predicted_limit", optional_number(r.predicted_limit)},
              {"empirical_limit", optional_number(r.empirical_limit)},
              {"relative_deviation", optional_number(r.relative_deviation)},
              {"comparison", r.comparison_informational ? "informational" : "asserted"},
              {"verdict", std::string(to_string(r.verdict))},
              {"cauchy_delta", optional_number(r.cauchy_delta)},
              {"notes", r.notes}};
  out["j0_term"] = r.j0_term ? to_json(*r.j0_term) : Json(nullptr);
  return out;
}

SeriesReport series_report_from_json(const Json& j) {
  SeriesReport r;
  r.kind = j.value("kind", "");
  r.params = j.value("params", Json::object());
  for (const auto& t : j.at("terms")) {
    SeriesTerm term;
    term.j = t.at("j").get<int>();
    term.value = log_complex_from_json(t);
    if (t.contains("ratio") && !t.at("ratio").is_null()) term.ratio = t.at("ratio").get<double>();
    if (t.contains("partial_sum")) term.partial_sum = complex_from_json(t.at("partial_sum"));
    term.path = t.value("path", "");
    r.terms.push_back(term);
  }
  r.predicted_limit = read_optional(j, "predicted_limit");
  r.empirical_limit = read_optional(j, "empirical_limit");
  r.relative_deviation = read_optional(j, "relative_deviation");
  r.comparison_informational = j.value("comparison", "asserted") == "informational";
  r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
  r.cauchy_delta = read_optional(j, "cauchy_delta");
  if (j.contains("j0_term") && !j.at("j0_term").is_null()) {
    r.j0_term = log_complex_from_json(j.at("j0_term"));
  }
  r.notes = j.value("notes", std::vector<std::string>{});
  return r;
}

Json to_json(const CoefficientValue& v) {
  Json out = to_json(v.value);
  out["path"] = std::string(to_string(v.path));
  out["error_estimate"] = number(v.error_estimate);
  out["method"] = v.path == EvaluationPath::kExact ? std::string(to_string(v.method)) : "watson";
  if (auto z = v.value.try_to_complex()) {
    out["value"] = complex_to_json(*z);
  } else {
    out["value"] = nullptr;
  }
  return out;
}

Json to_json(const NormIdentityResult& r) {
  return {{"kind", "norm_identity"},
          {"tau", complex_to_json(r.tau)},
          {"j_max", r.j_max},
          {"computed", complex_to_json(r.computed)},
          {"target", complex_to_json(r.target)},
          {"deviation", number(r.deviation)},
          {"tail_bound", number(r.tail_bound)},
          {"within_budget", r.within_budget}};
}

Json to_json(const DivergenceReport& r) {
  Json increments = Json::array();
  for (const auto& inc : r.increments) {
    increments.push_back({{"from", inc.from},
                          {"to", inc.to},
                          {"increment", complex_to_json(inc.increment)},
                          {"model", complex_to_json(inc.model)},
                          {"relative_deviation", number(inc.relative_deviation)}});
  }
  Json sums = Json::array();
  for (std::size_t i = 0; i < r.checkpoints.size(); ++i) {
    sums.push_back({{"j", r.checkpoints[i]}, {"partial_sum", complex_to_json(r.partial_sums[i])}});
  }
  return {{"kind", "divergence"},
          {"tau", complex_to_json(r.tau)},
          {"partial_sums", sums},
          {"increments", increments},
          {"model_tolerance", r.model_tolerance},
          {"verdict", std::string(to_string(r.verdict))}};
}

Json to_json(const PaleyWienerReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"twice_j", row.twice_j}, {"sup_abs", row.sup_abs}, {"weighted", row.weighted}});
  }
  std::vector<bool> flags(r.non_increasing_top_half.begin(), r.non_increasing_top_half.end());
  return {{"kind", "paley_wiener"},
          {"p", r.p},
          {"band_limit", r.band_limit},
          {"noise_floor", r.noise_floor},
          {"powers", r.powers},
          {"rows", rows},
          {"non_increasing_top_half", flags}};
}

Json to_json(const YMapConvergenceReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checkpoints) {
    checks.push_back({{"j", c.j},
                      {"partial_sum_abs", number(c.partial_sum_abs)},
                      {"bound", number(c.bound)},
                      {"holds", c.holds}});
  }
  return {{"kind", "ymap_convergence"},
          {"epsilon", r.epsilon},
          {"fourier_sum_bound", number(r.fourier_sum_bound)},
          {"fourier_verdict", std::string(to_string(r.fourier_verdict))},
          {"coefficient_sum_bound", number(r.coefficient_sum_bound)},
          {"coefficient_verdict", std::string(to_string(r.coefficient_verdict))},
          {"product_bound", number(r.product_bound)},
          {"majorization_holds", r.majorization_holds},
          {"bound_verdict", std::string(to_string(r.bound_verdict))},
          {"checkpoints", checks},
          {"verdict", std::string(to_string(r.verdict))}};
}

}  // namespace lh
