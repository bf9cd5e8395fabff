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

#include "lh/ymap/ymap.hpp"

#include <cmath>
#include <string>

#include "lh/errors.hpp"
#include "lh/lie/cartan.hpp"
#include "lh/parallel.hpp"
#include "lh/special/compensated_sum.hpp"

namespace lh {

namespace {

using cplx = std::complex<double>;

nlohmann::json request_params(const YMapRequest& req, double epsilon) {
  return {{"p", req.table.p},
          {"band_limit", req.table.band_limit},
          {"tau", {{"re", req.tau.real()}, {"im", req.tau.imag()}}},
          {"epsilon", epsilon},
          {"j_max", req.j_max},
          {"cauchy_tolerance", req.cauchy_tolerance},
          {"cauchy_window", req.cauchy_window}};
}

void check_request(const YMapRequest& req) {
  if (req.j_max < req.table.twice_row()) throw DomainError("ymap: j_max must be at least |p|");
  if (!(req.cauchy_tolerance > 0.0) || req.cauchy_window < 1) {
    throw DomainError("ymap: invalid Cauchy settings");
  }
}

std::vector<double> ratios_of(const std::vector<SeriesTerm>& terms) {
  std::vector<double> out;
  for (const auto& t : terms) {
    if (t.ratio) out.push_back(*t.ratio);
  }
  return out;
}

void fill_ratios(std::vector<SeriesTerm>& terms) {
  for (std::size_t i = 0; i + 1 < terms.size(); ++i) {
    if (!terms[i].value.is_zero() && !terms[i + 1].value.is_zero()) {
      terms[i].ratio = std::exp(terms[i + 1].value.log_mag() - terms[i].value.log_mag());
    }
  }
}

}  // namespace

double YMapRequest::epsilon() const {
  if (const auto* g = std::get_if<SL2CElement>(&target)) return epsilon_of(*g);
  const double eps = std::get<double>(target);
  if (!(eps > 0.0) || !std::isfinite(eps)) throw DomainError("ymap: epsilon must be positive");
  return eps;
}

SeriesReport ymap_apply(const YMapRequest& req) {
  check_request(req);
  const double eps = req.epsilon();
  const int j0 = req.table.twice_row();
  SeriesReport report;
  report.kind = "ymap";
  report.params = request_params(req, eps);
  const std::size_t count = static_cast<std::size_t>(req.j_max - j0 + 1);
  report.terms.resize(count);
  parallel_for(count, req.policy.threads, [&](std::size_t i) {
    const int j = j0 + static_cast<int>(i);
    LogComplexValue term;
    std::string path;
    for (int m = -j; m <= j; ++m) {
      const cplx d = req.table.at(j, m);
      if (d == cplx(0.0, 0.0)) continue;
      const CoefficientValue c = diagonal_coefficient(j, m, req.tau, eps, req.policy);
      term += LogComplexValue::from_complex(d) * c.value;
      path = std::string(to_string(c.path));
    }
    report.terms[i] = SeriesTerm{j, term, std::nullopt, std::nullopt, path};
  });
  ComplexNeumaierSum sum;
  std::vector<cplx> partial;
  for (auto& t : report.terms) {
    const auto v = t.value.try_to_complex();
    if (!v) throw NumericalError("ymap term at j = " + std::to_string(t.j) + " overflows");
    sum.add(*v);
    t.partial_sum = sum.value();
    partial.push_back(sum.value());
  }
  fill_ratios(report.terms);
  report.empirical_limit = tail_ratio(ratios_of(report.terms));
  double delta = 0.0;
  report.verdict = cauchy_verdict(partial, ratios_of(report.terms),
                                  {req.cauchy_tolerance, req.cauchy_window}, &delta);
  if (std::isfinite(delta)) report.cauchy_delta = delta;
  if (req.table.band_limit < req.j_max) {
    report.notes.push_back("table band " + std::to_string(req.table.band_limit) +
                           " is below j_max; higher terms use the zero extension of the table");
  }
  if (eps == 1.0) {
    report.verdict = Verdict::kInconclusive;
    report.notes.push_back("epsilon = 1: convergence verdicts are not defined");
  }
  return report;
}

YMapConvergenceReport ymap_convergence_report(const YMapRequest& req) {
  check_request(req);
  const double eps = req.epsilon();
  const int j0 = req.table.twice_row();
  const CauchySettings cauchy{req.cauchy_tolerance, req.cauchy_window};
  YMapConvergenceReport out;
  out.epsilon = eps;

  // Fourier factor: cumulative sum of |d| by spin.
  {
    NeumaierSum sum;
    std::vector<cplx> partial;
    for (int j = j0; j <= std::max(req.j_max, req.table.band_limit); ++j) {
      for (int m = -j; m <= j; ++m) sum.add(std::abs(req.table.at(j, m)));
      partial.push_back(sum.value());
    }
    out.fourier_sum_bound = sum.value();
    out.fourier_verdict = cauchy_verdict(partial, {}, cauchy);
  }

  // Coefficient factor: sum_j |sum_m D_{jm}|.
  std::vector<std::pair<int, int>> index;
  for (int j = j0; j <= req.j_max; ++j) {
    for (int m = -j; m <= j; ++m) index.emplace_back(j, m);
  }
  std::vector<LogComplexValue> values(index.size());
  parallel_for(index.size(), req.policy.threads, [&](std::size_t i) {
    values[i] = diagonal_coefficient(index[i].first, index[i].second, req.tau, eps, req.policy).value;
  });
  SeriesReport& coeff = out.coefficient_series;
  coeff.kind = "ymap_coefficient_bound";
  coeff.params = request_params(req, eps);
  std::size_t pos = 0;
  NeumaierSum bound;
  std::vector<cplx> bound_partial;
  for (int j = j0; j <= req.j_max; ++j) {
    LogComplexValue block;
    for (int m = -j; m <= j; ++m, ++pos) block += values[pos];
    const LogComplexValue magnitude(block.log_mag(), 0.0);
    const auto v = magnitude.try_to_complex();
    if (!v) throw NumericalError("coefficient block overflows at j = " + std::to_string(j));
    bound.add(v->real());
    bound_partial.push_back(bound.value());
    coeff.terms.push_back(SeriesTerm{j, magnitude, std::nullopt, cplx(bound.value(), 0.0), ""});
  }
  fill_ratios(coeff.terms);
  coeff.empirical_limit = tail_ratio(ratios_of(coeff.terms));
  double delta = 0.0;
  coeff.verdict = cauchy_verdict(bound_partial, ratios_of(coeff.terms), cauchy, &delta);
  if (std::isfinite(delta)) coeff.cauchy_delta = delta;
  out.coefficient_sum_bound = bound.value();
  out.coefficient_verdict = coeff.verdict;
  out.product_bound = out.fourier_sum_bound * out.coefficient_sum_bound;

  const SeriesReport psi = ymap_apply(req);
  for (std::size_t i = 0; i < psi.terms.size(); ++i) {
    MajorizationCheck check;
    check.j = psi.terms[i].j;
    check.partial_sum_abs = std::abs(psi.terms[i].partial_sum.value_or(0.0));
    check.bound = out.fourier_sum_bound * bound_partial[i].real();
    check.holds = check.partial_sum_abs <= check.bound * (1.0 + 1e-12);
    out.majorization_holds = out.majorization_holds && check.holds;
    out.checkpoints.push_back(check);
  }

  if (out.fourier_verdict == Verdict::kConverged && out.coefficient_verdict == Verdict::kConverged) {
    out.bound_verdict = Verdict::kConverged;
  } else if (out.fourier_verdict == Verdict::kDiverged ||
             out.coefficient_verdict == Verdict::kDiverged) {
    out.bound_verdict = Verdict::kDiverged;
  }
  out.verdict = psi.verdict;
  return out;
}

}  // namespace lh
