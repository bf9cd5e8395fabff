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

#include "lh/expansion/expansion.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "lh/errors.hpp"
#include "lh/parallel.hpp"
#include "lh/special/compensated_sum.hpp"

namespace lh {

namespace {

using cplx = std::complex<double>;

nlohmann::json complex_json(cplx z) { return {{"re", z.real()}, {"im", z.imag()}}; }

void check_sum_inputs(double epsilon, int j_max) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) throw DomainError("epsilon must be positive");
  if (epsilon == 1.0) throw DomainError("series diagnostics need epsilon != 1");
  if (j_max < 1) throw DomainError("j_max must be positive");
}

void check_tau_regular(cplx tau) {
  if (std::abs(1.0 + tau * tau) < 1e-12) throw DomainError("tau = +-i is singular (1 + tau^2 = 0)");
}

// Accumulates terms in j order and fills ratios, partial sums and verdict.
void finish_sum(SeriesReport& report, const CauchySettings& cauchy) {
  ComplexNeumaierSum sum;
  std::vector<cplx> partial;
  std::vector<double> ratios;
  for (std::size_t i = 0; i < report.terms.size(); ++i) {
    auto& t = report.terms[i];
    const auto value = t.value.try_to_complex();
    if (!value) throw NumericalError("series term at j = " + std::to_string(t.j) + " overflows");
    sum.add(*value);
    t.partial_sum = sum.value();
    partial.push_back(sum.value());
    if (i + 1 < report.terms.size()) {
      const auto& next = report.terms[i + 1];
      if (!t.value.is_zero() && !next.value.is_zero()) {
        t.ratio = std::exp(next.value.log_mag() - t.value.log_mag());
        ratios.push_back(*t.ratio);
      }
    }
  }
  report.empirical_limit = tail_ratio(ratios);
  if (report.predicted_limit && report.empirical_limit) {
    report.relative_deviation =
        std::abs(*report.empirical_limit - *report.predicted_limit) / *report.predicted_limit;
  }
  double delta = 0.0;
  report.verdict = cauchy_verdict(partial, ratios, cauchy, &delta);
  if (std::isfinite(delta)) report.cauchy_delta = delta;
}

}  // namespace

SeriesReport partial_sum_diagonal(const ExpansionConfig& cfg) {
  check_sum_inputs(cfg.epsilon, cfg.j_max);
  const int j0 = std::max(std::abs(cfg.m), 1);
  SeriesReport report;
  report.kind = "diagonal_sum";
  report.params = {{"m", cfg.m},
                   {"tau", complex_json(cfg.tau)},
                   {"epsilon", cfg.epsilon},
                   {"j_max", cfg.j_max},
                   {"cauchy_tolerance", cfg.cauchy_tolerance},
                   {"cauchy_window", cfg.cauchy_window}};
  if (cfg.j_max >= j0) {
    const std::size_t count = static_cast<std::size_t>(cfg.j_max - j0 + 1);
    report.terms.resize(count);
    parallel_for(count, cfg.policy.threads, [&](std::size_t i) {
      const int j = j0 + static_cast<int>(i);
      const CoefficientValue c = diagonal_coefficient(j, cfg.m, cfg.tau, cfg.epsilon, cfg.policy);
      report.terms[i] = SeriesTerm{j, c.value, std::nullopt, std::nullopt, std::string(to_string(c.path))};
    });
  }
  if (cfg.m == 0) report.j0_term = diagonal_coefficient(0, 0, cfg.tau, cfg.epsilon, cfg.policy).value;
  report.predicted_limit = diagonal_ratio_limit(cfg.epsilon);
  report.comparison_informational = cfg.tau.imag() != 0.0;
  finish_sum(report, cfg.cauchy());
  return report;
}

SeriesReport partial_sum_triple(const ExpansionConfig& cfg) {
  check_sum_inputs(cfg.epsilon, cfg.j_max);
  SeriesReport report;
  report.kind = "triple_sum";
  report.params = {{"tau", complex_json(cfg.tau)},
                   {"epsilon", cfg.epsilon},
                   {"j_max", cfg.j_max},
                   {"cauchy_tolerance", cfg.cauchy_tolerance},
                   {"cauchy_window", cfg.cauchy_window}};
  // Flattened (j, m) index for j = 1..j_max, m = -j..j.
  std::vector<std::pair<int, int>> index;
  for (int j = 1; j <= cfg.j_max; ++j) {
    for (int m = -j; m <= j; ++m) index.emplace_back(j, m);
  }
  std::vector<CoefficientValue> values(index.size());
  parallel_for(index.size(), cfg.policy.threads, [&](std::size_t i) {
    values[i] = diagonal_coefficient(index[i].first, index[i].second, cfg.tau, cfg.epsilon, cfg.policy);
  });
  std::size_t pos = 0;
  for (int j = 1; j <= cfg.j_max; ++j) {
    LogComplexValue block;
    int asymptotic = 0;
    for (int m = -j; m <= j; ++m, ++pos) {
      block += values[pos].value;
      if (values[pos].path == EvaluationPath::kAsymptotic) ++asymptotic;
    }
    const std::string path = asymptotic == 0 ? "exact" : (asymptotic == 2 * j + 1 ? "asymptotic" : "mixed");
    report.terms.push_back(SeriesTerm{j, block, std::nullopt, std::nullopt, path});
  }
  report.j0_term = diagonal_coefficient(0, 0, cfg.tau, cfg.epsilon, cfg.policy).value;
  // Largest of the bounding-sum ratio limits.
  report.predicted_limit = diagonal_ratio_limit(cfg.epsilon);
  report.comparison_informational = true;
  report.notes.push_back("predicted_limit is the m = 0 bounding-sum limit; block ratios are not bounded by it");
  finish_sum(report, cfg.cauchy());
  return report;
}

NormIdentityResult norm_identity(cplx tau, int j_max) {
  check_tau_regular(tau);
  if (j_max < 1) throw DomainError("norm_identity: j_max must be positive");
  NeumaierSum sum;
  for (int j = j_max; j >= 1; --j) {
    const double dj = j;
    sum.add(1.0 / (dj * dj));
  }
  const cplx scale = 1.0 + tau * tau;
  NormIdentityResult r;
  r.tau = tau;
  r.j_max = j_max;
  r.computed = sum.value() / scale;
  r.target = std::numbers::pi * std::numbers::pi / (6.0 * scale);
  r.deviation = std::abs(r.computed - r.target);
  r.tail_bound = 1.0 / (static_cast<double>(j_max) * std::abs(scale));
  r.within_budget = r.deviation <= r.tail_bound + 1e-12;
  return r;
}

DivergenceReport divergence_probe(cplx tau, std::vector<long long> checkpoints,
                                  double cauchy_tolerance, double model_tolerance) {
  check_tau_regular(tau);
  if (checkpoints.empty()) throw DomainError("divergence_probe: need at least one checkpoint");
  std::sort(checkpoints.begin(), checkpoints.end());
  checkpoints.erase(std::unique(checkpoints.begin(), checkpoints.end()), checkpoints.end());
  if (checkpoints.front() < 1) throw DomainError("divergence_probe: checkpoints must be positive");

  const cplx scale = 1.0 + tau * tau;
  DivergenceReport report;
  report.tau = tau;
  report.checkpoints = checkpoints;
  report.model_tolerance = model_tolerance;
  NeumaierSum sum;
  long long j = 0;
  for (long long target : checkpoints) {
    for (++j; j <= target; ++j) {
      const double dj = static_cast<double>(j);
      sum.add((2.0 * dj + 1.0) / (dj * dj));
    }
    --j;
    report.partial_sums.push_back(sum.value() / scale);
  }
  for (std::size_t i = 0; i + 1 < checkpoints.size(); ++i) {
    DivergenceIncrement inc;
    inc.from = checkpoints[i];
    inc.to = checkpoints[i + 1];
    inc.increment = report.partial_sums[i + 1] - report.partial_sums[i];
    inc.model = 2.0 * std::log(static_cast<double>(inc.to) / static_cast<double>(inc.from)) / scale;
    inc.relative_deviation = std::abs(inc.increment - inc.model) / std::abs(inc.model);
    report.increments.push_back(inc);
  }
  if (!report.increments.empty()) {
    const auto& last = report.increments.back();
    const bool grows = std::abs(last.increment) > 10.0 * cauchy_tolerance;
    const bool fits = last.relative_deviation <= model_tolerance;
    report.verdict = (grows && fits) ? Verdict::kDiverged : Verdict::kInconclusive;
  }
  return report;
}

cplx CoefficientTable::at(int j) const {
  auto it = entries.find(j);
  return it == entries.end() ? cplx(0.0, 0.0) : it->second;
}

CoefficientTable CoefficientTable::geometric(int m, cplx r, int j_max) {
  CoefficientTable t;
  t.m = m;
  cplx value = 1.0;
  const int j0 = std::max(std::abs(m), 1);
  for (int j = 1; j <= j_max; ++j) {
    value *= r;
    if (j >= j0) t.entries[j] = value;
  }
  return t;
}

SeriesReport synthesize(const CoefficientTable& table, cplx tau, double epsilon, int j_max,
                        const ExpansionConfig& settings) {
  check_sum_inputs(epsilon, j_max);
  check_tau_regular(tau);
  const int j0 = std::max(std::abs(table.m), 1);
  std::vector<double> table_ratios;
  for (const auto& [j, c] : table.entries) {
    if (j < std::abs(table.m)) throw IndexError("coefficient table entry with j < |m|");
    const cplx next = table.at(j + 1);
    if (c != cplx(0.0, 0.0) && next != cplx(0.0, 0.0)) table_ratios.push_back(std::abs(next / c));
  }
  if (auto r = tail_ratio(table_ratios); r && *r > 1.0 + 1e-12) {
    throw DomainError("coefficient table fails the decay check: tail ratio " + std::to_string(*r));
  }

  SeriesReport report;
  report.kind = "synthesis";
  report.params = {{"m", table.m},
                   {"tau", complex_json(tau)},
                   {"epsilon", epsilon},
                   {"j_max", j_max},
                   {"table_entries", table.entries.size()},
                   {"cauchy_tolerance", settings.cauchy_tolerance},
                   {"cauchy_window", settings.cauchy_window}};
  const std::size_t count = j_max >= j0 ? static_cast<std::size_t>(j_max - j0 + 1) : 0;
  report.terms.resize(count);
  const cplx scale = 1.0 + tau * tau;
  parallel_for(count, settings.policy.threads, [&](std::size_t i) {
    const int j = j0 + static_cast<int>(i);
    const cplx c = table.at(j);
    SeriesTerm term{j, LogComplexValue::zero(), std::nullopt, std::nullopt, ""};
    if (c != cplx(0.0, 0.0)) {
      const CoefficientValue d = diagonal_coefficient(j, table.m, tau, epsilon, settings.policy);
      term.value = LogComplexValue::from_complex(static_cast<double>(j) * j * scale * c) * d.value;
      term.path = std::string(to_string(d.path));
    }
    report.terms[i] = term;
  });
  report.predicted_limit = std::nullopt;
  if (auto r = tail_ratio(table_ratios)) report.predicted_limit = *r * diagonal_ratio_limit(epsilon);
  report.comparison_informational = true;
  finish_sum(report, settings.cauchy());
  return report;
}

}  // namespace lh
