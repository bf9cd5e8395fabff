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

#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "lh/errors.hpp"
#include "lh/expansion/expansion.hpp"
#include "lh/lie/cartan.hpp"
#include "lh/wigner/su2_fourier.hpp"
#include "lh/ymap/ymap.hpp"

namespace lh::cli {

namespace {

using cplx = std::complex<double>;

std::string num(double x) {
  if (!std::isfinite(x)) return "";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string num(const std::optional<double>& x) { return x ? num(*x) : std::string(); }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out.push_back('"');
    out.push_back(ch);
  }
  return out + "\"";
}

struct ResolvedTarget {
  double epsilon = 0.0;
  std::optional<SL2CElement> g;
  Json cartan;  // null unless g was given
};

ResolvedTarget resolve(const GroupTarget& target) {
  if (target.epsilon && target.g) throw DomainError("give either --eps or --g, not both");
  ResolvedTarget out;
  if (target.g) {
    const SL2CElement g = SL2CElement::from_matrix(Matrix2c::from_reals(*target.g));
    const CartanFactors f = cartan_decompose(g);
    out.epsilon = f.epsilon;
    out.g = g;
    out.cartan = to_json(f);
    return out;
  }
  out.epsilon = target.epsilon.value_or(2.0);
  if (!(out.epsilon > 0.0) || !std::isfinite(out.epsilon)) {
    throw DomainError("epsilon must be positive and finite");
  }
  return out;
}

void attach_target(Json& json, const ResolvedTarget& t) {
  if (!t.cartan.is_null()) json["cartan"] = t.cartan;
}

Output series_output(const SeriesReport& r, const ResolvedTarget& t) {
  Output out;
  out.json = to_json(r);
  attach_target(out.json, t);
  out.csv_header = {"j", "log_mag", "phase", "ratio", "partial_re", "partial_im", "path"};
  for (const auto& term : r.terms) {
    out.csv_rows.push_back({std::to_string(term.j), num(term.value.log_mag()),
                            num(term.value.phase()), num(term.ratio),
                            term.partial_sum ? num(term.partial_sum->real()) : "",
                            term.partial_sum ? num(term.partial_sum->imag()) : "", term.path});
  }
  return out;
}

ExpansionConfig expansion_config(const RunConfig& config, cplx tau, int m, double eps,
                                 int default_j_max) {
  ExpansionConfig cfg;
  cfg.tau = tau;
  cfg.m = m;
  cfg.epsilon = eps;
  cfg.j_max = config.j_max.value_or(default_j_max);
  cfg.cauchy_tolerance = config.cauchy_tolerance;
  cfg.cauchy_window = config.cauchy_window;
  cfg.policy = config.policy();
  return cfg;
}

SU2Function builtin_function(const std::string& name) {
  if (name == "exp_re_trace") {
    return [](const SU2Element& u) { return cplx(std::exp(u.matrix().trace().real()), 0.0); };
  }
  if (name == "re_trace") {
    return [](const SU2Element& u) { return cplx(u.matrix().trace().real(), 0.0); };
  }
  if (name == "one") {
    return [](const SU2Element&) { return cplx(1.0, 0.0); };
  }
  throw DomainError("unknown function '" + name + "' (exp_re_trace, re_trace, one)");
}

}  // namespace

std::string render(const Output& output, OutputFormat format) {
  if (format == OutputFormat::kJson) return output.json.dump(2) + "\n";
  std::ostringstream os;
  for (std::size_t i = 0; i < output.csv_header.size(); ++i) {
    os << (i ? "," : "") << output.csv_header[i];
  }
  os << "\n";
  for (const auto& row : output.csv_rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(row[i]);
    os << "\n";
  }
  return os.str();
}

cplx parse_complex(const std::string& text) {
  const auto comma = text.find(',');
  auto parse = [&](const std::string& part) {
    char* end = nullptr;
    const double v = std::strtod(part.c_str(), &end);
    if (part.empty() || end != part.c_str() + part.size() || !std::isfinite(v)) {
      throw DomainError("cannot parse complex number '" + text + "' (expected re or re,im)");
    }
    return v;
  };
  if (comma == std::string::npos) return {parse(text), 0.0};
  return {parse(text.substr(0, comma)), parse(text.substr(comma + 1))};
}

Output cmd_coeff(const CoeffArgs& args, const RunConfig& config) {
  const ResolvedTarget t = resolve(args.target);
  const CoefficientValue v = diagonal_coefficient(args.j, args.m, args.tau, t.epsilon, config.policy());
  Output out;
  out.json = to_json(v);
  out.json["kind"] = "coefficient";
  out.json["j"] = args.j;
  out.json["m"] = args.m;
  out.json["tau"] = complex_to_json(args.tau);
  out.json["epsilon"] = t.epsilon;
  attach_target(out.json, t);
  const auto linear = v.value.try_to_complex();
  out.csv_header = {"j", "m", "tau_re", "tau_im", "epsilon", "log_mag", "phase",
                    "re", "im", "path", "error_estimate"};
  out.csv_rows.push_back({std::to_string(args.j), std::to_string(args.m), num(args.tau.real()),
                          num(args.tau.imag()), num(t.epsilon), num(v.value.log_mag()),
                          num(v.value.phase()), linear ? num(linear->real()) : "",
                          linear ? num(linear->imag()) : "", std::string(to_string(v.path)),
                          num(v.error_estimate)});
  return out;
}

Output cmd_ratio(const RatioArgs& args, const RunConfig& config) {
  const ResolvedTarget t = resolve(args.target);
  const int j_max = config.j_max.value_or(200);
  SeriesReport r;
  if (args.track == "diagonal") {
    r = ratio_test(args.m, args.tau, t.epsilon, j_max, config.policy());
  } else if (args.track == "m_equals_j") {
    r = boundary_ratio_test(BoundaryTrack::kMEqualsJ, args.tau, t.epsilon, j_max, config.policy());
  } else if (args.track == "m_equals_0") {
    r = boundary_ratio_test(BoundaryTrack::kMEqualsZero, args.tau, t.epsilon, j_max,
                            config.policy());
  } else {
    throw DomainError("unknown track '" + args.track + "' (diagonal, m_equals_j, m_equals_0)");
  }
  return series_output(r, t);
}

Output cmd_sum(const SumArgs& args, const RunConfig& config) {
  const ResolvedTarget t = resolve(args.target);
  const ExpansionConfig cfg = expansion_config(config, args.tau, args.m, t.epsilon, 300);
  if (args.mode == "diagonal") return series_output(partial_sum_diagonal(cfg), t);
  if (args.mode == "triple") return series_output(partial_sum_triple(cfg), t);
  throw DomainError("unknown mode '" + args.mode + "' (diagonal, triple)");
}

Output cmd_norm(const NormArgs& args, const RunConfig& config) {
  const NormIdentityResult r = norm_identity(args.tau, config.j_max.value_or(1000000));
  Output out;
  out.json = to_json(r);
  out.csv_header = {"tau_re", "tau_im", "j_max", "computed_re", "computed_im", "target_re",
                    "target_im", "deviation", "tail_bound", "within_budget"};
  out.csv_rows.push_back({num(r.tau.real()), num(r.tau.imag()), std::to_string(r.j_max),
                          num(r.computed.real()), num(r.computed.imag()), num(r.target.real()),
                          num(r.target.imag()), num(r.deviation), num(r.tail_bound),
                          r.within_budget ? "true" : "false"});
  return out;
}

Output cmd_diverge(const DivergeArgs& args, const RunConfig& config) {
  const DivergenceReport r = divergence_probe(args.tau, args.checkpoints, config.cauchy_tolerance);
  Output out;
  out.json = to_json(r);
  out.csv_header = {"from", "to", "increment_re", "increment_im", "model_re",
                    "model_im", "relative_deviation"};
  for (const auto& inc : r.increments) {
    out.csv_rows.push_back({std::to_string(inc.from), std::to_string(inc.to),
                            num(inc.increment.real()), num(inc.increment.imag()),
                            num(inc.model.real()), num(inc.model.imag()),
                            num(inc.relative_deviation)});
  }
  return out;
}

Output cmd_ymap(const YMapArgs& args, const RunConfig& config) {
  YMapRequest req;
  if (!args.table_path.empty()) {
    std::ifstream in(args.table_path);
    if (!in) throw DomainError("cannot open table " + args.table_path);
    Json j;
    try {
      j = Json::parse(in);
    } catch (const Json::exception& e) {
      throw DomainError("table " + args.table_path + ": " + e.what());
    }
    req.table = fourier_table_from_json(j);
  } else {
    if (args.band < 0) throw DomainError("band must be non-negative");
    req.table = su2_fourier(builtin_function(args.function), args.p, args.band);
  }
  const ResolvedTarget t = resolve(args.target);
  if (t.g) {
    req.target = *t.g;
  } else {
    req.target = t.epsilon;
  }
  req.tau = args.tau;
  req.j_max = config.j_max.value_or(200);
  req.cauchy_tolerance = config.cauchy_tolerance;
  req.cauchy_window = config.cauchy_window;
  req.policy = config.policy();
  if (!args.convergence_report) return series_output(ymap_apply(req), t);

  const YMapConvergenceReport r = ymap_convergence_report(req);
  Output out;
  out.json = to_json(r);
  attach_target(out.json, t);
  out.csv_header = {"j", "partial_sum_abs", "bound", "holds"};
  for (const auto& c : r.checkpoints) {
    out.csv_rows.push_back({std::to_string(c.j), num(c.partial_sum_abs), num(c.bound),
                            c.holds ? "true" : "false"});
  }
  return out;
}

Output cmd_asymcheck(const AsymcheckArgs& args, const RunConfig& config) {
  const ResolvedTarget t = resolve(args.target);
  EvaluationPolicy exact = config.policy();
  exact.selection = PathSelection::kExact;
  EvaluationPolicy asymptotic = config.policy();
  asymptotic.selection = PathSelection::kAsymptotic;
  Output out;
  out.json = {{"kind", "asymcheck"},
              {"m", args.m},
              {"tau", complex_to_json(args.tau)},
              {"epsilon", t.epsilon},
              {"branch", config.branch == AsymptoticBranch::kMinus ? "minus" : "plus"}};
  attach_target(out.json, t);
  out.csv_header = {"j", "exact_log_mag", "exact_phase", "asymptotic_log_mag",
                    "asymptotic_phase", "relative_error"};
  Json rows = Json::array();
  for (int j : args.js) {
    if (j < 1) throw DomainError("asymcheck: j must be at least 1");
    const LogComplexValue e = diagonal_coefficient(j, args.m, args.tau, t.epsilon, exact).value;
    const LogComplexValue a =
        diagonal_coefficient(j, args.m, args.tau, t.epsilon, asymptotic).value;
    // |a/e - 1| without leaving log space for the magnitudes.
    const double err =
        std::abs(std::exp(cplx(a.log_mag() - e.log_mag(), a.phase() - e.phase())) - 1.0);
    rows.push_back({{"j", j}, {"exact", to_json(e)}, {"asymptotic", to_json(a)},
                    {"relative_error", err}});
    out.csv_rows.push_back({std::to_string(j), num(e.log_mag()), num(e.phase()),
                            num(a.log_mag()), num(a.phase()), num(err)});
  }
  out.json["rows"] = rows;
  return out;
}

}  // namespace lh::cli
