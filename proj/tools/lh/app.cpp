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

#include "app.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <nlohmann/json.hpp>

#include "commands.hpp"
#include "lh/errors.hpp"

namespace lh::cli {

namespace {

void add_target(CLI::App* cmd, GroupTarget& target, std::vector<double>& g) {
  cmd->add_option("--eps", target.epsilon, "Boost parameter epsilon (default 2)");
  cmd->add_option("--g", g, "SL(2,C) matrix as 8 reals: a.re,a.im,b.re,b.im,c.re,c.im,d.re,d.im")
      ->expected(8)
      ->delimiter(',');
}

void finish_target(GroupTarget& target, const std::vector<double>& g) {
  if (g.empty()) return;
  std::array<double, 8> v{};
  std::copy(g.begin(), g.end(), v.begin());
  target.g = v;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
        const EnvLookup& env) {
  CLI::App app{"Principal-series coefficients, expansions and Y-map diagnostics", "lh"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  std::map<std::string, std::string> flags;
  app.add_option("--config", config_path, "key = value settings file");
  const std::vector<std::pair<std::string, std::string>> shared = {
      {"--jmax", "j_max"},         {"--tol", "cauchy_tolerance"}, {"--window", "cauchy_window"},
      {"--branch", "branch"},      {"--path", "path"},            {"--format", "format"},
      {"--output", "output"},      {"--threads", "threads"}};
  for (const auto& [flag, key] : shared) {
    app.add_option_function<std::string>(
        flag, [&flags, key = key](const std::string& v) { flags[key] = v; }, key);
  }

  std::string tau_text = "0";
  std::vector<double> g;
  std::function<Output(const RunConfig&)> action;

  CoeffArgs coeff;
  auto* c = app.add_subcommand("coeff", "One diagonal coefficient");
  c->add_option("--j", coeff.j, "Spin label j")->required();
  c->add_option("--m", coeff.m, "Magnetic index m");
  c->add_option("--tau", tau_text, "tau as re or re,im");
  add_target(c, coeff.target, g);
  c->callback([&] {
    coeff.tau = parse_complex(tau_text);
    finish_target(coeff.target, g);
    action = [&](const RunConfig& rc) { return cmd_coeff(coeff, rc); };
  });

  RatioArgs ratio;
  auto* r = app.add_subcommand("ratio", "Term-ratio test against the closed-form limit");
  r->add_option("--m", ratio.m, "Magnetic index m");
  r->add_option("--tau", tau_text, "tau as re or re,im");
  r->add_option("--track", ratio.track, "diagonal | m_equals_j | m_equals_0");
  add_target(r, ratio.target, g);
  r->callback([&] {
    ratio.tau = parse_complex(tau_text);
    finish_target(ratio.target, g);
    action = [&](const RunConfig& rc) { return cmd_ratio(ratio, rc); };
  });

  SumArgs sum;
  auto* s = app.add_subcommand("sum", "Partial sums with a Cauchy verdict");
  s->add_option("--mode", sum.mode, "diagonal | triple");
  s->add_option("--m", sum.m, "Magnetic index m (diagonal mode)");
  s->add_option("--tau", tau_text, "tau as re or re,im");
  add_target(s, sum.target, g);
  s->callback([&] {
    sum.tau = parse_complex(tau_text);
    finish_target(sum.target, g);
    action = [&](const RunConfig& rc) { return cmd_sum(sum, rc); };
  });

  NormArgs norm;
  auto* n = app.add_subcommand("norm", "Norm identity sum_j 1/(j^2 (1 + tau^2))");
  n->add_option("--tau", tau_text, "tau as re or re,im");
  n->callback([&] {
    norm.tau = parse_complex(tau_text);
    action = [&](const RunConfig& rc) { return cmd_norm(norm, rc); };
  });

  DivergeArgs diverge;
  auto* d = app.add_subcommand("diverge", "Growth of sum_j (2j+1)/(j^2 (1 + tau^2))");
  d->add_option("--tau", tau_text, "tau as re or re,im");
  d->add_option("--checkpoints", diverge.checkpoints, "Increasing j checkpoints")
      ->delimiter(',');
  d->callback([&] {
    diverge.tau = parse_complex(tau_text);
    action = [&](const RunConfig& rc) { return cmd_diverge(diverge, rc); };
  });

  YMapArgs ymap;
  auto* y = app.add_subcommand("ymap", "Y-map partial sums of an SU(2) Fourier table");
  y->add_option("--tau", tau_text, "tau as re or re,im");
  y->add_option("--table", ymap.table_path, "JSON Fourier table");
  y->add_option("--function", ymap.function, "Built-in phi without --table: exp_re_trace | re_trace | one");
  y->add_option("--p", ymap.p, "Row index p (twice the spin projection)");
  y->add_option("--band", ymap.band, "Band limit (largest twice_j)");
  y->add_flag("--report", ymap.convergence_report, "Emit the convergence and majorization report");
  add_target(y, ymap.target, g);
  y->callback([&] {
    ymap.tau = parse_complex(tau_text);
    finish_target(ymap.target, g);
    action = [&](const RunConfig& rc) { return cmd_ymap(ymap, rc); };
  });

  AsymcheckArgs asym;
  auto* a = app.add_subcommand("asymcheck", "Exact against asymptotic coefficients");
  a->add_option("--m", asym.m, "Magnetic index m");
  a->add_option("--tau", tau_text, "tau as re or re,im");
  a->add_option("--js", asym.js, "Spins to compare")->delimiter(',');
  add_target(a, asym.target, g);
  a->callback([&] {
    asym.tau = parse_complex(tau_text);
    finish_target(asym.target, g);
    action = [&](const RunConfig& rc) { return cmd_asymcheck(asym, rc); };
  });

  try {
    try {
      app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
      const int code = app.exit(e, out, err);
      return code == 0 ? kExitSuccess : kExitDomain;
    }
    RunConfig config;
    if (config_path.empty()) {
      if (auto p = env("LH_CONFIG")) config_path = *p;
    }
    if (!config_path.empty()) apply_config_file(config, config_path);
    for (const auto& [key, value] : flags) apply_setting(config, key, value);
    apply_environment(config, env);
    config.validate();

    const std::string text = render(action(config), config.format);
    if (config.output.empty()) {
      out << text;
    } else {
      std::ofstream file(config.output);
      if (!file || !(file << text)) throw DomainError("cannot write " + config.output);
    }
    return kExitSuccess;
  } catch (const NumericalError& e) {
    err << "lh: numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::domain_error& e) {
    err << "lh: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::out_of_range& e) {
    err << "lh: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::invalid_argument& e) {
    err << "lh: " << e.what() << "\n";
    return kExitDomain;
  } catch (const nlohmann::json::exception& e) {
    err << "lh: malformed input: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    err << "lh: " << e.what() << "\n";
    return kExitNumerical;
  }
}

}  // namespace lh::cli
