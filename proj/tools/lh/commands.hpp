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

#ifndef LH_TOOLS_COMMANDS_HPP_
#define LH_TOOLS_COMMANDS_HPP_

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "lh/io/json.hpp"
#include "run_config.hpp"

namespace lh::cli {

// A report ready to print: the JSON form and a fixed-column CSV flattening.
struct Output {
  Json json;
  std::vector<std::string> csv_header;
  std::vector<std::vector<std::string>> csv_rows;
};

std::string render(const Output& output, OutputFormat format);

// "re" or "re,im".
std::complex<double> parse_complex(const std::string& text);

// Boost given directly as epsilon or as an SL(2,C) matrix (8 reals, row-major
// re/im interleaved) that is Cartan-decomposed.
struct GroupTarget {
  std::optional<double> epsilon;
  std::optional<std::array<double, 8>> g;
};

struct CoeffArgs {
  int j = 0;
  int m = 0;
  std::complex<double> tau;
  GroupTarget target;
};

struct RatioArgs {
  int m = 0;
  std::complex<double> tau;
  GroupTarget target;
  std::string track = "diagonal";  // diagonal | m_equals_j | m_equals_0
};

struct SumArgs {
  std::string mode = "diagonal";  // diagonal | triple
  int m = 0;
  std::complex<double> tau;
  GroupTarget target;
};

struct NormArgs {
  std::complex<double> tau;
};

struct DivergeArgs {
  std::complex<double> tau;
  std::vector<long long> checkpoints = {1000, 10000, 100000};
};

struct YMapArgs {
  std::complex<double> tau;
  GroupTarget target;
  std::string table_path;                  // JSON Fourier table
  std::string function = "exp_re_trace";   // used without a table: exp_re_trace | re_trace | one
  int p = 0;
  int band = 8;
  bool convergence_report = false;
};

struct AsymcheckArgs {
  int m = 0;
  std::complex<double> tau;
  GroupTarget target;
  std::vector<int> js = {8, 16, 32, 64};
};

Output cmd_coeff(const CoeffArgs& args, const RunConfig& config);
Output cmd_ratio(const RatioArgs& args, const RunConfig& config);
Output cmd_sum(const SumArgs& args, const RunConfig& config);
Output cmd_norm(const NormArgs& args, const RunConfig& config);
Output cmd_diverge(const DivergeArgs& args, const RunConfig& config);
Output cmd_ymap(const YMapArgs& args, const RunConfig& config);
Output cmd_asymcheck(const AsymcheckArgs& args, const RunConfig& config);

}  // namespace lh::cli

#endif  // LH_TOOLS_COMMANDS_HPP_
