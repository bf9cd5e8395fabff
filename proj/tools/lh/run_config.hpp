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

#ifndef LH_TOOLS_RUN_CONFIG_HPP_
#define LH_TOOLS_RUN_CONFIG_HPP_

#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "lh/principal/principal_series.hpp"

namespace lh::cli {

enum class OutputFormat { kJson, kCsv };

// Settings shared by every subcommand. Layered as: built-in defaults, then a
// key = value config file, then command-line flags, then LH_* environment
// variables.
struct RunConfig {
  // Unset means the subcommand's own default.
  std::optional<int> j_max;
  double cauchy_tolerance = 1e-6;
  int cauchy_window = 10;
  AsymptoticBranch branch = AsymptoticBranch::kMinus;
  PathSelection path = PathSelection::kAuto;
  OutputFormat format = OutputFormat::kJson;
  std::string output;  // empty: stdout
  int threads = 1;

  // Throws DomainError for non-positive tolerances, windows or j_max.
  void validate() const;
  EvaluationPolicy policy() const;
};

// Recognized keys: j_max, cauchy_tolerance, cauchy_window, branch (minus |
// plus), path (auto | exact | asymptotic), format (json | csv), output,
// threads. Throws DomainError on unknown keys or unparsable values.
void apply_setting(RunConfig& config, std::string_view key, std::string_view value);

// Plain-text file, one "key = value" per line; '#' starts a comment.
void apply_config_file(RunConfig& config, const std::string& path);

// LH_J_MAX, LH_CAUCHY_TOLERANCE, ... (the key upper-cased with an LH_ prefix).
using EnvLookup = std::function<std::optional<std::string>(const std::string&)>;
void apply_environment(RunConfig& config, const EnvLookup& lookup);
std::optional<std::string> process_environment(const std::string& name);

}  // namespace lh::cli

#endif  // LH_TOOLS_RUN_CONFIG_HPP_
