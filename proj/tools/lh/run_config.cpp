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

#include "run_config.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <fstream>

#include "lh/errors.hpp"

namespace lh::cli {

namespace {

constexpr std::array<std::string_view, 8> kKeys = {
    "j_max", "cauchy_tolerance", "cauchy_window", "branch", "path", "format", "output", "threads"};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view key, std::string_view value) {
  int out = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw DomainError("config: " + std::string(key) + " expects an integer, got '" +
                      std::string(value) + "'");
  }
  return out;
}

double parse_double(std::string_view key, std::string_view value) {
  const std::string text(value);
  char* end = nullptr;
  const double out = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size()) {
    throw DomainError("config: " + std::string(key) + " expects a number, got '" + text + "'");
  }
  return out;
}

}  // namespace

void RunConfig::validate() const {
  if (j_max && *j_max < 1) throw DomainError("j_max must be at least 1");
  if (!(cauchy_tolerance > 0.0)) throw DomainError("cauchy_tolerance must be positive");
  if (cauchy_window < 1) throw DomainError("cauchy_window must be at least 1");
  if (threads < 0) throw DomainError("threads must be non-negative (0 = hardware)");
}

EvaluationPolicy RunConfig::policy() const {
  EvaluationPolicy p;
  p.selection = path;
  p.branch = branch;
  p.threads = threads;
  return p;
}

void apply_setting(RunConfig& config, std::string_view key, std::string_view value) {
  value = trim(value);
  if (key == "j_max") {
    config.j_max = parse_int(key, value);
  } else if (key == "cauchy_tolerance") {
    config.cauchy_tolerance = parse_double(key, value);
  } else if (key == "cauchy_window") {
    config.cauchy_window = parse_int(key, value);
  } else if (key == "threads") {
    config.threads = parse_int(key, value);
  } else if (key == "output") {
    config.output = std::string(value);
  } else if (key == "branch") {
    if (value == "minus") {
      config.branch = AsymptoticBranch::kMinus;
    } else if (value == "plus") {
      config.branch = AsymptoticBranch::kPlus;
    } else {
      throw DomainError("config: branch must be minus or plus");
    }
  } else if (key == "path") {
    if (value == "auto") {
      config.path = PathSelection::kAuto;
    } else if (value == "exact") {
      config.path = PathSelection::kExact;
    } else if (value == "asymptotic") {
      config.path = PathSelection::kAsymptotic;
    } else {
      throw DomainError("config: path must be auto, exact or asymptotic");
    }
  } else if (key == "format") {
    if (value == "json") {
      config.format = OutputFormat::kJson;
    } else if (value == "csv") {
      config.format = OutputFormat::kCsv;
    } else {
      throw DomainError("config: format must be json or csv");
    }
  } else {
    throw DomainError("config: unknown key '" + std::string(key) + "'");
  }
}

void apply_config_file(RunConfig& config, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("config: cannot open " + path);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::string_view view = line;
    if (const auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    view = trim(view);
    if (view.empty()) continue;
    const auto eq = view.find('=');
    if (eq == std::string_view::npos) {
      throw DomainError("config: " + path + ":" + std::to_string(number) + ": expected key = value");
    }
    apply_setting(config, trim(view.substr(0, eq)), view.substr(eq + 1));
  }
}

void apply_environment(RunConfig& config, const EnvLookup& lookup) {
  for (std::string_view key : kKeys) {
    std::string name = "LH_";
    for (char ch : key) name.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(ch))));
    if (const auto value = lookup(name)) apply_setting(config, key, *value);
  }
}

std::optional<std::string> process_environment(const std::string& name) {
  if (const char* v = std::getenv(name.c_str())) return std::string(v);
  return std::nullopt;
}

}  // namespace lh::cli
