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

#ifndef LH_TOOLS_APP_HPP_
#define LH_TOOLS_APP_HPP_

#include <iosfwd>

#include "run_config.hpp"

namespace lh::cli {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitNumerical = 1;
inline constexpr int kExitDomain = 2;

// Parses argv, runs one subcommand and writes its report. Returns the exit
// code: 0 on success, 2 on invalid input (domain, index, group or usage
// errors), 1 on numerical failure.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
        const EnvLookup& env = process_environment);

}  // namespace lh::cli

#endif  // LH_TOOLS_APP_HPP_
