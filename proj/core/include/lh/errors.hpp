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

#ifndef LH_ERRORS_HPP_
#define LH_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace lh {

// Argument outside the mathematical domain of a function (z >= 1 for 2F1,
// tau^2 = -1 in the norm identity, non-positive integer c, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Gamma function evaluated at one of its poles.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Invalid representation or matrix index (|m| > j, wrong parity, ...).
class IndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// A matrix that fails a group-membership check.
class GroupError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A computation that could not reach its accuracy target.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonConvergenceError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace lh

#endif  // LH_ERRORS_HPP_
