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

#ifndef LH_SPECIAL_COMPENSATED_SUM_HPP_
#define LH_SPECIAL_COMPENSATED_SUM_HPP_

#include <cmath>
#include <complex>

namespace lh {

// Neumaier's variant of Kahan summation.
class NeumaierSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }
  void scale(double f) {
    sum_ *= f;
    comp_ *= f;
  }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

class ComplexNeumaierSum {
 public:
  void add(std::complex<double> z) {
    re_.add(z.real());
    im_.add(z.imag());
  }
  std::complex<double> value() const { return {re_.value(), im_.value()}; }
  void scale(double f) {
    re_.scale(f);
    im_.scale(f);
  }

 private:
  NeumaierSum re_;
  NeumaierSum im_;
};

}  // namespace lh

#endif  // LH_SPECIAL_COMPENSATED_SUM_HPP_
