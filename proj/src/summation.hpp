// polyaxial: numerical harmonic analysis on the positive orthant with
// power-weighted measures.
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

#pragma once

#include <cmath>
#include <cstddef>
#include <span>

namespace pax {

// Neumaier's improved Kahan summation. Deterministic and accurate to a few
// ulps of the exact sum regardless of cancellation between inputs.
class NeumaierAccumulator {
public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

namespace detail {
inline double pairwise_sum_rec(std::span<const double> v) {
  if (v.size() <= 32) {
    NeumaierAccumulator acc;
    for (double x : v) acc.add(x);
    return acc.value();
  }
  const std::size_t half = v.size() / 2;
  return pairwise_sum_rec(v.first(half)) + pairwise_sum_rec(v.subspan(half));
}
}  // namespace detail

// Balanced-tree pairwise summation with compensated leaves. Deterministic:
// the reduction order depends only on the length of the input.
inline double pairwise_sum(std::span<const double> v) {
  return detail::pairwise_sum_rec(v);
}

}  // namespace pax
