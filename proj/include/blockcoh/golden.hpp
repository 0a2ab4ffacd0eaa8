// Copyright 2026 The blockcoh developers.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BLOCKCOH_GOLDEN_HPP
#define BLOCKCOH_GOLDEN_HPP

#include <cmath>
#include <limits>
#include <utility>

namespace blockcoh {

struct GoldenResult {
  double x = 0.0;
  double value = -std::numeric_limits<double>::infinity();
};

// Golden-section maximization of a unimodal scalar function on [lo, hi].
// One function evaluation per iteration after the warm-up pair; the best
// point ever evaluated (including the endpoints) is returned. If stop_above
// is hit the search returns early with the witness -- useful when the caller
// only needs to know that the maximum clears a threshold.
template <class F>
GoldenResult golden_section_max(F&& f, double lo, double hi, int iterations,
                                double stop_above = std::numeric_limits<double>::infinity()) {
  static const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;  // 0.618...
  GoldenResult best;
  auto consider = [&](double x, double fx) {
    if (fx > best.value) {
      best.x = x;
      best.value = fx;
    }
    return fx >= stop_above;
  };
  if (consider(lo, f(lo))) return best;
  if (hi <= lo) return best;
  if (consider(hi, f(hi))) return best;

  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  if (consider(c, fc) || consider(d, fd)) return best;
  for (int it = 0; it < iterations; ++it) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
      if (consider(c, fc)) return best;
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
      if (consider(d, fd)) return best;
    }
  }
  return best;
}

}  // namespace blockcoh

#endif  // BLOCKCOH_GOLDEN_HPP
