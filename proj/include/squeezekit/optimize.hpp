// Copyright 2026 The squeezekit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <concepts>
#include <utility>

namespace squeezekit {

template <typename F>
concept ScalarFunction = std::regular_invocable<F, double> &&
                         std::convertible_to<std::invoke_result_t<F, double>, double>;

struct MinimumPoint {
  double x = 0.0;
  double fx = 0.0;
};

/// Golden-section search for a minimum of a unimodal f on [lo, hi]. Stops
/// once the bracket is narrower than tol or after max_iter steps.
template <ScalarFunction F>
MinimumPoint golden_section_minimize(F&& f, double lo, double hi, double tol, int max_iter = 200) {
  constexpr double kInvPhi = 0.6180339887498949;  // (sqrt5 - 1) / 2
  double c = hi - kInvPhi * (hi - lo);
  double d = lo + kInvPhi * (hi - lo);
  double fc = f(c);
  double fd = f(d);
  for (int it = 0; it < max_iter && (hi - lo) > tol; ++it) {
    if (fc < fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - kInvPhi * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + kInvPhi * (hi - lo);
      fd = f(d);
    }
  }
  const double x = 0.5 * (lo + hi);
  const double fx = f(x);
  MinimumPoint best{x, fx};
  if (fc < best.fx) best = {c, fc};
  if (fd < best.fx) best = {d, fd};
  return best;
}

/// Bisection for the sign change of f on [lo, hi]; pred(lo) and pred(hi) must
/// differ. Returns the final bracket.
template <typename Pred>
  requires std::predicate<Pred, double>
std::pair<double, double> bisect(Pred&& pred, double lo, double hi, double tol, int max_iter = 200) {
  const bool at_lo = pred(lo);
  for (int it = 0; it < max_iter && (hi - lo) > tol; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (pred(mid) == at_lo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return {lo, hi};
}

}  // namespace squeezekit
