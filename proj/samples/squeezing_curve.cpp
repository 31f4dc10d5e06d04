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

// xi(a) for one (N, k), three ways, plus the onset of squeezing.
// Usage: squeezing_curve [N] [k]

#include <cstdio>
#include <cstdlib>

#include "squeezekit/squeezekit.hpp"

namespace sk = squeezekit;

int main(int argc, char** argv) {
  const int n = argc > 1 ? std::atoi(argv[1]) : 20;
  const int k = argc > 2 ? std::atoi(argv[2]) : 1;
  try {
    std::printf("%6s %14s %14s %14s\n", "a", "closed", "generic", "scan");
    for (int i = 0; i <= 20; ++i) {
      const sk::FamilyParams p(n, k, i / 20.0);
      const auto c = sk::xi_closed_form_family(p);
      if (c.degenerate) {
        std::printf("%6.2f %14s\n", p.a(), "(no mean spin)");
        continue;
      }
      std::printf("%6.2f %14.10f %14.10f %14.10f\n", p.a(), c.value(), sk::xi(p).value(),
                  sk::xi_direction_scan(sk::canonical_amplitudes(p)).value());
    }
    const auto low = sk::squeezing_threshold(n, k, sk::ThresholdSide::low);
    if (low.a_star) {
      std::printf("squeezed for a > %.10f\n", *low.a_star);
    } else if (low.degenerate_at_zero) {
      std::printf("squeezed arbitrarily close to a = 0\n");
    }
  } catch (const sk::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
