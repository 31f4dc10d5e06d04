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

// Prints min_a xi and its location for k = 1..5 at a few N.

#include <cstdio>

#include "squeezekit/squeezekit.hpp"

int main() {
  std::printf("%5s %3s %14s %10s\n", "N", "k", "min xi", "argmin a");
  for (int n : {10, 20, 50, 100}) {
    for (int k = 1; k <= 5; ++k) {
      const auto fm = squeezekit::family_minimum(n, k);
      std::printf("%5d %3d %14.10f %10.6f\n", n, k, fm.min_xi, fm.argmin_a);
    }
  }
  return 0;
}
