// Copyright 2026 The riemann-sheets Authors.
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

// Trigonometry with the angle measured in half-turns (units of pi).
//
// Angles on the cut and on the coordinate axes are exact small rationals in
// half-turns, so sin_pi(1) == 0 and cos_pi(0.5) == 0 exactly. This is what
// lets the two lips of a continuous seam evaluate to identical bits.

#include <cmath>
#include <numbers>

namespace riemann {

/// Reduces x (half-turns) to (-1, 1]. Exact for every finite x.
inline double reduce_half_turns(double x) {
  x = std::fmod(x, 2.0);
  if (x > 1.0) x -= 2.0;
  if (x <= -1.0) x += 2.0;
  return x;
}

inline double sin_pi(double x) {
  x = reduce_half_turns(x);
  const double a = std::fabs(x);
  // sin(pi a) == sin(pi (1 - a)); 1 - a is exact for a in [0.5, 1].
  const double s = a <= 0.5 ? std::sin(std::numbers::pi * a)
                            : std::sin(std::numbers::pi * (1.0 - a));
  return std::signbit(x) ? -s : s;
}

inline double cos_pi(double x) {
  const double a = std::fabs(reduce_half_turns(x));
  if (a == 0.5) return 0.0;
  return a < 0.5 ? std::cos(std::numbers::pi * a)
                 : -std::cos(std::numbers::pi * (1.0 - a));
}

}  // namespace riemann
