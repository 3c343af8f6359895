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

// Test-only reference evaluations. These go through std::complex (std::arg,
// std::log, std::polar) and never touch the library's half-turn arithmetic.

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

namespace oracle {

using C = std::complex<double>;
constexpr double pi = std::numbers::pi;

/// ln z + 2 k pi i via the standard library principal log.
inline C log_k(C z, int k) { return std::log(z) + C(0.0, 2.0 * pi * k); }

/// Branch k of the n-th root: principal root times e^{2 pi i k / n}.
inline C root_k(C z, int n, int k) {
  const C principal = std::polar(std::pow(std::abs(z), 1.0 / n), std::arg(z) / n);
  return principal * std::polar(1.0, 2.0 * pi * k / n);
}

/// All n roots by brute force: every w = r^{1/n} e^{i phi} with
/// phi = (arg z + 2 pi m) / n, m = 0..n-1.
inline std::vector<C> all_roots(C z, int n) {
  std::vector<C> out;
  for (int m = 0; m < n; ++m) {
    out.push_back(std::polar(std::pow(std::abs(z), 1.0 / n), (std::arg(z) + 2.0 * pi * m) / n));
  }
  return out;
}

/// Phase of branch k of the cube root at domain phase theta in [-pi, pi],
/// without wrapping: (theta + 2 pi k) / 3.
inline double cbrt_phase(double theta, int k) { return (theta + 2.0 * pi * k) / 3.0; }

/// Uniform random nonzero z with log-uniform modulus in [lo, hi].
inline C random_z(std::mt19937_64& rng, double lo = 1e-3, double hi = 1e3) {
  std::uniform_real_distribution<double> lm(std::log(lo), std::log(hi));
  std::uniform_real_distribution<double> ph(-pi, pi);
  return std::polar(std::exp(lm(rng)), ph(rng));
}

}  // namespace oracle
