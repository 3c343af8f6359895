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

#include "riemann/branches.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "riemann/errors.hpp"
#include "riemann/half_turn.hpp"

namespace riemann {

namespace {

void require_nonzero_finite(Complex z, const char* op) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError(std::string(op) + ": non-finite argument");
  }
  if (z.real() == 0.0 && z.imag() == 0.0) {
    throw DomainError(std::string(op) + ": z = 0 is the branch point");
  }
}

void require_valid(PolarPoint z, const char* op) {
  if (!std::isfinite(z.modulus) || !std::isfinite(z.turns)) {
    throw DomainError(std::string(op) + ": non-finite argument");
  }
  if (!(z.modulus > 0.0)) {
    throw DomainError(std::string(op) + ": modulus must be positive");
  }
  if (z.turns < -1.0 || z.turns > 1.0) {
    throw DomainError(std::string(op) + ": phase outside [-pi, pi]");
  }
}

void require_root(const IndexedFunction& f, const char* op) {
  if (!f.is_root()) throw std::invalid_argument(std::string(op) + ": function is not a root");
}

void require_admissible(const IndexedFunction& f, BranchIndex k, const char* op) {
  if (!f.admits(k)) {
    throw BranchIndexError(std::string(op) + ": branch " + std::to_string(k) +
                           " is not admissible for " + f.name());
  }
}

BranchIndex checked_index(double k, const char* op) {
  if (!(k >= std::numeric_limits<BranchIndex>::min() &&
        k <= std::numeric_limits<BranchIndex>::max())) {
    throw DomainError(std::string(op) + ": branch index out of representable range");
  }
  return static_cast<BranchIndex>(k);
}

double nth_root_modulus(double r, int n) {
  switch (n) {
    case 2: return std::sqrt(r);
    case 3: return std::cbrt(r);
    default: return std::pow(r, 1.0 / n);
  }
}

}  // namespace

IndexedFunction IndexedFunction::root(int n) {
  if (n < 2) throw std::invalid_argument("root degree must be >= 2, got " + std::to_string(n));
  return IndexedFunction(FunctionKind::Root, n);
}

std::optional<std::pair<BranchIndex, BranchIndex>> IndexedFunction::index_bounds() const {
  if (is_log()) return std::nullopt;
  if (degree_ % 2 == 1) return std::pair{-(degree_ - 1) / 2, (degree_ - 1) / 2};
  return std::pair{-degree_ / 2 + 1, degree_ / 2};
}

bool IndexedFunction::admits(BranchIndex k) const {
  const auto bounds = index_bounds();
  return !bounds || (k >= bounds->first && k <= bounds->second);
}

BranchIndex IndexedFunction::successor(BranchIndex k) const {
  const auto bounds = index_bounds();
  if (!bounds) return k + 1;
  return k == bounds->second ? bounds->first : k + 1;
}

std::string IndexedFunction::name() const {
  return is_log() ? std::string("log") : "root:" + std::to_string(degree_);
}

double principal_phase(Complex z) {
  require_nonzero_finite(z, "principal_phase");
  const double im = z.imag() == 0.0 ? 0.0 : z.imag();
  return std::atan2(im, z.real());
}

double principal_turns(Complex z) {
  // atan2 returns exactly the rounded pi for the negative real axis, so this
  // gives exactly 1 there and exactly +-0.5 on the imaginary axis.
  return principal_phase(z) / kPi;
}

PolarPoint to_polar(Complex z) {
  return PolarPoint{std::abs(z), principal_turns(z)};
}

double log_strip_upper(BranchIndex k) {
  return (2.0 * k + 1.0) * kPi;
}

double log_branch_imag(PolarPoint z, BranchIndex k) {
  require_valid(z, "log_branch");
  return (z.turns + 2.0 * k) * kPi;
}

Complex log_branch(PolarPoint z, BranchIndex k) {
  return {std::log(z.modulus), log_branch_imag(z, k)};
}

Complex log_branch(Complex z, BranchIndex k) {
  require_nonzero_finite(z, "log_branch");
  return log_branch(to_polar(z), k);
}

double root_phase_turns(PolarPoint z, const IndexedFunction& f, BranchIndex k) {
  require_valid(z, "root_branch");
  require_root(f, "root_branch");
  require_admissible(f, k, "root_branch");
  double t = (z.turns + 2.0 * k) / f.degree();
  // Only the top branch of an even root overshoots pi; t - 2 is exact here.
  if (t > 1.0) t -= 2.0;
  return t;
}

Complex root_branch(PolarPoint z, const IndexedFunction& f, BranchIndex k) {
  const double t = root_phase_turns(z, f, k);
  const double m = nth_root_modulus(z.modulus, f.degree());
  return {m * cos_pi(t), m * sin_pi(t)};
}

Complex root_branch(Complex z, const IndexedFunction& f, BranchIndex k) {
  require_nonzero_finite(z, "root_branch");
  return root_branch(to_polar(z), f, k);
}

Complex branch_value(PolarPoint z, const IndexedFunction& f, BranchIndex k) {
  return f.is_log() ? log_branch(z, k) : root_branch(z, f, k);
}

BranchIndex branch_of(Complex w, const IndexedFunction& f) {
  require_nonzero_finite(w, "branch_of");
  if (f.is_log()) {
    const double im = w.imag();
    BranchIndex k = checked_index(std::ceil((im / kPi - 1.0) / 2.0), "branch_of");
    // One-step correction against the exact strip bounds used by log_branch.
    if (im > log_strip_upper(k)) ++k;
    if (im <= log_strip_upper(k - 1)) --k;
    return k;
  }

  const int n = f.degree();
  const double s = principal_turns(w) * n;  // in (-n, n]
  BranchIndex k = static_cast<BranchIndex>(std::ceil((s - 1.0) / 2.0));
  if (s > 2.0 * k + 1.0) ++k;
  if (s <= 2.0 * k - 1.0) --k;
  const auto [lo, hi] = *f.index_bounds();
  if (k < lo) k += n;
  if (k > hi) k -= n;
  return k;
}

bool in_branch_range(Complex y, const IndexedFunction& f, BranchIndex k) {
  if (!std::isfinite(y.real()) || !std::isfinite(y.imag())) return false;
  if (f.is_log()) {
    return y.imag() > log_strip_upper(k - 1) && y.imag() <= log_strip_upper(k);
  }
  if (!f.admits(k) || (y.real() == 0.0 && y.imag() == 0.0)) return false;
  return branch_of(y, f) == k;
}

}  // namespace riemann
