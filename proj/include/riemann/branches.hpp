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

// Indexed branches of the multivalued logarithm and n-th roots.
//
// Every function here has its branch cut on the negative real axis and uses
// the principal phase convention -pi < ph z <= pi. Branch regions in the
// range are half-open and closed on the counter-clockwise (upper) side:
//
//   log:    Im w  in ((2k-1) pi,   (2k+1) pi]
//   root n: ph w  in ((2k-1) pi/n, (2k+1) pi/n]    (taken mod 2 pi)
//
// The branch point z = 0 and non-finite input are rejected with DomainError.

#include <complex>
#include <numbers>
#include <optional>
#include <string>
#include <utility>

namespace riemann {

using Complex = std::complex<double>;
using BranchIndex = int;

inline constexpr double kPi = std::numbers::pi;

enum class FunctionKind { Log, Root };

/// A multivalued inverse together with its admissible branch-index set.
///
/// For Log every integer is admissible. For Root{n} the set has n members:
/// {-(n-1)/2, ..., (n-1)/2} for odd n and {-n/2+1, ..., n/2} for even n, so
/// that k = 0 is always the principal branch.
class IndexedFunction {
 public:
  static IndexedFunction log() { return IndexedFunction(FunctionKind::Log, 0); }
  /// Throws std::invalid_argument when n < 2.
  static IndexedFunction root(int n);

  FunctionKind kind() const { return kind_; }
  bool is_log() const { return kind_ == FunctionKind::Log; }
  bool is_root() const { return kind_ == FunctionKind::Root; }
  /// n for Root{n}; 0 for Log.
  int degree() const { return degree_; }

  bool admits(BranchIndex k) const;
  /// Inclusive [lo, hi] of the admissible set; nullopt for Log (unbounded).
  std::optional<std::pair<BranchIndex, BranchIndex>> index_bounds() const;

  /// Branch reached by leaving branch k across the cut counter-clockwise:
  /// the upper lip of sheet k continues onto the lower lip of this sheet.
  BranchIndex successor(BranchIndex k) const;

  /// "log" or "root:<n>".
  std::string name() const;

  friend bool operator==(const IndexedFunction&, const IndexedFunction&) = default;

 private:
  IndexedFunction(FunctionKind kind, int degree) : kind_(kind), degree_(degree) {}

  FunctionKind kind_;
  int degree_;
};

/// A nonzero domain point in polar form with the phase in half-turns.
///
/// `turns` = ph z / pi. Principal values lie in (-1, 1]; the value -1 is
/// accepted as the limit approached from below the cut (the lower lip), which
/// a Complex cannot represent because -r + 0i always lands on the upper lip.
struct PolarPoint {
  double modulus;
  double turns;
};

/// Principal phase in radians, -pi < theta <= pi. Negative zero imaginary
/// parts count as +0, so negative reals give exactly pi.
double principal_phase(Complex z);

/// Principal phase in half-turns, in (-1, 1].
double principal_turns(Complex z);

PolarPoint to_polar(Complex z);

/// ln|z| + i (ph z + 2 k pi).
Complex log_branch(Complex z, BranchIndex k);
Complex log_branch(PolarPoint z, BranchIndex k);

/// Im(ln_k z) = pi (turns + 2k), computed so that the upper lip of branch k
/// and the lower lip of branch k + 1 give identical bits.
double log_branch_imag(PolarPoint z, BranchIndex k);

/// |z|^(1/n) exp(i (theta + 2 pi k) / n). For n = 3 this is
/// cbrt_0 = r^(1/3) e^{i theta/3}, cbrt_1 = omega cbrt_0, cbrt_{-1} = conj(omega) cbrt_0
/// with omega = e^{2 pi i / 3}. Throws BranchIndexError for inadmissible k.
Complex root_branch(Complex z, const IndexedFunction& f, BranchIndex k);
Complex root_branch(PolarPoint z, const IndexedFunction& f, BranchIndex k);

/// Principal phase of root_branch(z, f, k), in half-turns. On the lower lip
/// of the lowest odd-degree branch this is -1 (the limit value).
double root_phase_turns(PolarPoint z, const IndexedFunction& f, BranchIndex k);

/// Value of branch k of f at z, dispatching on the function kind.
Complex branch_value(PolarPoint z, const IndexedFunction& f, BranchIndex k);

/// The unique k whose range region contains w.
BranchIndex branch_of(Complex w, const IndexedFunction& f);

/// Whether the target y lies in the range of branch k, i.e. whether f_k(x) = y
/// has a solution. For Log: Im y in ((2k-1) pi, (2k+1) pi]. For Root: y != 0
/// and branch_of(y) == k.
bool in_branch_range(Complex y, const IndexedFunction& f, BranchIndex k);
inline bool in_branch_range(double y, const IndexedFunction& f, BranchIndex k) {
  return in_branch_range(Complex(y, 0.0), f, k);
}

/// Upper boundary of the log branch-k strip, (2k+1) pi, rounded once.
double log_strip_upper(BranchIndex k);

}  // namespace riemann
