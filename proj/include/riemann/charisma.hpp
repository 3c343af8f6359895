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

// Charisma: the real height that lifts a domain point z on branch k off the
// complex plane. Every kind is computed from the range value w = f_k(z),
// never from z directly.
//
//   Index  c = k                       any function
//   Phase  c = ph w                    roots
//   Sin    c = sin(ph w)  (or Im w)    roots
//   Cos    c = cos(ph w)               roots
//   Imag   c = Im ln_k z               log

#include <optional>
#include <string_view>

#include "riemann/branches.hpp"

namespace riemann {

enum class CharismaTag { Index, Phase, Sin, Cos, Imag };

struct CharismaKind {
  CharismaTag tag = CharismaTag::Sin;
  /// Sin only: use Im w instead of sin(ph w). The two differ by |w|.
  bool use_range_imag = false;

  friend bool operator==(const CharismaKind&, const CharismaKind&) = default;
};

std::string_view to_string(CharismaTag tag);
std::optional<CharismaTag> parse_charisma_tag(std::string_view name);

bool compatible(CharismaKind kind, const IndexedFunction& f);
/// Throws IncompatibleCharisma.
void require_compatible(CharismaKind kind, const IndexedFunction& f);

double evaluate_charisma(Complex z, BranchIndex k, const IndexedFunction& f, CharismaKind kind);
/// Polar form; accepts the lower lip of the cut (turns == -1).
double evaluate_charisma(PolarPoint z, BranchIndex k, const IndexedFunction& f, CharismaKind kind);

}  // namespace riemann
