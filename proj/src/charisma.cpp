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

#include "riemann/charisma.hpp"

#include <string>

#include "riemann/errors.hpp"
#include "riemann/half_turn.hpp"

namespace riemann {

std::string_view to_string(CharismaTag tag) {
  switch (tag) {
    case CharismaTag::Index: return "index";
    case CharismaTag::Phase: return "phase";
    case CharismaTag::Sin: return "sin";
    case CharismaTag::Cos: return "cos";
    case CharismaTag::Imag: return "imag";
  }
  return "?";
}

std::optional<CharismaTag> parse_charisma_tag(std::string_view name) {
  for (auto tag : {CharismaTag::Index, CharismaTag::Phase, CharismaTag::Sin, CharismaTag::Cos,
                   CharismaTag::Imag}) {
    if (to_string(tag) == name) return tag;
  }
  return std::nullopt;
}

bool compatible(CharismaKind kind, const IndexedFunction& f) {
  switch (kind.tag) {
    case CharismaTag::Index: return true;
    case CharismaTag::Phase:
    case CharismaTag::Sin:
    case CharismaTag::Cos: return f.is_root();
    case CharismaTag::Imag: return f.is_log();
  }
  return false;
}

void require_compatible(CharismaKind kind, const IndexedFunction& f) {
  if (!compatible(kind, f)) {
    throw IncompatibleCharisma("charisma '" + std::string(to_string(kind.tag)) +
                               "' is not defined for " + f.name());
  }
}

double evaluate_charisma(PolarPoint z, BranchIndex k, const IndexedFunction& f,
                         CharismaKind kind) {
  require_compatible(kind, f);
  switch (kind.tag) {
    case CharismaTag::Index:
      // Still evaluate the branch so a bad z or k is reported, not lifted.
      (void)branch_value(z, f, k);
      return k;
    case CharismaTag::Phase: return root_phase_turns(z, f, k) * kPi;
    case CharismaTag::Sin:
      if (kind.use_range_imag) return root_branch(z, f, k).imag();
      return sin_pi(root_phase_turns(z, f, k));
    case CharismaTag::Cos: return cos_pi(root_phase_turns(z, f, k));
    case CharismaTag::Imag: return log_branch_imag(z, k);
  }
  return 0.0;
}

double evaluate_charisma(Complex z, BranchIndex k, const IndexedFunction& f, CharismaKind kind) {
  require_compatible(kind, f);
  return evaluate_charisma(to_polar(z), k, f, kind);
}

}  // namespace riemann
