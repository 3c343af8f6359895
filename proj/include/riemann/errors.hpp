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

#include <stdexcept>

namespace riemann {

/// Input lies outside the domain of an operation: the branch point z = 0,
/// or a non-finite component.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Branch index outside the admissible set of an n-th root.
class BranchIndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Charisma kind not defined for the requested function.
class IncompatibleCharisma : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InvalidGrid : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Sheets handed to assembly disagree on grid, function or charisma.
class GridMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace riemann
