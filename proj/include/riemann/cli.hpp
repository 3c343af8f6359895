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

#include <filesystem>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "riemann/charisma.hpp"
#include "riemann/export.hpp"
#include "riemann/mesh.hpp"

namespace riemann::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,
  kExitIncompatible = 3,
  kExitIo = 4,
  kExitDomain = 5,
};

/// Bad or missing command-line value. `flag()` names the offending option.
class UsageError : public std::runtime_error {
 public:
  UsageError(std::string flag, const std::string& what)
      : std::runtime_error(flag + ": " + what), flag_(std::move(flag)) {}
  const std::string& flag() const { return flag_; }

 private:
  std::string flag_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct JobSpec {
  IndexedFunction function = IndexedFunction::root(3);
  CharismaKind charisma{CharismaTag::Sin, false};
  std::vector<BranchIndex> branches;
  DomainGrid grid;
  bool weld = true;
  double weld_tol = 1e-9;
  bool walls = false;
  MeshFormat format = MeshFormat::Ply;
  std::filesystem::path output;
};

/// Names accepted by --figure: 3a, 3b-range, 4, 5, 6.
std::vector<std::string_view> figure_names();

/// Arguments exclude the program name. Throws UsageError (including for an
/// empty branch range) or IncompatibleCharisma.
JobSpec parse_args(std::span<const std::string> args);

/// Companion files derived from the mesh path.
std::filesystem::path seam_report_path(const std::filesystem::path& mesh_path);
std::filesystem::path material_path(const std::filesystem::path& mesh_path);

/// Builds the surface and writes the mesh plus its `.seams.json` sidecar
/// (and `.mtl` for OBJ). Files are written to temporaries and renamed only
/// once all of them succeeded. Returns the paths written.
///
/// Throws IoError; library errors propagate.
std::vector<std::filesystem::path> run(const JobSpec& job);

/// Full front end: parse, run, report. Returns the process exit code.
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace riemann::cli
