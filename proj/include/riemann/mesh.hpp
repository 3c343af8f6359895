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

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "riemann/branches.hpp"
#include "riemann/charisma.hpp"

namespace riemann {

enum class RadialSpacing { Linear, Log };

/// Polar lattice over the annulus r_min <= |z| <= r_max.
///
/// Columns j = 0..n_theta sample theta = -pi + 2 pi j / n_theta. Column 0 is
/// the lower lip of the cut and column n_theta the upper lip: the two share
/// positions (-r, 0) but are distinct vertices, so the cut is always a mesh
/// boundary of a single sheet.
struct DomainGrid {
  double r_min = 0.05;
  double r_max = 2.0;
  int n_r = 40;
  int n_theta = 240;
  RadialSpacing spacing = RadialSpacing::Linear;

  int rows() const { return n_r; }
  int columns() const { return n_theta + 1; }
  std::size_t size() const { return static_cast<std::size_t>(rows()) * columns(); }

  /// Throws InvalidGrid.
  void validate() const;

  friend bool operator==(const DomainGrid&, const DomainGrid&) = default;
};

/// Row-major n_r x (n_theta + 1) lattice: index = row * columns + column,
/// rows ordered by increasing radius, columns by increasing phase.
struct DomainSamples {
  int rows = 0;
  int columns = 0;
  std::vector<PolarPoint> polar;
  std::vector<Complex> points;

  std::size_t index(int row, int column) const {
    return static_cast<std::size_t>(row) * columns + column;
  }
};

DomainSamples sample_domain(const DomainGrid& grid);

/// A domain sample lifted to 3D. (x, y) = z, c is the charisma, w = f_k(z).
/// `domain` keeps the polar coordinates c was computed from.
struct SurfacePoint {
  double x = 0.0;
  double y = 0.0;
  double c = 0.0;
  BranchIndex k = 0;
  Complex w;
  PolarPoint domain{};
};

using Triangle = std::array<std::uint32_t, 3>;

struct Sheet {
  IndexedFunction function = IndexedFunction::root(3);
  CharismaKind charisma;
  DomainGrid grid;
  BranchIndex k = 0;
  std::vector<SurfacePoint> points;  // same layout as DomainSamples
  std::vector<Triangle> faces;
};

/// Lifts every lattice point of `grid` onto branch k. Two triangles per
/// quad, split along the (low r, low theta)-(high r, high theta) diagonal.
///
/// Phase charisma on the top branch of an even root jumps from pi to -pi
/// inside the sheet (at theta = 0); quads straddling that jump are not
/// triangulated.
///
/// Rows are built in parallel when OpenMP is available; the result is
/// bit-identical to reference::build_sheet.
Sheet build_sheet(const IndexedFunction& f, BranchIndex k, CharismaKind kind,
                  const DomainGrid& grid);

namespace reference {
/// Single-threaded reference for build_sheet.
Sheet build_sheet(const IndexedFunction& f, BranchIndex k, CharismaKind kind,
                  const DomainGrid& grid);
}  // namespace reference

struct Rgb {
  std::uint8_t r, g, b;
  friend bool operator==(const Rgb&, const Rgb&) = default;
};

/// Fixed cyclic palette indexed by k mod 6.
Rgb branch_color(BranchIndex k);

/// Gap between the upper lip (theta = pi) of sheet `upper_k` and the lower
/// lip (theta = -pi) of its continuation `lower_k`, measured row by row in
/// charisma units before any welding.
struct Seam {
  BranchIndex upper_k = 0;
  BranchIndex lower_k = 0;
  double max_gap = 0.0;
  double mean_gap = 0.0;
  bool welded = false;
  /// For welded seams: the surviving (upper-lip) vertex of each merged pair,
  /// indexed into SurfaceMesh::vertices, by increasing radius.
  std::vector<std::uint32_t> joined;
};

struct FaceOrigin {
  BranchIndex k = 0;
  bool wall = false;
};

struct SurfaceMesh {
  IndexedFunction function = IndexedFunction::root(3);
  CharismaKind charisma;
  DomainGrid grid;
  std::vector<BranchIndex> sheets;
  std::vector<SurfacePoint> vertices;
  std::vector<Triangle> faces;
  std::vector<FaceOrigin> face_origin;  // parallel to faces
  std::vector<Rgb> colors;              // parallel to vertices
  std::vector<Seam> seams;
  bool welded = false;  // at least one seam was welded
};

struct AssembleOptions {
  bool weld = true;
  double weld_tol = 1e-9;
  /// Index charisma only: vertical wall quads between the lips of each
  /// unwelded seam.
  bool walls = false;
};

/// Concatenates sheets and, when requested, welds each seam whose max gap
/// is within weld_tol. Throws GridMismatch when sheets disagree on grid,
/// function or charisma, or repeat a branch.
SurfaceMesh assemble_surface(std::span<const Sheet> sheets, const AssembleOptions& options = {});

struct SeamStats {
  BranchIndex upper_k;
  BranchIndex lower_k;
  double max_gap;
  double mean_gap;
};

std::vector<SeamStats> seam_report(const SurfaceMesh& mesh);

/// Builds one sheet per k and assembles them.
SurfaceMesh build_surface(const IndexedFunction& f, std::span<const BranchIndex> branches,
                          CharismaKind kind, const DomainGrid& grid,
                          const AssembleOptions& options = {});

}  // namespace riemann
