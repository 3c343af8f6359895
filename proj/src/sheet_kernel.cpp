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

// Domain sampling and per-sheet lifting. The lifting loop is the only
// data-parallel part of the pipeline; the serial reference shares the
// per-point kernel so both paths produce identical bits.

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include "riemann/errors.hpp"
#include "riemann/half_turn.hpp"
#include "riemann/mesh.hpp"

namespace riemann {

namespace {

double radius_at(const DomainGrid& grid, int row) {
  if (row == 0) return grid.r_min;
  if (row == grid.n_r - 1) return grid.r_max;
  const double s = static_cast<double>(row) / (grid.n_r - 1);
  if (grid.spacing == RadialSpacing::Log) {
    return std::exp(std::log(grid.r_min) + s * (std::log(grid.r_max) - std::log(grid.r_min)));
  }
  return grid.r_min + s * (grid.r_max - grid.r_min);
}

double turns_at(const DomainGrid& grid, int column) {
  return static_cast<double>(2 * column - grid.n_theta) / grid.n_theta;
}

Complex position(const DomainGrid& grid, double r, int column) {
  // Both lips sit exactly on the negative real axis.
  if (column == 0 || column == grid.n_theta) return {-r, 0.0};
  const double t = turns_at(grid, column);
  return {r * cos_pi(t), r * sin_pi(t)};
}

SurfacePoint lift(PolarPoint p, Complex z, const IndexedFunction& f, BranchIndex k,
                  CharismaKind kind) {
  SurfacePoint s;
  s.x = z.real();
  s.y = z.imag();
  s.c = evaluate_charisma(p, k, f, kind);
  s.k = k;
  s.w = branch_value(p, f, k);
  s.domain = p;
  return s;
}

Sheet make_empty_sheet(const IndexedFunction& f, BranchIndex k, CharismaKind kind,
                       const DomainGrid& grid) {
  grid.validate();
  require_compatible(kind, f);
  if (!f.admits(k)) {
    throw BranchIndexError("branch " + std::to_string(k) + " is not admissible for " + f.name());
  }
  Sheet sheet;
  sheet.function = f;
  sheet.charisma = kind;
  sheet.grid = grid;
  sheet.k = k;
  sheet.points.resize(grid.size());
  return sheet;
}

void lift_row(Sheet& sheet, int row) {
  const DomainGrid& g = sheet.grid;
  const double r = radius_at(g, row);
  const std::size_t base = static_cast<std::size_t>(row) * g.columns();
  for (int j = 0; j < g.columns(); ++j) {
    sheet.points[base + j] =
        lift(PolarPoint{r, turns_at(g, j)}, position(g, r, j), sheet.function, sheet.k,
             sheet.charisma);
  }
}

void triangulate(Sheet& sheet) {
  const DomainGrid& g = sheet.grid;
  const auto cols = static_cast<std::uint32_t>(g.columns());
  // Phase charisma wraps from pi to -pi inside the top sheet of an even root.
  const bool may_wrap = sheet.charisma.tag == CharismaTag::Phase;
  auto wraps = [&](const Triangle& t) {
    const double a = sheet.points[t[0]].c, b = sheet.points[t[1]].c, c = sheet.points[t[2]].c;
    return std::fabs(a - b) > kPi || std::fabs(b - c) > kPi || std::fabs(a - c) > kPi;
  };

  sheet.faces.clear();
  sheet.faces.reserve(2 * static_cast<std::size_t>(g.n_r - 1) * g.n_theta);
  for (std::uint32_t i = 0; i + 1 < static_cast<std::uint32_t>(g.n_r); ++i) {
    for (std::uint32_t j = 0; j + 1 < cols; ++j) {
      const std::uint32_t v00 = i * cols + j;
      const std::uint32_t v10 = (i + 1) * cols + j;
      const std::uint32_t v11 = (i + 1) * cols + j + 1;
      const std::uint32_t v01 = i * cols + j + 1;
      for (const Triangle& t : {Triangle{v00, v10, v11}, Triangle{v00, v11, v01}}) {
        if (may_wrap && wraps(t)) continue;
        sheet.faces.push_back(t);
      }
    }
  }
}

}  // namespace

void DomainGrid::validate() const {
  if (!std::isfinite(r_min) || !std::isfinite(r_max)) throw InvalidGrid("radii must be finite");
  if (!(r_min > 0.0)) throw InvalidGrid("r_min must be > 0 (the branch point is excluded)");
  if (!(r_max > r_min)) throw InvalidGrid("r_max must exceed r_min");
  if (n_r < 2) throw InvalidGrid("n_r must be >= 2");
  if (n_theta < 8) throw InvalidGrid("n_theta must be >= 8");
  if (static_cast<double>(n_r) * (n_theta + 1) > 1e8) {
    throw InvalidGrid("grid too large");
  }
}

DomainSamples sample_domain(const DomainGrid& grid) {
  grid.validate();
  DomainSamples out;
  out.rows = grid.rows();
  out.columns = grid.columns();
  out.polar.reserve(grid.size());
  out.points.reserve(grid.size());
  for (int i = 0; i < grid.rows(); ++i) {
    const double r = radius_at(grid, i);
    for (int j = 0; j < grid.columns(); ++j) {
      out.polar.push_back(PolarPoint{r, turns_at(grid, j)});
      out.points.push_back(position(grid, r, j));
    }
  }
  return out;
}

Sheet build_sheet(const IndexedFunction& f, BranchIndex k, CharismaKind kind,
                  const DomainGrid& grid) {
  Sheet sheet = make_empty_sheet(f, k, kind, grid);
#if defined(RIEMANN_HAVE_OPENMP)
#pragma omp parallel for schedule(static)
#endif
  for (int i = 0; i < grid.rows(); ++i) {
    lift_row(sheet, i);
  }
  triangulate(sheet);
  return sheet;
}

namespace reference {

Sheet build_sheet(const IndexedFunction& f, BranchIndex k, CharismaKind kind,
                  const DomainGrid& grid) {
  Sheet sheet = make_empty_sheet(f, k, kind, grid);
  for (int i = 0; i < grid.rows(); ++i) {
    lift_row(sheet, i);
  }
  triangulate(sheet);
  return sheet;
}

}  // namespace reference

}  // namespace riemann
