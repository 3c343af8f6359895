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

#include "riemann/mesh.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <optional>
#include <string>

#include "riemann/errors.hpp"

namespace riemann {

namespace {

constexpr std::array<Rgb, 6> kPalette = {{
    {220, 60, 50},    // k = 0 mod 6: red
    {60, 110, 220},   // 1: blue
    {240, 180, 40},   // 2: amber
    {150, 80, 190},   // 3: purple
    {40, 170, 170},   // 4: teal
    {60, 170, 70},    // 5 (k = -1): green
}};

double area2(const SurfacePoint& a, const SurfacePoint& b, const SurfacePoint& c) {
  const double ux = b.x - a.x, uy = b.y - a.y, uz = b.c - a.c;
  const double vx = c.x - a.x, vy = c.y - a.y, vz = c.c - a.c;
  const double nx = uy * vz - uz * vy;
  const double ny = uz * vx - ux * vz;
  const double nz = ux * vy - uy * vx;
  return std::sqrt(nx * nx + ny * ny + nz * nz);
}

void check_compatible(std::span<const Sheet> sheets) {
  if (sheets.empty()) throw GridMismatch("no sheets to assemble");
  const Sheet& first = sheets.front();
  if (static_cast<double>(first.grid.size()) * sheets.size() >= UINT32_MAX) {
    throw GridMismatch("surface exceeds 32-bit vertex indexing");
  }
  for (std::size_t s = 0; s < sheets.size(); ++s) {
    const Sheet& sheet = sheets[s];
    if (!(sheet.grid == first.grid)) throw GridMismatch("sheets were built on different grids");
    if (!(sheet.function == first.function)) throw GridMismatch("sheets mix functions");
    if (!(sheet.charisma == first.charisma)) throw GridMismatch("sheets mix charisma kinds");
    if (sheet.points.size() != sheet.grid.size()) throw GridMismatch("sheet size does not match its grid");
    for (std::size_t t = 0; t < s; ++t) {
      if (sheets[t].k == sheet.k) {
        throw GridMismatch("branch " + std::to_string(sheet.k) + " appears twice");
      }
    }
  }
}

}  // namespace

Rgb branch_color(BranchIndex k) {
  const auto m = static_cast<std::size_t>(((k % 6) + 6) % 6);
  return kPalette[m];
}

SurfaceMesh assemble_surface(std::span<const Sheet> sheets, const AssembleOptions& options) {
  check_compatible(sheets);

  const Sheet& first = sheets.front();
  const DomainGrid& grid = first.grid;
  const std::uint32_t per_sheet = static_cast<std::uint32_t>(grid.size());
  const std::uint32_t cols = static_cast<std::uint32_t>(grid.columns());
  const std::uint32_t last_col = cols - 1;
  const std::uint32_t total = per_sheet * static_cast<std::uint32_t>(sheets.size());

  auto find_sheet = [&](BranchIndex k) -> std::optional<std::uint32_t> {
    for (std::uint32_t s = 0; s < sheets.size(); ++s) {
      if (sheets[s].k == k) return s;
    }
    return std::nullopt;
  };
  auto upper_lip = [&](std::uint32_t s, int row) { return s * per_sheet + row * cols + last_col; };
  auto lower_lip = [&](std::uint32_t s, int row) { return s * per_sheet + row * cols; };

  struct PendingSeam {
    Seam seam;
    std::uint32_t upper_sheet;
    std::uint32_t lower_sheet;
  };
  std::vector<PendingSeam> pending;
  for (std::uint32_t s = 0; s < sheets.size(); ++s) {
    const BranchIndex next = first.function.successor(sheets[s].k);
    const auto t = find_sheet(next);
    if (!t || *t == s) continue;

    PendingSeam p{Seam{sheets[s].k, next, 0.0, 0.0, false, {}}, s, *t};
    double sum = 0.0;
    for (int i = 0; i < grid.rows(); ++i) {
      const double gap = std::fabs(sheets[s].points[i * cols + last_col].c -
                                   sheets[*t].points[i * cols].c);
      p.seam.max_gap = std::max(p.seam.max_gap, gap);
      sum += gap;
    }
    p.seam.mean_gap = sum / grid.rows();
    p.seam.welded = options.weld && p.seam.max_gap <= options.weld_tol;
    pending.push_back(std::move(p));
  }

  // Lower-lip vertices of welded seams collapse onto the matching upper lip.
  // Upper-lip vertices are never removed, so one level of redirection suffices.
  std::vector<std::uint32_t> target(total);
  std::iota(target.begin(), target.end(), 0u);
  for (const auto& p : pending) {
    if (!p.seam.welded) continue;
    for (int i = 0; i < grid.rows(); ++i) {
      target[lower_lip(p.lower_sheet, i)] = upper_lip(p.upper_sheet, i);
    }
  }

  SurfaceMesh mesh;
  mesh.function = first.function;
  mesh.charisma = first.charisma;
  mesh.grid = grid;

  constexpr std::uint32_t kRemoved = UINT32_MAX;
  std::vector<std::uint32_t> compact(total, kRemoved);
  for (std::uint32_t s = 0; s < sheets.size(); ++s) {
    mesh.sheets.push_back(sheets[s].k);
    for (std::uint32_t v = 0; v < per_sheet; ++v) {
      const std::uint32_t g = s * per_sheet + v;
      if (target[g] != g) continue;
      compact[g] = static_cast<std::uint32_t>(mesh.vertices.size());
      mesh.vertices.push_back(sheets[s].points[v]);
      mesh.colors.push_back(branch_color(sheets[s].k));
    }
  }
  auto resolve = [&](std::uint32_t g) { return compact[target[g]]; };

  auto emit = [&](Triangle t, FaceOrigin origin) {
    if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) return;
    if (area2(mesh.vertices[t[0]], mesh.vertices[t[1]], mesh.vertices[t[2]]) == 0.0) return;
    mesh.faces.push_back(t);
    mesh.face_origin.push_back(origin);
  };

  for (std::uint32_t s = 0; s < sheets.size(); ++s) {
    const std::uint32_t base = s * per_sheet;
    for (const Triangle& f : sheets[s].faces) {
      emit({resolve(base + f[0]), resolve(base + f[1]), resolve(base + f[2])},
           FaceOrigin{sheets[s].k, false});
    }
  }

  const bool walls = options.walls && first.charisma.tag == CharismaTag::Index;
  for (auto& p : pending) {
    if (p.seam.welded) {
      for (int i = 0; i < grid.rows(); ++i) {
        p.seam.joined.push_back(resolve(upper_lip(p.upper_sheet, i)));
      }
      mesh.welded = true;
    } else if (walls) {
      for (int i = 0; i + 1 < grid.rows(); ++i) {
        const auto u0 = resolve(upper_lip(p.upper_sheet, i));
        const auto u1 = resolve(upper_lip(p.upper_sheet, i + 1));
        const auto l0 = resolve(lower_lip(p.lower_sheet, i));
        const auto l1 = resolve(lower_lip(p.lower_sheet, i + 1));
        emit({u0, u1, l1}, FaceOrigin{p.seam.upper_k, true});
        emit({u0, l1, l0}, FaceOrigin{p.seam.upper_k, true});
      }
    }
    mesh.seams.push_back(std::move(p.seam));
  }
  return mesh;
}

std::vector<SeamStats> seam_report(const SurfaceMesh& mesh) {
  std::vector<SeamStats> out;
  out.reserve(mesh.seams.size());
  for (const Seam& s : mesh.seams) {
    out.push_back({s.upper_k, s.lower_k, s.max_gap, s.mean_gap});
  }
  return out;
}

SurfaceMesh build_surface(const IndexedFunction& f, std::span<const BranchIndex> branches,
                          CharismaKind kind, const DomainGrid& grid,
                          const AssembleOptions& options) {
  std::vector<Sheet> sheets;
  sheets.reserve(branches.size());
  for (BranchIndex k : branches) sheets.push_back(build_sheet(f, k, kind, grid));
  return assemble_surface(sheets, options);
}

}  // namespace riemann
