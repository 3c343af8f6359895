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

// Text serializers for SurfaceMesh. Reals are written in the shortest
// decimal form that round-trips to the same double, so output is
// byte-deterministic and every coordinate can be recomputed exactly.
//
//   PLY   ascii 1.0; vertex x y z(=c) double + red green blue uchar;
//         face list uchar int vertex_indices
//   OBJ   v x y c; one group + material per branch (and "walls"); 1-based f
//   MTL   newmtl branch_<k> with Kd from the branch palette
//   JSON  {"schema": 1, ...} with full SurfacePoint records
//   CSV   header x,y,c,k
//   seams {"schema": 1, "sheets": [...], "seams": [...]}

#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "riemann/mesh.hpp"

namespace riemann {

enum class MeshFormat { Ply, Obj, Json, Csv };

std::string_view to_string(MeshFormat format);
std::optional<MeshFormat> parse_mesh_format(std::string_view name);
/// ".ply", ".obj", ...
std::string_view extension(MeshFormat format);

/// Shortest round-trip decimal form of x.
std::string format_real(double x);

void write_ply(std::ostream& out, const SurfaceMesh& mesh);
/// `mtl_name` is referenced by the mtllib line; pass an empty string to omit it.
void write_obj(std::ostream& out, const SurfaceMesh& mesh, std::string_view mtl_name);
void write_mtl(std::ostream& out, const SurfaceMesh& mesh);
void write_json(std::ostream& out, const SurfaceMesh& mesh);
void write_csv(std::ostream& out, const SurfaceMesh& mesh);
void write_seam_report(std::ostream& out, const SurfaceMesh& mesh);

}  // namespace riemann
