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

#include "riemann/export.hpp"

#include <array>
#include <charconv>
#include <system_error>

namespace riemann {

namespace {

std::string_view spacing_name(RadialSpacing s) {
  return s == RadialSpacing::Log ? "log" : "linear";
}

bool has_walls(const SurfaceMesh& mesh) {
  for (const auto& o : mesh.face_origin) {
    if (o.wall) return true;
  }
  return false;
}

void write_header_json(std::ostream& out, const SurfaceMesh& mesh) {
  out << "  \"schema\": 1,\n";
  out << "  \"function\": \"" << mesh.function.name() << "\",\n";
  out << "  \"charisma\": \"" << to_string(mesh.charisma.tag) << "\",\n";
  out << "  \"use_range_imag\": " << (mesh.charisma.use_range_imag ? "true" : "false") << ",\n";
  out << "  \"grid\": {\"r_min\": " << format_real(mesh.grid.r_min)
      << ", \"r_max\": " << format_real(mesh.grid.r_max) << ", \"n_r\": " << mesh.grid.n_r
      << ", \"n_theta\": " << mesh.grid.n_theta << ", \"spacing\": \""
      << spacing_name(mesh.grid.spacing) << "\"},\n";
  out << "  \"sheets\": [";
  for (std::size_t i = 0; i < mesh.sheets.size(); ++i) {
    out << (i ? ", " : "") << mesh.sheets[i];
  }
  out << "],\n";
  out << "  \"welded\": " << (mesh.welded ? "true" : "false") << ",\n";
}

void write_seams_json(std::ostream& out, const SurfaceMesh& mesh) {
  out << "  \"seams\": [";
  for (std::size_t s = 0; s < mesh.seams.size(); ++s) {
    const Seam& seam = mesh.seams[s];
    out << (s ? ",\n" : "\n") << "    {\"upper_k\": " << seam.upper_k
        << ", \"lower_k\": " << seam.lower_k << ", \"max_gap\": " << format_real(seam.max_gap)
        << ", \"mean_gap\": " << format_real(seam.mean_gap)
        << ", \"welded\": " << (seam.welded ? "true" : "false") << ", \"joined\": [";
    for (std::size_t i = 0; i < seam.joined.size(); ++i) {
      out << (i ? ", " : "") << seam.joined[i];
    }
    out << "]}";
  }
  out << (mesh.seams.empty() ? "]" : "\n  ]");
}

}  // namespace

std::string_view to_string(MeshFormat format) {
  switch (format) {
    case MeshFormat::Ply: return "ply";
    case MeshFormat::Obj: return "obj";
    case MeshFormat::Json: return "json";
    case MeshFormat::Csv: return "csv";
  }
  return "?";
}

std::optional<MeshFormat> parse_mesh_format(std::string_view name) {
  for (auto f : {MeshFormat::Ply, MeshFormat::Obj, MeshFormat::Json, MeshFormat::Csv}) {
    if (to_string(f) == name) return f;
  }
  return std::nullopt;
}

std::string_view extension(MeshFormat format) {
  switch (format) {
    case MeshFormat::Ply: return ".ply";
    case MeshFormat::Obj: return ".obj";
    case MeshFormat::Json: return ".json";
    case MeshFormat::Csv: return ".csv";
  }
  return "";
}

std::string format_real(double x) {
  std::array<char, 32> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  if (ec != std::errc()) return "nan";
  return std::string(buf.data(), end);
}

void write_ply(std::ostream& out, const SurfaceMesh& mesh) {
  out << "ply\n"
      << "format ascii 1.0\n"
      << "comment function " << mesh.function.name() << "\n"
      << "comment charisma " << to_string(mesh.charisma.tag) << "\n"
      << "element vertex " << mesh.vertices.size() << "\n"
      << "property double x\n"
      << "property double y\n"
      << "property double z\n"
      << "property uchar red\n"
      << "property uchar green\n"
      << "property uchar blue\n"
      << "element face " << mesh.faces.size() << "\n"
      << "property list uchar int vertex_indices\n"
      << "end_header\n";
  for (std::size_t i = 0; i < mesh.vertices.size(); ++i) {
    const SurfacePoint& v = mesh.vertices[i];
    const Rgb& col = mesh.colors[i];
    out << format_real(v.x) << ' ' << format_real(v.y) << ' ' << format_real(v.c) << ' '
        << int(col.r) << ' ' << int(col.g) << ' ' << int(col.b) << '\n';
  }
  for (const Triangle& t : mesh.faces) {
    out << "3 " << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
  }
}

void write_obj(std::ostream& out, const SurfaceMesh& mesh, std::string_view mtl_name) {
  out << "# " << mesh.function.name() << " charisma " << to_string(mesh.charisma.tag) << "\n";
  if (!mtl_name.empty()) out << "mtllib " << mtl_name << "\n";
  for (const SurfacePoint& v : mesh.vertices) {
    out << "v " << format_real(v.x) << ' ' << format_real(v.y) << ' ' << format_real(v.c) << '\n';
  }
  auto emit_group = [&](std::string_view name, auto&& select) {
    out << "g " << name << "\nusemtl " << name << "\n";
    for (std::size_t f = 0; f < mesh.faces.size(); ++f) {
      if (!select(mesh.face_origin[f])) continue;
      const Triangle& t = mesh.faces[f];
      out << "f " << t[0] + 1 << ' ' << t[1] + 1 << ' ' << t[2] + 1 << '\n';
    }
  };
  for (BranchIndex k : mesh.sheets) {
    emit_group("branch_" + std::to_string(k),
               [k](const FaceOrigin& o) { return !o.wall && o.k == k; });
  }
  if (has_walls(mesh)) {
    emit_group("walls", [](const FaceOrigin& o) { return o.wall; });
  }
}

void write_mtl(std::ostream& out, const SurfaceMesh& mesh) {
  auto kd = [&](Rgb c) {
    return format_real(c.r / 255.0) + ' ' + format_real(c.g / 255.0) + ' ' +
           format_real(c.b / 255.0);
  };
  for (BranchIndex k : mesh.sheets) {
    out << "newmtl branch_" << k << "\nKd " << kd(branch_color(k)) << "\n\n";
  }
  if (has_walls(mesh)) out << "newmtl walls\nKd 0.5 0.5 0.5\n\n";
}

void write_json(std::ostream& out, const SurfaceMesh& mesh) {
  out << "{\n";
  write_header_json(out, mesh);
  out << "  \"vertices\": [";
  for (std::size_t i = 0; i < mesh.vertices.size(); ++i) {
    const SurfacePoint& v = mesh.vertices[i];
    const Rgb& col = mesh.colors[i];
    out << (i ? ",\n" : "\n") << "    {\"x\": " << format_real(v.x) << ", \"y\": " << format_real(v.y)
        << ", \"c\": " << format_real(v.c) << ", \"k\": " << v.k << ", \"w\": ["
        << format_real(v.w.real()) << ", " << format_real(v.w.imag()) << "], \"color\": ["
        << int(col.r) << ", " << int(col.g) << ", " << int(col.b) << "]}";
  }
  out << "\n  ],\n  \"faces\": [";
  for (std::size_t f = 0; f < mesh.faces.size(); ++f) {
    const Triangle& t = mesh.faces[f];
    out << (f ? ", " : "") << '[' << t[0] << ", " << t[1] << ", " << t[2] << ']';
  }
  out << "],\n  \"face_k\": [";
  for (std::size_t f = 0; f < mesh.faces.size(); ++f) {
    out << (f ? ", " : "") << mesh.face_origin[f].k;
  }
  out << "],\n  \"wall_faces\": [";
  bool first = true;
  for (std::size_t f = 0; f < mesh.faces.size(); ++f) {
    if (!mesh.face_origin[f].wall) continue;
    out << (first ? "" : ", ") << f;
    first = false;
  }
  out << "],\n";
  write_seams_json(out, mesh);
  out << "\n}\n";
}

void write_csv(std::ostream& out, const SurfaceMesh& mesh) {
  out << "x,y,c,k\n";
  for (const SurfacePoint& v : mesh.vertices) {
    out << format_real(v.x) << ',' << format_real(v.y) << ',' << format_real(v.c) << ',' << v.k
        << '\n';
  }
}

void write_seam_report(std::ostream& out, const SurfaceMesh& mesh) {
  out << "{\n";
  write_header_json(out, mesh);
  write_seams_json(out, mesh);
  out << "\n}\n";
}

}  // namespace riemann
