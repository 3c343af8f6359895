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

#include "riemann/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <optional>
#include <regex>
#include <system_error>

#include "riemann/errors.hpp"

namespace riemann::cli {

namespace {

namespace fs = std::filesystem;

struct HelpRequested {
  std::string text;
};

struct Preset {
  std::string_view name;
  std::string_view function;
  CharismaTag charisma;
  bool walls;
  std::optional<std::pair<BranchIndex, BranchIndex>> branches;
};

constexpr Preset kPresets[] = {
    {"3a", "root:3", CharismaTag::Index, true, std::nullopt},
    {"3b-range", "root:3", CharismaTag::Phase, false, std::nullopt},
    {"4", "root:3", CharismaTag::Sin, false, std::nullopt},
    {"5", "root:3", CharismaTag::Cos, false, std::nullopt},
    {"6", "log", CharismaTag::Imag, false, std::pair{-2, 2}},
};

constexpr std::pair<BranchIndex, BranchIndex> kDefaultLogWindow{-2, 2};
constexpr int kMaxSheets = 256;

std::optional<int> parse_int(std::string_view s) {
  int v = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || end != s.data() + s.size()) return std::nullopt;
  return v;
}

IndexedFunction parse_function(std::string_view s) {
  if (s == "log") return IndexedFunction::log();
  if (s.starts_with("root:")) {
    const auto n = parse_int(s.substr(5));
    if (n && *n >= 2) return IndexedFunction::root(*n);
  }
  throw UsageError("--function", "expected 'log' or 'root:<n>' with n >= 2, got '" +
                                     std::string(s) + "'");
}

std::pair<BranchIndex, BranchIndex> parse_branch_range(std::string_view s) {
  const auto dots = s.find("..");
  std::optional<int> lo, hi;
  if (dots == std::string_view::npos) {
    lo = hi = parse_int(s);
  } else {
    lo = parse_int(s.substr(0, dots));
    hi = parse_int(s.substr(dots + 2));
  }
  if (!lo || !hi) {
    throw UsageError("--branches", "expected '<k_min>..<k_max>' or '<k>', got '" +
                                       std::string(s) + "'");
  }
  return {*lo, *hi};
}

std::vector<BranchIndex> admissible_range(const IndexedFunction& f,
                                          std::pair<BranchIndex, BranchIndex> wanted) {
  auto [lo, hi] = wanted;
  if (const auto bounds = f.index_bounds()) {
    lo = std::max(lo, bounds->first);
    hi = std::min(hi, bounds->second);
  }
  if (static_cast<long long>(hi) - lo >= kMaxSheets) {
    throw UsageError("--branches", "at most " + std::to_string(kMaxSheets) + " sheets");
  }
  std::vector<BranchIndex> out;
  for (BranchIndex k = lo; k <= hi; ++k) out.push_back(k);
  return out;
}

std::string flag_in(const std::string& message) {
  static const std::regex flag(R"(--[A-Za-z][A-Za-z0-9-]*)");
  std::smatch m;
  return std::regex_search(message, m, flag) ? m.str() : std::string("arguments");
}

fs::path temporary_for(const fs::path& path) {
  return fs::path(path.string() + ".tmp");
}

void write_file(const fs::path& path, const std::function<void(std::ostream&)>& body) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  body(out);
  out.flush();
  if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace

std::vector<std::string_view> figure_names() {
  std::vector<std::string_view> out;
  for (const Preset& p : kPresets) out.push_back(p.name);
  return out;
}

JobSpec parse_args(std::span<const std::string> args) {
  CLI::App app{"Riemann-surface mesh generator for indexed branches of log and n-th roots",
               "riemann-mesh"};

  std::optional<std::string> figure, function, charisma, branches, spacing, format, output;
  std::optional<double> r_min, r_max, weld_tol;
  std::optional<int> n_r, n_theta;
  bool no_weld = false, weld = false, walls = false, no_walls = false, sin_imag = false;

  app.add_option("--figure", figure, "Preset: 3a, 3b-range, 4, 5 or 6");
  app.add_option("--function", function, "log | root:<n>   (default root:3)");
  app.add_option("--charisma", charisma, "index | phase | sin | cos | imag   (default sin)");
  app.add_option("--branches", branches, "k_min..k_max, clipped to the admissible set");
  app.add_option("--r-min", r_min, "Inner radius (default 0.05)");
  app.add_option("--r-max", r_max, "Outer radius (default 2)");
  app.add_option("--n-r", n_r, "Radial samples (default 40)");
  app.add_option("--n-theta", n_theta, "Angular intervals (default 240)");
  app.add_option("--spacing", spacing, "Radial spacing: linear | log");
  app.add_flag("--weld", weld, "Weld continuous seams (default)");
  app.add_flag("--no-weld", no_weld, "Keep every sheet separate");
  app.add_option("--weld-tol", weld_tol, "Maximum seam gap that welds (default 1e-9)");
  app.add_flag("--walls", walls, "Add wall quads at discontinuous seams (index charisma)");
  app.add_flag("--no-walls", no_walls, "Suppress wall quads");
  app.add_flag("--sin-imag", sin_imag, "Sin charisma uses Im(w) instead of sin(ph w)");
  app.add_option("--format", format, "ply | obj | json | csv   (default ply)");
  app.add_option("-o,--output", output, "Output mesh path");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested{app.help()};
  } catch (const CLI::ParseError& e) {
    throw UsageError(flag_in(e.what()), e.what());
  }

  JobSpec job;
  std::optional<std::pair<BranchIndex, BranchIndex>> range;
  std::string stem = "riemann_surface";

  if (figure) {
    const auto* it = std::find_if(std::begin(kPresets), std::end(kPresets),
                                  [&](const Preset& p) { return p.name == *figure; });
    if (it == std::end(kPresets)) {
      throw UsageError("--figure", "unknown preset '" + *figure + "'");
    }
    job.function = parse_function(it->function);
    job.charisma.tag = it->charisma;
    job.walls = it->walls;
    range = it->branches;
    stem = "figure_" + *figure;
  }

  if (function) job.function = parse_function(*function);
  if (charisma) {
    const auto tag = parse_charisma_tag(*charisma);
    if (!tag) throw UsageError("--charisma", "unknown charisma '" + *charisma + "'");
    job.charisma.tag = *tag;
  }
  job.charisma.use_range_imag = sin_imag;
  if (sin_imag && job.charisma.tag != CharismaTag::Sin) {
    throw UsageError("--sin-imag", "only applies to sin charisma");
  }
  require_compatible(job.charisma, job.function);

  if (branches) range = parse_branch_range(*branches);
  if (!range) {
    range = job.function.index_bounds().value_or(kDefaultLogWindow);
  }
  job.branches = admissible_range(job.function, *range);
  if (job.branches.empty()) {
    throw UsageError("--branches", "no admissible branch in the requested range for " +
                                       job.function.name());
  }

  if (r_min) job.grid.r_min = *r_min;
  if (r_max) job.grid.r_max = *r_max;
  if (n_r) job.grid.n_r = *n_r;
  if (n_theta) job.grid.n_theta = *n_theta;
  if (spacing) {
    if (*spacing == "linear") job.grid.spacing = RadialSpacing::Linear;
    else if (*spacing == "log") job.grid.spacing = RadialSpacing::Log;
    else throw UsageError("--spacing", "expected 'linear' or 'log'");
  }
  if (!(std::isfinite(job.grid.r_min) && job.grid.r_min > 0.0)) {
    throw UsageError("--r-min", "must be a finite value > 0");
  }
  if (!(std::isfinite(job.grid.r_max) && job.grid.r_max > job.grid.r_min)) {
    throw UsageError("--r-max", "must be finite and exceed --r-min");
  }
  if (job.grid.n_r < 2) throw UsageError("--n-r", "must be >= 2");
  if (job.grid.n_theta < 8) throw UsageError("--n-theta", "must be >= 8");
  try {
    job.grid.validate();
  } catch (const InvalidGrid& e) {
    throw UsageError("--n-r", e.what());
  }

  if (weld && no_weld) throw UsageError("--no-weld", "conflicts with --weld");
  job.weld = !no_weld;
  if (weld_tol) {
    if (!(std::isfinite(*weld_tol) && *weld_tol >= 0.0)) {
      throw UsageError("--weld-tol", "must be a finite value >= 0");
    }
    job.weld_tol = *weld_tol;
  }
  if (walls && no_walls) throw UsageError("--no-walls", "conflicts with --walls");
  if (walls) job.walls = true;
  if (no_walls) job.walls = false;

  if (format) {
    const auto f = parse_mesh_format(*format);
    if (!f) throw UsageError("--format", "expected ply, obj, json or csv");
    job.format = *f;
  }
  if (output) {
    if (output->empty()) throw UsageError("--output", "empty path");
    job.output = *output;
  } else {
    job.output = stem + std::string(extension(job.format));
  }
  return job;
}

fs::path seam_report_path(const fs::path& mesh_path) {
  fs::path p = mesh_path;
  p.replace_extension(".seams.json");
  return p;
}

fs::path material_path(const fs::path& mesh_path) {
  fs::path p = mesh_path;
  p.replace_extension(".mtl");
  return p;
}

std::vector<fs::path> run(const JobSpec& job) {
  const AssembleOptions options{job.weld, job.weld_tol, job.walls};
  const SurfaceMesh mesh =
      build_surface(job.function, job.branches, job.charisma, job.grid, options);

  std::vector<std::pair<fs::path, std::function<void(std::ostream&)>>> files;
  switch (job.format) {
    case MeshFormat::Ply:
      files.emplace_back(job.output, [&](std::ostream& o) { write_ply(o, mesh); });
      break;
    case MeshFormat::Obj: {
      const fs::path mtl = material_path(job.output);
      files.emplace_back(job.output, [&, name = mtl.filename().string()](std::ostream& o) {
        write_obj(o, mesh, name);
      });
      files.emplace_back(mtl, [&](std::ostream& o) { write_mtl(o, mesh); });
      break;
    }
    case MeshFormat::Json:
      files.emplace_back(job.output, [&](std::ostream& o) { write_json(o, mesh); });
      break;
    case MeshFormat::Csv:
      files.emplace_back(job.output, [&](std::ostream& o) { write_csv(o, mesh); });
      break;
  }
  files.emplace_back(seam_report_path(job.output),
                     [&](std::ostream& o) { write_seam_report(o, mesh); });

  std::vector<fs::path> temps;
  auto discard = [&] {
    std::error_code ignored;
    for (const auto& t : temps) fs::remove(t, ignored);
  };
  try {
    for (const auto& [path, body] : files) {
      temps.push_back(temporary_for(path));
      write_file(temps.back(), body);
    }
    for (std::size_t i = 0; i < files.size(); ++i) {
      std::error_code ec;
      fs::rename(temps[i], files[i].first, ec);
      if (ec) {
        for (std::size_t j = 0; j < i; ++j) fs::remove(files[j].first, ec);
        throw IoError("cannot move output into place at " + files[i].first.string() + ": " +
                      ec.message());
      }
    }
  } catch (...) {
    discard();
    throw;
  }

  std::vector<fs::path> written;
  for (const auto& f : files) written.push_back(f.first);
  return written;
}

int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  try {
    const JobSpec job = parse_args(args);
    const auto written = run(job);
    for (const auto& p : written) out << p.string() << "\n";
    return kExitOk;
  } catch (const HelpRequested& h) {
    out << h.text;
    return kExitOk;
  } catch (const UsageError& e) {
    err << "riemann-mesh: usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IncompatibleCharisma& e) {
    err << "riemann-mesh: incompatible: " << e.what() << "\n";
    return kExitIncompatible;
  } catch (const IoError& e) {
    err << "riemann-mesh: I/O error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    err << "riemann-mesh: error: " << e.what() << "\n";
    return kExitDomain;
  }
}

}  // namespace riemann::cli
