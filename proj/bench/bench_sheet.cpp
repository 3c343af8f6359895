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

// Sheet lifting: OpenMP kernel against the serial reference, on square-ish
// grids of growing size. Arg = number of radial rows; n_theta = 6 * rows.

#include <benchmark/benchmark.h>

#include <vector>

#include "riemann/mesh.hpp"

namespace {

using namespace riemann;

DomainGrid grid_for(int rows) {
  DomainGrid g;
  g.n_r = rows;
  g.n_theta = 6 * rows;
  return g;
}

template <Sheet (*Build)(const IndexedFunction&, BranchIndex, CharismaKind, const DomainGrid&)>
void BM_Sheet(benchmark::State& state) {
  const DomainGrid g = grid_for(static_cast<int>(state.range(0)));
  const auto f = IndexedFunction::root(3);
  for (auto _ : state) {
    Sheet s = Build(f, 1, CharismaKind{CharismaTag::Sin}, g);
    benchmark::DoNotOptimize(s.points.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(g.size()));
}

void BM_Surface(benchmark::State& state) {
  const DomainGrid g = grid_for(static_cast<int>(state.range(0)));
  const auto f = IndexedFunction::root(3);
  const std::vector<BranchIndex> ks = {-1, 0, 1};
  for (auto _ : state) {
    SurfaceMesh m = build_surface(f, ks, CharismaKind{CharismaTag::Sin}, g);
    benchmark::DoNotOptimize(m.faces.data());
  }
  state.SetItemsProcessed(state.iterations() * 3 * static_cast<int64_t>(g.size()));
}

}  // namespace

BENCHMARK(BM_Sheet<riemann::build_sheet>)->Name("sheet/parallel")->RangeMultiplier(4)->Range(40, 640);
BENCHMARK(BM_Sheet<riemann::reference::build_sheet>)->Name("sheet/serial")->RangeMultiplier(4)->Range(40, 640);
BENCHMARK(BM_Surface)->Name("surface/sin_cbrt")->RangeMultiplier(4)->Range(40, 640);

BENCHMARK_MAIN();
