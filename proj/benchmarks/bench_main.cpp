// Copyright 2026 The esred Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <cmath>

#include "esred/fockspace.hpp"
#include "esred/integrals.hpp"
#include "esred/layout.hpp"
#include "esred/lowdin.hpp"
#include "esred/spectra.hpp"

using namespace esred;

namespace {

OrbitalLayout layout_for(int n) {
  const WeightedGraph g = n == 2 ? path_graph(2) : cycle_graph(n);
  return place_centers(g, std::vector<double>(g.edge_count(), 2.0), 20.0, 1.0, 1.0);
}

void BM_EriFourCenter(benchmark::State& state) {
  const Point3 a{0, 0, 0}, b{0.5, 0.1, 0}, c{1.0, -0.3, 0.2}, d{0.2, 0.4, 1.1};
  for (auto _ : state) benchmark::DoNotOptimize(eri_four_center(a, b, c, d, 1.0, 1.3, 0.8, 2.0));
}
BENCHMARK(BM_EriFourCenter);

void BM_AssemblePrimitive(benchmark::State& state) {
  const auto L = layout_for(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(assemble_primitive_tensors(L));
}
BENCHMARK(BM_AssemblePrimitive)->Arg(2)->Arg(4)->Arg(6);

void BM_OrthonormalComposite(benchmark::State& state) {
  const auto L = layout_for(static_cast<int>(state.range(0)));
  const auto P = assemble_primitive_tensors(L);
  for (auto _ : state) {
    const auto xf = inv_sqrt_overlap(L, P.S);
    benchmark::DoNotOptimize(compose_tensors(transform_tensors(P, xf), L));
  }
}
BENCHMARK(BM_OrthonormalComposite)->Arg(2)->Arg(4)->Arg(6);

void BM_SectorRealize(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const HubbardInstance h{cycle_graph(n, 1.0), 4.0, n, std::nullopt, std::nullopt};
  const auto op = build_hubbard(h);
  for (auto _ : state) benchmark::DoNotOptimize(sector_restrict(op, n));
}
BENCHMARK(BM_SectorRealize)->Arg(4)->Arg(6)->Arg(8);

void BM_LanczosGround(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const HubbardInstance h{cycle_graph(n, 1.0), 4.0, n, std::nullopt, std::nullopt};
  const auto m = sector_restrict(build_hubbard(h), n).matrix;
  EigenOptions opts;
  opts.force_iterative = true;
  for (auto _ : state) benchmark::DoNotOptimize(lowest_eigenvalues(m, 1, opts));
}
BENCHMARK(BM_LanczosGround)->Arg(6)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
