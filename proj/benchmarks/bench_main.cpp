/* bench_main.cpp -- timings for balls, comp and the automatic pipeline.
 *
 * Copyright (c) 2026 The endgraph authors.
 * Distributed under the MIT License (see LICENSE).
 */
#include <benchmark/benchmark.h>

#include "endgraph/automatic.hpp"
#include "endgraph/eulerian.hpp"
#include "endgraph/gadgets.hpp"
#include "endgraph/separation.hpp"

namespace {

using namespace endgraph;

void BM_BallGrid(benchmark::State &state) {
  auto g = grid2d();
  const int r = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ball(*g, g->basepoint(), r).vertices.size());
  state.SetComplexityN(r);
}
BENCHMARK(BM_BallGrid)->RangeMultiplier(2)->Range(4, 64)->Complexity();

void BM_BallProductOfTrees(benchmark::State &state) {
  auto g = graph_from_spec("lambda");
  const int r = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ball(*g, g->basepoint(), r).vertices.size());
}
BENCHMARK(BM_BallProductOfTrees)->DenseRange(2, 8, 2);

void BM_CompApproxGridShell(benchmark::State &state) {
  auto g = grid2d();
  const int r = static_cast<int>(state.range(0));
  auto shell = sphere_shell(*g, r);
  for (auto _ : state) benchmark::DoNotOptimize(comp_approx(*g, shell, 2 * r));
}
BENCHMARK(BM_CompApproxGridShell)->DenseRange(2, 10, 4);

void BM_DecideCompSticks(benchmark::State &state) {
  auto g = graph_from_spec("lines-with-sticks:halt@" + std::to_string(state.range(0)));
  EndsCertificate cert{2, {make_edge(5 + static_cast<VertexId>(state.range(0)),
                                     6 + static_cast<VertexId>(state.range(0)))}};
  EdgeSet e{make_edge(0, 1)};
  for (auto _ : state) benchmark::DoNotOptimize(decide_comp(*g, e, cert, Fuel{}));
}
BENCHMARK(BM_DecideCompSticks)->Arg(2)->Arg(8)->Arg(32);

void BM_OddVertexScan(benchmark::State &state) {
  auto g = graph_from_spec("sigma21:changes@3,7");
  const int r = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(odd_vertex_scan(*g, r));
}
BENCHMARK(BM_OddVertexScan)->RangeMultiplier(4)->Range(16, 1024);

void BM_AutomaticEuler(benchmark::State &state) {
  auto p = state.range(0) == 0 ? automatic::nline_presentation() : automatic::grid_presentation();
  for (auto _ : state)
    benchmark::DoNotOptimize(automatic::decide_eulerian_automatic(p, automatic::EulerKind::TwoWay));
  state.SetLabel(state.range(0) == 0 ? "nline" : "grid");
}
BENCHMARK(BM_AutomaticEuler)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
