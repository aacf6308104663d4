// Copyright 2026 The gcsg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <random>

#include "gcsg/generators.hpp"
#include "gcsg/partition.hpp"
#include "gcsg/separator.hpp"
#include "gcsg/solvers.hpp"

namespace gcsg {
namespace {

Graph weighted(const Graph& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return with_random_weights(g, rng, -5, 5);
}

// Width-1 instances; time per node should stay flat as n grows.
void BM_TreeDPPath(benchmark::State& state) {
  const Graph g = weighted(path_graph(state.range(0)), 1);
  const Valuation v(g, {ValuationKind::kEdgeSum, {}});
  const TreeDecomposition td = min_fill_decompose(g);
  for (auto _ : state) benchmark::DoNotOptimize(solve_treedp(g, v, td).value);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_TreeDPPath)->RangeMultiplier(2)->Range(256, 8192)->Complexity(benchmark::oN);

void BM_TreeDPRandomTree(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const Graph g = weighted(random_tree(state.range(0), rng), 3);
  const Valuation v(g, {ValuationKind::kEdgeSum, {}});
  const TreeDecomposition td = min_fill_decompose(g);
  for (auto _ : state) benchmark::DoNotOptimize(solve_treedp(g, v, td).value);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_TreeDPRandomTree)->RangeMultiplier(2)->Range(256, 4096)->Complexity(benchmark::oN);

// 3 x c grids keep min-fill width 3, so time should grow linearly in c.
void BM_TreeDPGrid(benchmark::State& state) {
  const std::size_t cols = state.range(0);
  const Graph g = weighted(grid_graph(3, cols), 4);
  const Valuation v(g, {ValuationKind::kEdgeSum, {}});
  const TreeDecomposition td = min_fill_decompose(g);
  for (auto _ : state) benchmark::DoNotOptimize(solve_treedp(g, v, td).value);
  state.counters["width"] = static_cast<double>(width(td));
}
BENCHMARK(BM_TreeDPGrid)->DenseRange(4, 32, 4);

void BM_Exhaustive(benchmark::State& state) {
  const Graph g = weighted(grid_graph(2, state.range(0)), 5);
  const Valuation v(g, {ValuationKind::kEdgeSum, {}});
  std::uint64_t forests = 0;
  for (auto _ : state) forests = solve_exhaustive(g, v).stats.candidates;
  state.counters["forests"] = static_cast<double>(forests);
}
BENCHMARK(BM_Exhaustive)->DenseRange(2, 6);

void BM_Oracle(benchmark::State& state) {
  const Graph g = weighted(path_graph(state.range(0)), 6);
  const Valuation v(g, {ValuationKind::kEdgeSum, {}});
  for (auto _ : state) benchmark::DoNotOptimize(solve_oracle(g, v).value);
}
BENCHMARK(BM_Oracle)->DenseRange(6, 10, 2);

void BM_PartitionEnumeration(benchmark::State& state) {
  std::vector<NodeId> ids(state.range(0));
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = i;
  const NodeSet ground(ids);
  for (auto _ : state) {
    std::uint64_t count = 0;
    for (PartitionEnumerator it{ground}; !it.done(); it.next()) ++count;
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_PartitionEnumeration)->DenseRange(6, 12, 2);

void BM_MinFill(benchmark::State& state) {
  const Graph g = grid_graph(state.range(0), state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(min_fill_decompose(g).bags.size());
}
BENCHMARK(BM_MinFill)->DenseRange(4, 16, 4);

void BM_GridSeparatorDecompose(benchmark::State& state) {
  const std::size_t side = state.range(0);
  const Graph g = grid_graph(side, side);
  const SeparatorFinder finder = grid_separator_finder(side, side);
  for (auto _ : state) benchmark::DoNotOptimize(separator_decompose(g, finder, {1, 0.5, 0.5}).bags.size());
}
BENCHMARK(BM_GridSeparatorDecompose)->DenseRange(4, 16, 4);

}  // namespace
}  // namespace gcsg

BENCHMARK_MAIN();
