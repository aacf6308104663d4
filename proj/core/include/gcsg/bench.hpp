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

#ifndef GCSG_BENCH_HPP_
#define GCSG_BENCH_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gcsg/solvers.hpp"
#include "gcsg/valuation.hpp"

namespace gcsg {

// One graph family in a benchmark run. Built-in families are "path",
// "tree", "cycle", "star" (sized by `sizes`) and "grid" (sized by `grids`);
// "problem" loads the problem file at `path` as a single instance.
struct BenchFamily {
  std::string family;
  std::vector<std::size_t> sizes;
  std::vector<GridShape> grids;
  std::string path;
};

struct BenchConfig {
  std::vector<BenchFamily> families;
  ValuationKind valuation = ValuationKind::kEdgeSum;
  std::vector<Method> methods{Method::kTreeDP};
  std::size_t repetitions = 1;
  std::uint64_t seed = 0;
  int weight_min = -5;
  int weight_max = 5;
};

struct BenchRow {
  std::string family;
  std::size_t n = 0;
  std::size_t e = 0;
  std::size_t width = 0;  // min-fill width of the instance
  Method method = Method::kTreeDP;
  double value = 0;
  double elapsed_ms = 0;
  std::uint64_t candidates = 0;
};

inline constexpr std::string_view kBenchCsvHeader =
    "family,n,e,width,method,value,elapsed_ms,candidates";

// JSON form of BenchConfig:
//   {"families": [{"family": "path", "sizes": [100, 200]},
//                 {"family": "grid", "grids": [[2, 4]]},
//                 {"family": "problem", "path": "t3.json"}],
//    "valuation": "edge_sum", "methods": ["treedp"], "repetitions": 1,
//    "seed": 7, "weights": [-5, 5]}
// Throws kParseError.
BenchConfig parse_bench_config(std::string_view text);

// One row per (family instance, repetition, method). Instances are drawn
// from the seed alone, so every method sees the same graph and weights.
std::vector<BenchRow> run_bench(const BenchConfig& config);

std::string bench_csv(const std::vector<BenchRow>& rows);

}  // namespace gcsg

#endif  // GCSG_BENCH_HPP_
