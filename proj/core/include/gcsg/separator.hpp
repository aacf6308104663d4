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

#ifndef GCSG_SEPARATOR_HPP_
#define GCSG_SEPARATOR_HPP_

#include <cstddef>
#include <functional>

#include "gcsg/graph.hpp"
#include "gcsg/node_set.hpp"
#include "gcsg/tree_decomposition.hpp"

namespace gcsg {

// N = separator + side_a + side_b, with no edge between the two sides.
struct Separator {
  NodeSet separator;
  NodeSet side_a;
  NodeSet side_b;
};

using SeparatorFinder = std::function<Separator(const Graph&)>;

// Throws kInvalidSeparator unless `s` partitions g's nodes with no edge
// joining side_a to side_b.
void check_separator(const Graph& g, const Separator& s);

// Node (i, j) of a rows x cols grid (0-based) has id i * cols + j.
NodeId grid_node(std::size_t row, std::size_t col, std::size_t cols);

// Central column (or central row, when rows are shorter than columns) of the
// rows x cols grid. Throws kNotAGrid unless g is exactly that grid.
Separator grid_separator(const Graph& g, std::size_t rows, std::size_t cols);

// Finder for the recursion on a rows x cols grid: accepts any subgraph whose
// nodes form a full sub-rectangle of the grid and cuts its central row or
// column. Throws kNotAGrid otherwise.
SeparatorFinder grid_separator_finder(std::size_t rows, std::size_t cols);

// Balanced separator with no size guarantee. Cuts a BFS level from a
// pseudo-peripheral node and distributes the remaining components over the
// two sides so that each side has at most floor(2n/3) nodes; the level with
// the smallest separator wins. For n <= 2 returns S = N.
Separator greedy_separator(const Graph& g);

// f(n) = beta * n^exponent separators with side fraction alpha.
struct SeparatorBound {
  double beta = 1.0;
  double exponent = 0.5;
  double alpha = 0.5;

  // beta * n^exponent / (1 - alpha^exponent)
  double width_bound(std::size_t n) const;
};

// Per-run record of whether every separator met the declared bound.
struct SeparatorTrace {
  std::size_t separators = 0;
  bool within_bound = true;
};

// Recursive construction: split with `finder`, decompose both sides, add the
// separator to every bag of both halves and join the two root bags by one
// tree edge. Disconnected subgraphs are handled per component and their
// subtrees chained. Throws kInvalidSeparator when the finder returns an
// invalid or non-shrinking separator.
TreeDecomposition separator_decompose(const Graph& g, const SeparatorFinder& finder,
                                      const SeparatorBound& bound = {},
                                      SeparatorTrace* trace = nullptr);

}  // namespace gcsg

#endif  // GCSG_SEPARATOR_HPP_
