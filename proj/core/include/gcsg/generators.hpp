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

#ifndef GCSG_GENERATORS_HPP_
#define GCSG_GENERATORS_HPP_

#include <cstddef>
#include <random>

#include "gcsg/graph.hpp"

namespace gcsg {

// Structural families over nodes 0..n-1, without weights or labels.
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);  // n >= 3
Graph star_graph(std::size_t n);   // centre 0, leaves 1..n-1
Graph complete_graph(std::size_t n);
// Canonical numbering: node (i, j) is i * cols + j.
Graph grid_graph(std::size_t rows, std::size_t cols);
// Each node t > 0 attaches to a uniformly random earlier node.
Graph random_tree(std::size_t n, std::mt19937_64& rng);
// Up to max_edges distinct random edges (fewer if the graph saturates).
Graph random_sparse_graph(std::size_t n, std::size_t max_edges, std::mt19937_64& rng);

// Copies of `g` with every edge carrying a uniform integer weight in
// [lo, hi], a uniformly random label, or both.
Graph with_random_weights(const Graph& g, std::mt19937_64& rng, int lo, int hi);
Graph with_random_labels(const Graph& g, std::mt19937_64& rng);
Graph with_random_weights_and_labels(const Graph& g, std::mt19937_64& rng, int lo, int hi);

}  // namespace gcsg

#endif  // GCSG_GENERATORS_HPP_
