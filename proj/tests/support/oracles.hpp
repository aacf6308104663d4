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

// Brute-force reference implementations used to derive expected values.
// Nothing here calls the library's algorithms; they only read graph data.

#ifndef GCSG_TESTS_SUPPORT_ORACLES_HPP_
#define GCSG_TESTS_SUPPORT_ORACLES_HPP_

#include <cstdint>
#include <vector>

#include "gcsg/graph.hpp"
#include "gcsg/node_set.hpp"
#include "gcsg/tree_decomposition.hpp"

namespace gcsg::testing {

using Blocks = std::vector<std::vector<NodeId>>;

// Bell numbers from the Bell triangle.
std::uint64_t bell(std::size_t n);
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

// Valuations straight from their definitions, by scanning all node pairs or
// triples of an adjacency matrix.
double brute_edge_sum(const Graph& g, const NodeSet& c);
double brute_correlation(const Graph& g, const NodeSet& c);
double brute_coordination(const Graph& g, const NodeSet& c);
double brute_modularity(const Graph& g, const NodeSet& c);

// Every set partition of `ground`, built by inserting each element into an
// existing block or a new one. Blocks come out sorted and canonically ordered.
std::vector<Blocks> all_partitions(const std::vector<NodeId>& ground);

// Every subset of `ground`, as sorted vectors.
std::vector<NodeSet> all_subsets(const NodeSet& ground);

// Acyclic edge subsets, counted over all 2^e subsets with a DFS cycle test.
std::uint64_t count_forests(const Graph& g);

// Minimum width over all elimination orderings (n <= 8).
std::size_t min_elimination_width(const Graph& g);

// Merge by connectivity: nodes are joined when some block of p or of q
// contains both; the result is the components, canonically ordered.
Blocks connectivity_merge(const Blocks& p, const Blocks& q);

// Independent decomposition check: covers, edge coverage, the bags holding
// each node are connected in the tree, and the tree is a tree.
bool brute_valid(const TreeDecomposition& td, const Graph& g);

}  // namespace gcsg::testing

#endif  // GCSG_TESTS_SUPPORT_ORACLES_HPP_
