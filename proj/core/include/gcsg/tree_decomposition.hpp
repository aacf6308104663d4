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

#ifndef GCSG_TREE_DECOMPOSITION_HPP_
#define GCSG_TREE_DECOMPOSITION_HPP_

#include <cstddef>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "gcsg/graph.hpp"
#include "gcsg/node_set.hpp"

namespace gcsg {

using BagIndex = std::size_t;
using TreeEdge = std::pair<BagIndex, BagIndex>;

// Bags of graph nodes arranged on a tree (tree_edges index into bags).
struct TreeDecomposition {
  std::vector<NodeSet> bags;
  std::vector<TreeEdge> tree_edges;

  friend bool operator==(const TreeDecomposition&, const TreeDecomposition&) = default;
};

enum class ViolationKind {
  kUnknownNode,       // a bag holds a node the graph does not have
  kUncoveredNode,     // node in no bag
  kUncoveredEdge,     // edge in no bag
  kDisconnectedNode,  // bags holding the node do not form a subtree
  kNotATree,          // tree_edges do not form a tree over the bags
};

std::string_view to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::vector<NodeId> nodes;  // offending node, or edge endpoints
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const noexcept { return violations.empty(); }
  std::string summary() const;
};

// Checks node coverage, edge coverage, the running-intersection property and
// that the bag graph is a tree. Violations are returned, not thrown.
ValidationReport validate(const TreeDecomposition& td, const Graph& g);

// Largest bag size minus one. Throws kEmptyDecomposition.
std::size_t width(const TreeDecomposition& td);

// Bag containing the smallest node id (first such bag). Throws
// kEmptyDecomposition.
BagIndex default_root(const TreeDecomposition& td);

inline constexpr std::size_t kNoParent = std::numeric_limits<std::size_t>::max();

// Bags renumbered breadth-first from a root bag, with each bag split into
// the nodes it introduces and the interface it shares with earlier bags.
// All per-bag vectors and child/parent references use BFS positions.
struct DPScaffold {
  std::vector<BagIndex> order;              // BFS position -> original bag index
  std::vector<NodeSet> bags;                // bag at each position
  std::vector<NodeSet> introduced;          // bag minus all earlier bags
  std::vector<NodeSet> interface;           // bag minus introduced
  std::vector<std::vector<std::size_t>> children;  // later adjacent positions
  std::vector<std::size_t> parent;          // kNoParent for the root

  std::size_t size() const noexcept { return bags.size(); }
};

// Orders bags by tree distance from `root`, ties by original index. Throws
// kInvalidDecomposition if the tree is malformed or an interface is not
// contained in the parent bag.
DPScaffold build_scaffold(const TreeDecomposition& td, BagIndex root);

// Elimination-ordering heuristic: repeatedly eliminates the node with the
// least fill-in (ties: smaller degree, then smaller id). Subsumed bags are
// contracted afterwards. Exact width 1 on forests; no guarantee otherwise.
TreeDecomposition min_fill_decompose(const Graph& g);

// Contracts tree edges whose one bag is contained in the other until no bag
// is a subset of a neighbour. Keeps validity; leaves at most n bags.
TreeDecomposition compact(const TreeDecomposition& td);

// Intersects every bag with `s`, drops bags that become empty, and compacts.
// For a valid decomposition of g and s a connected node set, the result is a
// valid decomposition of the subgraph induced by s.
TreeDecomposition restrict_decomposition(const TreeDecomposition& td, const NodeSet& s);

}  // namespace gcsg

#endif  // GCSG_TREE_DECOMPOSITION_HPP_
