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

#ifndef GCSG_GRAPH_HPP_
#define GCSG_GRAPH_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "gcsg/node_set.hpp"

namespace gcsg {

enum class EdgeLabel : std::uint8_t { kPlus, kMinus };

// Normalized undirected edge, u < v.
struct Edge {
  NodeId u = 0;
  NodeId v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// One input edge as handed to Graph::Build.
struct EdgeSpec {
  NodeId u = 0;
  NodeId v = 0;
  std::optional<double> weight;
  std::optional<EdgeLabel> label;
};

struct Incidence {
  NodeId neighbor = 0;
  std::size_t edge = 0;  // index into Graph::edges()
};

// Immutable undirected simple graph over arbitrary non-negative node ids.
//
// Edges are stored sorted by (u, v). Weights and labels are either absent or
// present on every edge. A graph whose weights are all integral (or which has
// no weights) is in exact mode: valuations on it are compared with equality.
class Graph {
 public:
  Graph() = default;

  // Throws Error{kDuplicateNode, kUnknownEndpoint, kSelfLoop, kDuplicateEdge}
  // with Error::item() set to the offending position in `nodes` / `edges`.
  // Also rejects partial weights or labels (kValidationError).
  static Graph Build(const std::vector<NodeId>& nodes,
                     const std::vector<EdgeSpec>& edges);

  const NodeSet& nodes() const noexcept { return nodes_; }
  std::size_t node_count() const noexcept { return nodes_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  bool has_weights() const noexcept { return !weights_.empty(); }
  bool has_labels() const noexcept { return !labels_.empty(); }
  double weight(std::size_t edge) const { return weights_[edge]; }
  EdgeLabel label(std::size_t edge) const { return labels_[edge]; }
  bool exact() const noexcept { return integral_weights_; }

  bool has_node(NodeId id) const { return index_.contains(id); }
  std::size_t degree(NodeId id) const { return adjacency_[index_of(id)].size(); }
  // Throws kUnknownNode.
  std::size_t index_of(NodeId id) const;
  std::span<const Incidence> incident(NodeId id) const {
    return adjacency_[index_of(id)];
  }
  std::optional<std::size_t> find_edge(NodeId a, NodeId b) const;
  bool adjacent(NodeId a, NodeId b) const { return find_edge(a, b).has_value(); }

  // Rebuilds the input form (edge order = sorted order).
  std::vector<EdgeSpec> edge_specs() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.nodes_ == b.nodes_ && a.edges_ == b.edges_ &&
           a.weights_ == b.weights_ && a.labels_ == b.labels_;
  }

 private:
  NodeSet nodes_;
  std::vector<Edge> edges_;
  std::vector<double> weights_;
  std::vector<EdgeLabel> labels_;
  bool integral_weights_ = true;
  std::unordered_map<NodeId, std::size_t> index_;
  std::vector<std::vector<Incidence>> adjacency_;
};

// Maximal connected node sets, each sorted, ordered by smallest member.
std::vector<NodeSet> connected_components(const Graph& g);

// Throws kUnknownNode if `s` is not a subset of g's nodes.
Graph induced_subgraph(const Graph& g, const NodeSet& s);

// True iff the subgraph induced by `s` is connected. Empty set and
// singletons count as connected. Throws kUnknownNode.
bool is_coalition_connected(const Graph& g, const NodeSet& s);

// Throws kUnknownNode naming the first member of `s` missing from `g`.
void require_subset(const Graph& g, const NodeSet& s);

}  // namespace gcsg

#endif  // GCSG_GRAPH_HPP_
