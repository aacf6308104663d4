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

#include "gcsg/graph.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gcsg/error.hpp"

namespace gcsg {
namespace {

std::string edge_name(NodeId a, NodeId b) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

}  // namespace

Graph Graph::Build(const std::vector<NodeId>& nodes,
                   const std::vector<EdgeSpec>& edges) {
  Graph g;
  g.index_.reserve(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (!g.index_.emplace(nodes[i], 0).second) {
      throw Error(ErrorCode::kDuplicateNode,
                  "duplicate node " + std::to_string(nodes[i]), i);
    }
  }
  g.nodes_ = NodeSet(nodes);
  for (std::size_t i = 0; i < g.nodes_.size(); ++i) g.index_[g.nodes_[i]] = i;

  const bool any_weight = std::any_of(edges.begin(), edges.end(),
                                      [](const EdgeSpec& e) { return e.weight.has_value(); });
  const bool any_label = std::any_of(edges.begin(), edges.end(),
                                     [](const EdgeSpec& e) { return e.label.has_value(); });

  struct Pending {
    Edge edge;
    std::size_t input;
  };
  std::vector<Pending> pending;
  pending.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const EdgeSpec& e = edges[i];
    for (NodeId end : {e.u, e.v}) {
      if (!g.index_.contains(end)) {
        throw Error(ErrorCode::kUnknownEndpoint,
                    "edge " + edge_name(e.u, e.v) + " has unknown endpoint " +
                        std::to_string(end),
                    i);
      }
    }
    if (e.u == e.v) {
      throw Error(ErrorCode::kSelfLoop, "self-loop on node " + std::to_string(e.u), i);
    }
    if (any_weight && !e.weight) {
      throw Error(ErrorCode::kValidationError,
                  "edge " + edge_name(e.u, e.v) + " lacks a weight while others have one", i);
    }
    if (e.weight && !std::isfinite(*e.weight)) {
      throw Error(ErrorCode::kValidationError,
                  "edge " + edge_name(e.u, e.v) + " has a non-finite weight", i);
    }
    if (any_label && !e.label) {
      throw Error(ErrorCode::kValidationError,
                  "edge " + edge_name(e.u, e.v) + " lacks a label while others have one", i);
    }
    pending.push_back({Edge{std::min(e.u, e.v), std::max(e.u, e.v)}, i});
  }
  std::sort(pending.begin(), pending.end(), [](const Pending& a, const Pending& b) {
    return a.edge != b.edge ? a.edge < b.edge : a.input < b.input;
  });
  for (std::size_t k = 1; k < pending.size(); ++k) {
    if (pending[k].edge == pending[k - 1].edge) {
      throw Error(ErrorCode::kDuplicateEdge,
                  "duplicate edge " + edge_name(pending[k].edge.u, pending[k].edge.v),
                  pending[k].input);
    }
  }

  g.adjacency_.assign(g.nodes_.size(), {});
  g.edges_.reserve(pending.size());
  for (const Pending& p : pending) {
    const std::size_t idx = g.edges_.size();
    g.edges_.push_back(p.edge);
    const EdgeSpec& src = edges[p.input];
    if (any_weight) {
      g.weights_.push_back(*src.weight);
      if (std::floor(*src.weight) != *src.weight) g.integral_weights_ = false;
    }
    if (any_label) g.labels_.push_back(*src.label);
    g.adjacency_[g.index_.at(p.edge.u)].push_back({p.edge.v, idx});
    g.adjacency_[g.index_.at(p.edge.v)].push_back({p.edge.u, idx});
  }
  for (auto& list : g.adjacency_) {
    std::sort(list.begin(), list.end(), [](const Incidence& a, const Incidence& b) {
      return a.neighbor < b.neighbor;
    });
  }
  return g;
}

std::size_t Graph::index_of(NodeId id) const {
  auto it = index_.find(id);
  if (it == index_.end()) {
    throw Error(ErrorCode::kUnknownNode, "unknown node " + std::to_string(id));
  }
  return it->second;
}

std::optional<std::size_t> Graph::find_edge(NodeId a, NodeId b) const {
  auto ia = index_.find(a);
  if (ia == index_.end() || !index_.contains(b)) return std::nullopt;
  const auto& list = adjacency_[ia->second];
  auto it = std::lower_bound(list.begin(), list.end(), b,
                             [](const Incidence& x, NodeId id) { return x.neighbor < id; });
  if (it == list.end() || it->neighbor != b) return std::nullopt;
  return it->edge;
}

std::vector<EdgeSpec> Graph::edge_specs() const {
  std::vector<EdgeSpec> out;
  out.reserve(edges_.size());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    EdgeSpec e{edges_[i].u, edges_[i].v, std::nullopt, std::nullopt};
    if (has_weights()) e.weight = weights_[i];
    if (has_labels()) e.label = labels_[i];
    out.push_back(e);
  }
  return out;
}

void require_subset(const Graph& g, const NodeSet& s) {
  for (NodeId id : s) {
    if (!g.has_node(id)) {
      throw Error(ErrorCode::kUnknownNode, "unknown node " + std::to_string(id));
    }
  }
}

std::vector<NodeSet> connected_components(const Graph& g) {
  const std::size_t n = g.node_count();
  std::vector<bool> seen(n, false);
  std::vector<NodeSet> out;
  std::vector<NodeId> stack;
  // Scanning nodes in ascending order yields components ordered by their
  // smallest member.
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<NodeId> members;
    seen[start] = true;
    stack.push_back(g.nodes()[start]);
    while (!stack.empty()) {
      NodeId x = stack.back();
      stack.pop_back();
      members.push_back(x);
      for (const Incidence& inc : g.incident(x)) {
        const std::size_t j = g.index_of(inc.neighbor);
        if (!seen[j]) {
          seen[j] = true;
          stack.push_back(inc.neighbor);
        }
      }
    }
    out.emplace_back(std::move(members));
  }
  return out;
}

Graph induced_subgraph(const Graph& g, const NodeSet& s) {
  require_subset(g, s);
  std::vector<EdgeSpec> edges;
  for (NodeId x : s) {
    for (const Incidence& inc : g.incident(x)) {
      if (inc.neighbor <= x || !s.contains(inc.neighbor)) continue;
      EdgeSpec e{x, inc.neighbor, std::nullopt, std::nullopt};
      if (g.has_weights()) e.weight = g.weight(inc.edge);
      if (g.has_labels()) e.label = g.label(inc.edge);
      edges.push_back(e);
    }
  }
  std::vector<NodeId> nodes(s.begin(), s.end());
  return Graph::Build(nodes, edges);
}

bool is_coalition_connected(const Graph& g, const NodeSet& s) {
  require_subset(g, s);
  if (s.size() <= 1) return true;
  std::vector<bool> seen(s.size(), false);
  std::vector<NodeId> stack{s.front()};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    NodeId x = stack.back();
    stack.pop_back();
    for (const Incidence& inc : g.incident(x)) {
      const std::size_t pos = s.position(inc.neighbor);
      if (pos == s.size() || seen[pos]) continue;
      seen[pos] = true;
      ++reached;
      stack.push_back(inc.neighbor);
    }
  }
  return reached == s.size();
}

}  // namespace gcsg
