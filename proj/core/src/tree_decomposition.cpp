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

#include "gcsg/tree_decomposition.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

#include "gcsg/error.hpp"

namespace gcsg {
namespace {

// Bag adjacency; false when tree_edges is not a tree over the bags.
bool tree_adjacency(const TreeDecomposition& td, std::vector<std::vector<BagIndex>>& adj,
                    std::string* why) {
  const std::size_t m = td.bags.size();
  adj.assign(m, {});
  for (const auto& [a, b] : td.tree_edges) {
    if (a >= m || b >= m) {
      if (why) *why = "tree edge (" + std::to_string(a) + ", " + std::to_string(b) + ") references a missing bag";
      return false;
    }
    if (a == b) {
      if (why) *why = "tree edge loops on bag " + std::to_string(a);
      return false;
    }
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  if (m == 0) return true;
  if (td.tree_edges.size() != m - 1) {
    if (why) {
      *why = std::to_string(m) + " bags need " + std::to_string(m - 1) + " tree edges, got " +
             std::to_string(td.tree_edges.size());
    }
    return false;
  }
  std::vector<bool> seen(m, false);
  std::vector<BagIndex> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    BagIndex x = stack.back();
    stack.pop_back();
    for (BagIndex y : adj[x]) {
      if (!seen[y]) {
        seen[y] = true;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  if (reached != m) {
    if (why) *why = "tree edges do not connect all bags";
    return false;
  }
  return true;
}

}  // namespace

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kUnknownNode: return "UnknownNode";
    case ViolationKind::kUncoveredNode: return "UncoveredNode";
    case ViolationKind::kUncoveredEdge: return "UncoveredEdge";
    case ViolationKind::kDisconnectedNode: return "DisconnectedNode";
    case ViolationKind::kNotATree: return "NotATree";
  }
  return "Unknown";
}

std::string ValidationReport::summary() const {
  if (ok()) return "valid";
  std::string out;
  for (const Violation& v : violations) {
    if (!out.empty()) out += "; ";
    out += std::string(to_string(v.kind)) + ": " + v.message;
  }
  return out;
}

ValidationReport validate(const TreeDecomposition& td, const Graph& g) {
  ValidationReport report;
  const std::size_t m = td.bags.size();

  std::unordered_map<NodeId, std::vector<BagIndex>> holders;
  for (BagIndex b = 0; b < m; ++b) {
    for (NodeId x : td.bags[b]) {
      if (!g.has_node(x)) {
        report.violations.push_back({ViolationKind::kUnknownNode, {x},
                                     "bag " + std::to_string(b) + " holds unknown node " +
                                         std::to_string(x)});
        continue;
      }
      holders[x].push_back(b);
    }
  }

  std::vector<std::vector<BagIndex>> adj;
  std::string why;
  const bool is_tree = tree_adjacency(td, adj, &why);
  if (!is_tree) report.violations.push_back({ViolationKind::kNotATree, {}, why});

  for (NodeId x : g.nodes()) {
    if (!holders.contains(x)) {
      report.violations.push_back({ViolationKind::kUncoveredNode, {x},
                                   "node " + std::to_string(x) + " is in no bag"});
    }
  }

  for (const Edge& e : g.edges()) {
    auto iu = holders.find(e.u);
    auto iv = holders.find(e.v);
    bool covered = false;
    if (iu != holders.end() && iv != holders.end()) {
      // holder lists are ascending by construction
      auto a = iu->second.begin();
      auto b = iv->second.begin();
      while (a != iu->second.end() && b != iv->second.end() && !covered) {
        if (*a == *b) {
          covered = true;
        } else if (*a < *b) {
          ++a;
        } else {
          ++b;
        }
      }
    }
    if (!covered) {
      report.violations.push_back({ViolationKind::kUncoveredEdge, {e.u, e.v},
                                   "edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                                       ") is in no bag"});
    }
  }

  if (is_tree) {
    // Bags holding x induce a forest of T; it is a subtree iff it has exactly
    // one fewer edge than bags.
    std::unordered_map<NodeId, std::size_t> inner_edges;
    for (const auto& [a, b] : td.tree_edges) {
      for (NodeId x : set_intersection(td.bags[a], td.bags[b])) ++inner_edges[x];
    }
    for (NodeId x : g.nodes()) {
      auto it = holders.find(x);
      if (it == holders.end()) continue;
      const std::size_t edges = inner_edges.contains(x) ? inner_edges[x] : 0;
      if (edges + 1 != it->second.size()) {
        report.violations.push_back({ViolationKind::kDisconnectedNode, {x},
                                     "bags holding node " + std::to_string(x) +
                                         " do not form a connected subtree"});
      }
    }
  }
  return report;
}

std::size_t width(const TreeDecomposition& td) {
  if (td.bags.empty()) {
    throw Error(ErrorCode::kEmptyDecomposition, "width of an empty decomposition");
  }
  std::size_t largest = 1;
  for (const NodeSet& b : td.bags) largest = std::max(largest, b.size());
  return largest - 1;
}

BagIndex default_root(const TreeDecomposition& td) {
  if (td.bags.empty()) {
    throw Error(ErrorCode::kEmptyDecomposition, "decomposition has no bags");
  }
  BagIndex best = 0;
  for (BagIndex b = 1; b < td.bags.size(); ++b) {
    if (td.bags[best].empty() ||
        (!td.bags[b].empty() && td.bags[b].front() < td.bags[best].front())) {
      best = b;
    }
  }
  return best;
}

DPScaffold build_scaffold(const TreeDecomposition& td, BagIndex root) {
  const std::size_t m = td.bags.size();
  if (root >= m) {
    throw Error(ErrorCode::kInvalidDecomposition,
                "root bag " + std::to_string(root) + " does not exist");
  }
  std::vector<std::vector<BagIndex>> adj;
  std::string why;
  if (!tree_adjacency(td, adj, &why)) throw Error(ErrorCode::kInvalidDecomposition, why);

  std::vector<std::size_t> dist(m, kNoParent);
  std::queue<BagIndex> queue;
  dist[root] = 0;
  queue.push(root);
  while (!queue.empty()) {
    BagIndex x = queue.front();
    queue.pop();
    for (BagIndex y : adj[x]) {
      if (dist[y] == kNoParent) {
        dist[y] = dist[x] + 1;
        queue.push(y);
      }
    }
  }

  DPScaffold s;
  s.order.resize(m);
  std::iota(s.order.begin(), s.order.end(), BagIndex{0});
  std::stable_sort(s.order.begin(), s.order.end(),
                   [&](BagIndex a, BagIndex b) { return dist[a] < dist[b]; });
  std::vector<std::size_t> position(m);
  for (std::size_t k = 0; k < m; ++k) position[s.order[k]] = k;

  s.bags.resize(m);
  s.introduced.resize(m);
  s.interface.resize(m);
  s.children.assign(m, {});
  s.parent.assign(m, kNoParent);
  std::unordered_set<NodeId> seen;
  for (std::size_t k = 0; k < m; ++k) {
    const BagIndex b = s.order[k];
    s.bags[k] = td.bags[b];
    std::vector<NodeId> fresh;
    std::vector<NodeId> shared;
    for (NodeId x : td.bags[b]) {
      (seen.contains(x) ? shared : fresh).push_back(x);
    }
    seen.insert(fresh.begin(), fresh.end());
    s.introduced[k] = NodeSet::FromSorted(std::move(fresh));
    s.interface[k] = NodeSet::FromSorted(std::move(shared));
    for (BagIndex y : adj[b]) {
      const std::size_t p = position[y];
      if (p > k) {
        s.children[k].push_back(p);
      } else {
        s.parent[k] = p;
      }
    }
    std::sort(s.children[k].begin(), s.children[k].end());
    if (k > 0 && !s.interface[k].is_subset_of(td.bags[s.order[s.parent[k]]])) {
      throw Error(ErrorCode::kInvalidDecomposition,
                  "bag " + std::to_string(b) + " shares nodes with earlier bags that its parent bag " +
                      std::to_string(s.order[s.parent[k]]) + " lacks");
    }
  }
  return s;
}

TreeDecomposition compact(const TreeDecomposition& td) {
  const std::size_t m = td.bags.size();
  std::vector<NodeSet> bags = td.bags;
  std::vector<std::set<BagIndex>> adj(m);
  for (const auto& [a, b] : td.tree_edges) {
    adj[a].insert(b);
    adj[b].insert(a);
  }
  std::vector<bool> alive(m, true);
  bool changed = true;
  while (changed) {
    changed = false;
    for (BagIndex a = 0; a < m; ++a) {
      if (!alive[a]) continue;
      for (BagIndex b : adj[a]) {
        if (!bags[a].is_subset_of(bags[b])) continue;
        // fold a into b
        for (BagIndex c : adj[a]) {
          if (c == b) continue;
          adj[c].erase(a);
          adj[c].insert(b);
          adj[b].insert(c);
        }
        adj[b].erase(a);
        adj[a].clear();
        alive[a] = false;
        changed = true;
        break;
      }
    }
  }
  std::vector<std::size_t> renumber(m, kNoParent);
  TreeDecomposition out;
  for (BagIndex a = 0; a < m; ++a) {
    if (!alive[a]) continue;
    renumber[a] = out.bags.size();
    out.bags.push_back(std::move(bags[a]));
  }
  for (BagIndex a = 0; a < m; ++a) {
    if (!alive[a]) continue;
    for (BagIndex b : adj[a]) {
      if (a < b) out.tree_edges.emplace_back(renumber[a], renumber[b]);
    }
  }
  std::sort(out.tree_edges.begin(), out.tree_edges.end());
  return out;
}

TreeDecomposition restrict_decomposition(const TreeDecomposition& td, const NodeSet& s) {
  const std::size_t m = td.bags.size();
  TreeDecomposition cut;
  std::vector<std::size_t> renumber(m, kNoParent);
  for (BagIndex b = 0; b < m; ++b) {
    NodeSet part = set_intersection(td.bags[b], s);
    if (part.empty()) continue;
    renumber[b] = cut.bags.size();
    cut.bags.push_back(std::move(part));
  }
  // Union-find over kept bags to chain the pieces if dropping empty bags
  // split the tree.
  std::vector<std::size_t> parent(cut.bags.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [a, b] : td.tree_edges) {
    if (renumber[a] == kNoParent || renumber[b] == kNoParent) continue;
    cut.tree_edges.emplace_back(renumber[a], renumber[b]);
    parent[find(renumber[a])] = find(renumber[b]);
  }
  std::size_t previous_root = kNoParent;
  for (std::size_t b = 0; b < cut.bags.size(); ++b) {
    if (find(b) != b) continue;
    if (previous_root != kNoParent) {
      cut.tree_edges.emplace_back(previous_root, b);
      parent[previous_root] = b;
    }
    previous_root = b;
  }
  return compact(cut);
}

TreeDecomposition min_fill_decompose(const Graph& g) {
  const std::size_t n = g.node_count();
  TreeDecomposition td;
  if (n == 0) return td;

  std::vector<std::set<std::size_t>> adj(n);
  for (const Edge& e : g.edges()) {
    const std::size_t a = g.index_of(e.u);
    const std::size_t b = g.index_of(e.v);
    adj[a].insert(b);
    adj[b].insert(a);
  }
  auto fill_of = [&](std::size_t v) {
    std::size_t missing = 0;
    for (auto i = adj[v].begin(); i != adj[v].end(); ++i) {
      for (auto j = std::next(i); j != adj[v].end(); ++j) {
        if (!adj[*i].contains(*j)) ++missing;
      }
    }
    return missing;
  };

  // (fill, degree, index); node index order equals id order.
  using Key = std::tuple<std::size_t, std::size_t, std::size_t>;
  std::set<Key> queue;
  std::vector<Key> key(n);
  for (std::size_t v = 0; v < n; ++v) {
    key[v] = {fill_of(v), adj[v].size(), v};
    queue.insert(key[v]);
  }

  std::vector<std::size_t> eliminated_at(n, 0);
  std::vector<std::vector<std::size_t>> neighbours_at_elimination(n);
  std::vector<std::size_t> order;
  order.reserve(n);
  while (!queue.empty()) {
    const std::size_t v = std::get<2>(*queue.begin());
    queue.erase(queue.begin());
    eliminated_at[v] = order.size();
    order.push_back(v);
    std::vector<std::size_t> nbrs(adj[v].begin(), adj[v].end());
    neighbours_at_elimination[v] = nbrs;

    std::set<std::size_t> touched(nbrs.begin(), nbrs.end());
    for (std::size_t a : nbrs) adj[a].erase(v);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
        if (adj[nbrs[i]].insert(nbrs[j]).second) {
          adj[nbrs[j]].insert(nbrs[i]);
        }
      }
    }
    adj[v].clear();
    // Fill counts change only within two hops of v.
    for (std::size_t a : nbrs) {
      for (std::size_t b : adj[a]) touched.insert(b);
    }
    for (std::size_t w : touched) {
      queue.erase(key[w]);
      key[w] = {fill_of(w), adj[w].size(), w};
      queue.insert(key[w]);
    }
  }

  // Bag of v = v plus its neighbours when eliminated; it hangs under the bag
  // of the earliest-eliminated of those neighbours.
  td.bags.resize(n);
  std::size_t previous_root = kNoParent;
  for (std::size_t step = 0; step < n; ++step) {
    const std::size_t v = order[step];
    std::vector<NodeId> bag{g.nodes()[v]};
    std::size_t parent = kNoParent;
    for (std::size_t a : neighbours_at_elimination[v]) {
      bag.push_back(g.nodes()[a]);
      if (parent == kNoParent || eliminated_at[a] < eliminated_at[parent]) parent = a;
    }
    td.bags[step] = NodeSet(std::move(bag));
    if (parent != kNoParent) {
      td.tree_edges.emplace_back(step, eliminated_at[parent]);
    } else {
      // last node of a component: chain component roots together
      if (previous_root != kNoParent) td.tree_edges.emplace_back(previous_root, step);
      previous_root = step;
    }
  }
  return compact(td);
}

}  // namespace gcsg
