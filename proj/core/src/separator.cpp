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

#include "gcsg/separator.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "gcsg/error.hpp"

namespace gcsg {
namespace {

struct Rectangle {
  std::size_t row0, row1;  // [row0, row1)
  std::size_t col0, col1;  // [col0, col1)
};

Separator cut_rectangle(const Rectangle& r, std::size_t cols) {
  const std::size_t height = r.row1 - r.row0;
  const std::size_t breadth = r.col1 - r.col0;
  std::vector<NodeId> s, a, b;
  if (height <= breadth) {
    const std::size_t mid = r.col0 + breadth / 2;
    for (std::size_t i = r.row0; i < r.row1; ++i) {
      for (std::size_t j = r.col0; j < r.col1; ++j) {
        (j < mid ? a : j == mid ? s : b).push_back(grid_node(i, j, cols));
      }
    }
  } else {
    const std::size_t mid = r.row0 + height / 2;
    for (std::size_t i = r.row0; i < r.row1; ++i) {
      for (std::size_t j = r.col0; j < r.col1; ++j) {
        (i < mid ? a : i == mid ? s : b).push_back(grid_node(i, j, cols));
      }
    }
  }
  return {NodeSet(std::move(s)), NodeSet(std::move(a)), NodeSet(std::move(b))};
}

// Sub-rectangle of the rows x cols grid spanned by g, if g is exactly the
// grid graph induced on it.
Rectangle as_rectangle(const Graph& g, std::size_t rows, std::size_t cols) {
  if (g.node_count() == 0 || cols == 0) {
    throw Error(ErrorCode::kNotAGrid, "empty graph is not a grid");
  }
  Rectangle r{rows, 0, cols, 0};
  for (NodeId x : g.nodes()) {
    if (x >= rows * cols) {
      throw Error(ErrorCode::kNotAGrid, "node " + std::to_string(x) + " is outside the " +
                                            std::to_string(rows) + "x" + std::to_string(cols) +
                                            " grid");
    }
    const std::size_t i = x / cols;
    const std::size_t j = x % cols;
    r.row0 = std::min(r.row0, i);
    r.row1 = std::max(r.row1, i + 1);
    r.col0 = std::min(r.col0, j);
    r.col1 = std::max(r.col1, j + 1);
  }
  const std::size_t h = r.row1 - r.row0;
  const std::size_t w = r.col1 - r.col0;
  if (g.node_count() != h * w) {
    throw Error(ErrorCode::kNotAGrid, "nodes do not fill a rectangle of the grid");
  }
  if (g.edge_count() != h * (w - 1) + w * (h - 1)) {
    throw Error(ErrorCode::kNotAGrid, "edge count does not match a grid");
  }
  for (const Edge& e : g.edges()) {
    const bool horizontal = e.v == e.u + 1 && e.u % cols + 1 < cols;
    const bool vertical = e.v == e.u + cols;
    if (!horizontal && !vertical) {
      throw Error(ErrorCode::kNotAGrid, "edge (" + std::to_string(e.u) + ", " +
                                            std::to_string(e.v) + ") is not a grid edge");
    }
  }
  return r;
}

}  // namespace

void check_separator(const Graph& g, const Separator& s) {
  const std::size_t total = s.separator.size() + s.side_a.size() + s.side_b.size();
  const NodeSet all = set_union(set_union(s.separator, s.side_a), s.side_b);
  if (total != g.node_count() || all != g.nodes()) {
    throw Error(ErrorCode::kInvalidSeparator,
                "separator and sides do not partition the graph's nodes");
  }
  for (NodeId x : s.side_a) {
    for (const Incidence& inc : g.incident(x)) {
      if (s.side_b.contains(inc.neighbor)) {
        throw Error(ErrorCode::kInvalidSeparator,
                    "edge (" + std::to_string(x) + ", " + std::to_string(inc.neighbor) +
                        ") crosses the separator");
      }
    }
  }
}

NodeId grid_node(std::size_t row, std::size_t col, std::size_t cols) {
  return static_cast<NodeId>(row * cols + col);
}

Separator grid_separator(const Graph& g, std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0 || g.node_count() != rows * cols) {
    throw Error(ErrorCode::kNotAGrid, "graph does not have " + std::to_string(rows) + "x" +
                                          std::to_string(cols) + " nodes");
  }
  const Rectangle r = as_rectangle(g, rows, cols);
  if (r.row1 - r.row0 != rows || r.col1 - r.col0 != cols) {
    throw Error(ErrorCode::kNotAGrid, "graph is not the full grid");
  }
  return cut_rectangle(r, cols);
}

SeparatorFinder grid_separator_finder(std::size_t rows, std::size_t cols) {
  return [rows, cols](const Graph& g) { return cut_rectangle(as_rectangle(g, rows, cols), cols); };
}

Separator greedy_separator(const Graph& g) {
  const std::size_t n = g.node_count();
  if (n <= 2) return {g.nodes(), {}, {}};

  auto bfs_levels = [&](NodeId start) {
    std::vector<std::vector<NodeId>> levels;
    std::vector<std::size_t> depth(n, kNoParent);
    std::vector<NodeId> frontier{start};
    depth[g.index_of(start)] = 0;
    while (!frontier.empty()) {
      std::sort(frontier.begin(), frontier.end());
      levels.push_back(frontier);
      std::vector<NodeId> next;
      for (NodeId x : frontier) {
        for (const Incidence& inc : g.incident(x)) {
          const std::size_t j = g.index_of(inc.neighbor);
          if (depth[j] == kNoParent) {
            depth[j] = levels.size();
            next.push_back(inc.neighbor);
          }
        }
      }
      frontier = std::move(next);
    }
    return levels;
  };

  const NodeId start = bfs_levels(g.nodes().front()).back().front();
  const auto levels = bfs_levels(start);
  const std::size_t limit = 2 * n / 3;

  std::optional<Separator> best;
  auto better = [](const Separator& x, const Separator& y) {
    const std::size_t mx = std::max(x.side_a.size(), x.side_b.size());
    const std::size_t my = std::max(y.side_a.size(), y.side_b.size());
    return x.separator.size() != y.separator.size() ? x.separator.size() < y.separator.size()
                                                    : mx < my;
  };

  for (const auto& level : levels) {
    NodeSet cut = NodeSet::FromSorted(level);
    // components of G - cut, largest first, ties by smallest member
    std::vector<NodeSet> parts =
        connected_components(induced_subgraph(g, set_difference(g.nodes(), cut)));
    std::stable_sort(parts.begin(), parts.end(), [](const NodeSet& a, const NodeSet& b) {
      return a.size() > b.size();
    });
    std::vector<NodeId> a, b;
    for (const NodeSet& part : parts) {
      auto& side = a.size() <= b.size() ? a : b;
      side.insert(side.end(), part.begin(), part.end());
    }
    if (a.size() > limit || b.size() > limit) continue;
    Separator candidate{cut, NodeSet(std::move(a)), NodeSet(std::move(b))};
    if (!best || better(candidate, *best)) best = std::move(candidate);
  }
  if (!best) {
    const NodeId lone = g.nodes().front();
    best = Separator{set_difference(g.nodes(), NodeSet{lone}), NodeSet{lone}, {}};
  }
  return *best;
}

double SeparatorBound::width_bound(std::size_t n) const {
  return beta * std::pow(static_cast<double>(n), exponent) / (1.0 - std::pow(alpha, exponent));
}

namespace {

void append_with(TreeDecomposition& into, const TreeDecomposition& part, const NodeSet& extra) {
  const std::size_t offset = into.bags.size();
  for (const NodeSet& bag : part.bags) into.bags.push_back(set_union(bag, extra));
  for (const auto& [a, b] : part.tree_edges) into.tree_edges.emplace_back(a + offset, b + offset);
}

// Returned decompositions keep their root at bag 0.
TreeDecomposition decompose(const Graph& g, const SeparatorFinder& finder,
                            const SeparatorBound& bound, SeparatorTrace* trace) {
  const std::size_t n = g.node_count();
  TreeDecomposition td;
  if (n == 0) return td;

  const auto components = connected_components(g);
  if (components.size() > 1) {
    for (const NodeSet& c : components) {
      const std::size_t root = td.bags.size();
      append_with(td, decompose(induced_subgraph(g, c), finder, bound, trace), {});
      if (root > 0) td.tree_edges.emplace_back(0, root);
    }
    return td;
  }
  if (n == 1) {
    td.bags.push_back(g.nodes());
    return td;
  }

  const Separator sep = finder(g);
  check_separator(g, sep);
  if (sep.side_a.size() == n || sep.side_b.size() == n) {
    throw Error(ErrorCode::kInvalidSeparator, "separator does not shrink the graph");
  }
  if (trace) {
    ++trace->separators;
    const double nn = static_cast<double>(n);
    const double size_cap = bound.beta * std::pow(nn, bound.exponent) + 1e-9;
    const double side_cap = bound.alpha * nn + 1e-9;
    if (static_cast<double>(sep.separator.size()) > size_cap ||
        static_cast<double>(sep.side_a.size()) > side_cap ||
        static_cast<double>(sep.side_b.size()) > side_cap) {
      trace->within_bound = false;
    }
  }

  if (sep.side_a.empty() && sep.side_b.empty()) {
    td.bags.push_back(g.nodes());
    return td;
  }
  if (!sep.side_a.empty()) {
    append_with(td, decompose(induced_subgraph(g, sep.side_a), finder, bound, trace),
                sep.separator);
  }
  if (!sep.side_b.empty()) {
    const std::size_t root_b = td.bags.size();
    append_with(td, decompose(induced_subgraph(g, sep.side_b), finder, bound, trace),
                sep.separator);
    if (root_b > 0) td.tree_edges.emplace_back(0, root_b);
  }
  return td;
}

}  // namespace

TreeDecomposition separator_decompose(const Graph& g, const SeparatorFinder& finder,
                                      const SeparatorBound& bound, SeparatorTrace* trace) {
  return decompose(g, finder, bound, trace);
}

}  // namespace gcsg
