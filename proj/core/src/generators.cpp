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

#include "gcsg/generators.hpp"

#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "gcsg/error.hpp"

namespace gcsg {
namespace {

std::vector<NodeId> iota_nodes(std::size_t n) {
  std::vector<NodeId> nodes(n);
  std::iota(nodes.begin(), nodes.end(), NodeId{0});
  return nodes;
}

Graph decorate(const Graph& g, std::mt19937_64& rng, bool weights, bool labels, int lo, int hi) {
  std::uniform_int_distribution<int> weight(lo, hi);
  std::bernoulli_distribution positive(0.5);
  std::vector<EdgeSpec> edges;
  for (const Edge& e : g.edges()) {
    EdgeSpec s{e.u, e.v, std::nullopt, std::nullopt};
    if (weights) s.weight = weight(rng);
    if (labels) s.label = positive(rng) ? EdgeLabel::kPlus : EdgeLabel::kMinus;
    edges.push_back(s);
  }
  return Graph::Build(std::vector<NodeId>(g.nodes().begin(), g.nodes().end()), edges);
}

}  // namespace

Graph path_graph(std::size_t n) {
  std::vector<EdgeSpec> edges;
  for (std::size_t i = 1; i < n; ++i) edges.push_back({i - 1, i, std::nullopt, std::nullopt});
  return Graph::Build(iota_nodes(n), edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw Error(ErrorCode::kValidationError, "a cycle needs at least 3 nodes");
  std::vector<EdgeSpec> edges;
  for (std::size_t i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n, std::nullopt, std::nullopt});
  return Graph::Build(iota_nodes(n), edges);
}

Graph star_graph(std::size_t n) {
  std::vector<EdgeSpec> edges;
  for (std::size_t i = 1; i < n; ++i) edges.push_back({0, i, std::nullopt, std::nullopt});
  return Graph::Build(iota_nodes(n), edges);
}

Graph complete_graph(std::size_t n) {
  std::vector<EdgeSpec> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) edges.push_back({i, j, std::nullopt, std::nullopt});
  }
  return Graph::Build(iota_nodes(n), edges);
}

Graph grid_graph(std::size_t rows, std::size_t cols) {
  std::vector<EdgeSpec> edges;
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const NodeId x = i * cols + j;
      if (j + 1 < cols) edges.push_back({x, x + 1, std::nullopt, std::nullopt});
      if (i + 1 < rows) edges.push_back({x, x + cols, std::nullopt, std::nullopt});
    }
  }
  return Graph::Build(iota_nodes(rows * cols), edges);
}

Graph random_tree(std::size_t n, std::mt19937_64& rng) {
  std::vector<EdgeSpec> edges;
  for (std::size_t t = 1; t < n; ++t) {
    std::uniform_int_distribution<std::size_t> pick(0, t - 1);
    edges.push_back({pick(rng), t, std::nullopt, std::nullopt});
  }
  return Graph::Build(iota_nodes(n), edges);
}

Graph random_sparse_graph(std::size_t n, std::size_t max_edges, std::mt19937_64& rng) {
  std::set<std::pair<std::size_t, std::size_t>> chosen;
  const std::size_t possible = n < 2 ? 0 : n * (n - 1) / 2;
  const std::size_t target = std::min(max_edges, possible);
  if (n >= 2) {
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    while (chosen.size() < target) {
      std::size_t a = pick(rng);
      std::size_t b = pick(rng);
      if (a == b) continue;
      chosen.emplace(std::min(a, b), std::max(a, b));
    }
  }
  std::vector<EdgeSpec> edges;
  for (const auto& [a, b] : chosen) edges.push_back({a, b, std::nullopt, std::nullopt});
  return Graph::Build(iota_nodes(n), edges);
}

Graph with_random_weights(const Graph& g, std::mt19937_64& rng, int lo, int hi) {
  return decorate(g, rng, true, false, lo, hi);
}

Graph with_random_labels(const Graph& g, std::mt19937_64& rng) {
  return decorate(g, rng, false, true, 0, 0);
}

Graph with_random_weights_and_labels(const Graph& g, std::mt19937_64& rng, int lo, int hi) {
  return decorate(g, rng, true, true, lo, hi);
}

}  // namespace gcsg
