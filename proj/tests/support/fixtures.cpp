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

#include "fixtures.hpp"

#include <random>

#include "gcsg/generators.hpp"

namespace gcsg::testing {
namespace {

std::vector<NodeId> iota_ids(std::size_t n) {
  std::vector<NodeId> ids(n);
  for (std::size_t i = 0; i < n; ++i) ids[i] = i;
  return ids;
}

}  // namespace

Graph t3() { return make_weighted(3, {{0, 1, 2}, {1, 2, 3}, {0, 2, -4}}); }

Graph make_graph(std::size_t n, const std::vector<std::pair<NodeId, NodeId>>& edges) {
  std::vector<EdgeSpec> specs;
  for (const auto& [u, v] : edges) specs.push_back({u, v, std::nullopt, std::nullopt});
  return Graph::Build(iota_ids(n), specs);
}

Graph make_weighted(std::size_t n, const std::vector<std::tuple<NodeId, NodeId, double>>& edges) {
  std::vector<EdgeSpec> specs;
  for (const auto& [u, v, w] : edges) specs.push_back({u, v, w, std::nullopt});
  return Graph::Build(iota_ids(n), specs);
}

std::vector<Instance> family_graphs(std::size_t max_n, std::size_t random_per_size,
                                    std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Instance> raw;
  for (std::size_t n = 1; n <= max_n; ++n) {
    raw.push_back({"path" + std::to_string(n), path_graph(n)});
    if (n >= 3) raw.push_back({"cycle" + std::to_string(n), cycle_graph(n)});
    if (n >= 3) raw.push_back({"star" + std::to_string(n), star_graph(n)});
    if (n <= 4) raw.push_back({"complete" + std::to_string(n), complete_graph(n)});
    for (std::size_t r = 2; r * r <= n; ++r) {
      if (n % r == 0) {
        raw.push_back({"grid" + std::to_string(r) + "x" + std::to_string(n / r),
                       grid_graph(r, n / r)});
      }
    }
    for (std::size_t k = 0; k < random_per_size && n >= 2; ++k) {
      raw.push_back({"random" + std::to_string(n) + "_" + std::to_string(k),
                     random_sparse_graph(n, 2 * n, rng)});
    }
  }
  std::vector<Instance> out;
  for (auto& inst : raw) {
    out.push_back({inst.name, with_random_weights_and_labels(inst.graph, rng, -5, 5)});
  }
  return out;
}

}  // namespace gcsg::testing
