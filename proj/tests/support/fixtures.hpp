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

#ifndef GCSG_TESTS_SUPPORT_FIXTURES_HPP_
#define GCSG_TESTS_SUPPORT_FIXTURES_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "gcsg/graph.hpp"
#include "gcsg/valuation.hpp"

namespace gcsg::testing {

struct Instance {
  std::string name;
  Graph graph;
};

// The triangle 0-1-2 with weights w01 = 2, w12 = 3, w02 = -4.
Graph t3();

// Graph from an edge list over nodes 0..n-1, unweighted.
Graph make_graph(std::size_t n, const std::vector<std::pair<NodeId, NodeId>>& edges);
Graph make_weighted(std::size_t n, const std::vector<std::tuple<NodeId, NodeId, double>>& edges);

// Family graphs with 1 <= n <= max_n: paths, cycles, stars, grids, complete
// graphs up to K4 and `random_per_size` sparse random graphs (e <= 2n) per
// size. Every graph carries integer weights in [-5, 5] and random labels.
std::vector<Instance> family_graphs(std::size_t max_n, std::size_t random_per_size,
                                    std::uint64_t seed);

// Built-in valuations documented as independent of disconnected members.
inline const std::vector<ValuationKind> kIdmKinds{ValuationKind::kEdgeSum,
                                                  ValuationKind::kCorrelation,
                                                  ValuationKind::kCoordination};

}  // namespace gcsg::testing

#endif  // GCSG_TESTS_SUPPORT_FIXTURES_HPP_
