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

#include <gtest/gtest.h>

#include <cmath>

#include "expect_error.hpp"
#include "fixtures.hpp"
#include "gcsg/generators.hpp"
#include "oracles.hpp"

namespace gcsg {
namespace {

using testing::code_of;

TEST(GridSeparator, ThreeByThree) {
  const Separator s = grid_separator(grid_graph(3, 3), 3, 3);
  EXPECT_EQ(s.separator, (NodeSet{1, 4, 7}));
  EXPECT_EQ(s.side_a.size(), 3u);
  EXPECT_EQ(s.side_b.size(), 3u);
}

TEST(GridSeparator, OneByFive) {
  const Separator s = grid_separator(grid_graph(1, 5), 1, 5);
  EXPECT_EQ(s.separator, (NodeSet{2}));
  EXPECT_EQ(s.side_a, (NodeSet{0, 1}));
  EXPECT_EQ(s.side_b, (NodeSet{3, 4}));
}

// A central column of the 2x2 grid has two nodes and leaves two on one side
// only: with two columns no column has a node on both sides.
TEST(GridSeparator, TwoByTwo) {
  const Graph g = grid_graph(2, 2);
  const Separator s = grid_separator(g, 2, 2);
  EXPECT_EQ(s.separator.size(), 2u);
  EXPECT_EQ(s.side_a.size() + s.side_b.size(), 2u);
  check_separator(g, s);
}

TEST(GridSeparator, ValidAndBoundedOnAllGrids) {
  for (std::size_t r = 1; r <= 8; ++r) {
    for (std::size_t c = 1; c <= 8; ++c) {
      const Graph g = grid_graph(r, c);
      const Separator s = grid_separator(g, r, c);
      check_separator(g, s);
      const double n = static_cast<double>(r * c);
      EXPECT_LE(s.separator.size(), std::ceil(std::sqrt(n))) << r << "x" << c;
      EXPECT_LE(s.side_a.size(), n / 2);
      EXPECT_LE(s.side_b.size(), n / 2);
    }
  }
}

TEST(GridSeparator, RejectsNonGrids) {
  EXPECT_EQ(code_of([] { grid_separator(path_graph(5), 2, 3); }), ErrorCode::kNotAGrid);
  EXPECT_EQ(code_of([] { grid_separator(cycle_graph(4), 2, 2); }), ErrorCode::kNotAGrid);
}

TEST(CheckSeparator, RejectsCrossingEdges) {
  const Graph path = path_graph(3);
  EXPECT_EQ(code_of([&] { check_separator(path, {{}, {0}, {1, 2}}); }),
            ErrorCode::kInvalidSeparator);
  EXPECT_EQ(code_of([&] { check_separator(path, {{1}, {0}, {}}); }),
            ErrorCode::kInvalidSeparator);
}

TEST(GreedySeparator, Examples) {
  const Separator path = greedy_separator(path_graph(5));
  EXPECT_EQ(path.separator, (NodeSet{2}));
  EXPECT_EQ(path.side_a, (NodeSet{0, 1}));
  EXPECT_EQ(path.side_b, (NodeSet{3, 4}));

  const Separator star = greedy_separator(star_graph(5));
  EXPECT_EQ(star.separator, (NodeSet{0}));
  EXPECT_EQ(star.side_a.size(), 2u);
  EXPECT_EQ(star.side_b.size(), 2u);

  const Graph k4 = complete_graph(4);
  const Separator k = greedy_separator(k4);
  check_separator(k4, k);
  EXPECT_GE(k.separator.size(), 2u);

  const Separator tiny = greedy_separator(path_graph(2));
  EXPECT_EQ(tiny.separator, (NodeSet{0, 1}));
}

TEST(GreedySeparator, ValidAndBalancedOnFamilies) {
  for (const auto& inst : testing::family_graphs(9, 3, 37)) {
    if (inst.graph.node_count() < 3 || connected_components(inst.graph).size() != 1) continue;
    const Separator s = greedy_separator(inst.graph);
    check_separator(inst.graph, s);
    const std::size_t n = inst.graph.node_count();
    EXPECT_LE(s.side_a.size(), (2 * n + 2) / 3) << inst.name;
    EXPECT_LE(s.side_b.size(), (2 * n + 2) / 3) << inst.name;
  }
}

TEST(SeparatorDecompose, Examples) {
  const Graph single = path_graph(1);
  const TreeDecomposition one = separator_decompose(single, greedy_separator);
  EXPECT_EQ(one.bags, (std::vector<NodeSet>{{0}}));

  const Graph grid = grid_graph(3, 3);
  SeparatorTrace trace;
  const TreeDecomposition td =
      separator_decompose(grid, grid_separator_finder(3, 3), {1, 0.5, 0.5}, &trace);
  EXPECT_TRUE(validate(td, grid).ok());
  EXPECT_LE(width(td), 10u);
  EXPECT_TRUE(trace.within_bound);

  const Graph path = path_graph(8);
  EXPECT_TRUE(validate(separator_decompose(path, greedy_separator), path).ok());
}

TEST(SeparatorDecompose, ValidOnFamilies) {
  for (const auto& inst : testing::family_graphs(9, 3, 41)) {
    const TreeDecomposition td = separator_decompose(inst.graph, greedy_separator);
    EXPECT_TRUE(validate(td, inst.graph).ok()) << inst.name;
    EXPECT_TRUE(testing::brute_valid(td, inst.graph)) << inst.name;
  }
}

TEST(SeparatorDecompose, RejectsBadFinder) {
  const Graph path = path_graph(4);
  const SeparatorFinder crossing = [](const Graph& g) {
    std::vector<NodeId> ids(g.nodes().begin(), g.nodes().end());
    return Separator{{}, NodeSet({ids.front()}), NodeSet(std::vector<NodeId>(ids.begin() + 1, ids.end()))};
  };
  EXPECT_EQ(code_of([&] { separator_decompose(path, crossing); }), ErrorCode::kInvalidSeparator);
}

TEST(SeparatorBound, Formula) {
  const SeparatorBound grid{1, 0.5, 0.5};
  EXPECT_NEAR(grid.width_bound(9), 3 / (1 - std::sqrt(0.5)), 1e-12);
  EXPECT_EQ(std::floor(grid.width_bound(9)), 10);
}

}  // namespace
}  // namespace gcsg
