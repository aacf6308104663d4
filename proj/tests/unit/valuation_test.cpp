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

#include "gcsg/valuation.hpp"

#include <gtest/gtest.h>

#include "expect_error.hpp"
#include "fixtures.hpp"
#include "gcsg/generators.hpp"
#include "oracles.hpp"

namespace gcsg {
namespace {

using testing::code_of;
using testing::make_graph;
using testing::t3;

Graph labeled_edge(EdgeLabel label) { return Graph::Build({0, 1}, {{0, 1, std::nullopt, label}}); }

ValuationSpec small_table() {
  return {ValuationKind::kTable, {{NodeSet{}, 0}, {NodeSet{0}, 1}, {NodeSet{1}, 2}, {NodeSet{0, 1}, 5}}};
}

TEST(EdgeSum, Examples) {
  EXPECT_EQ(edge_sum_value(t3(), {0, 1, 2}), 1);
  EXPECT_EQ(edge_sum_value(t3(), {}), 0);
  EXPECT_EQ(edge_sum_value(t3(), {1, 2}), 3);
  EXPECT_EQ(code_of([] { edge_sum_value(make_graph(2, {{0, 1}}), {0, 1}); }),
            ErrorCode::kMissingWeights);
}

TEST(Correlation, Examples) {
  EXPECT_EQ(correlation_value(labeled_edge(EdgeLabel::kPlus), {0, 1}), 1);
  EXPECT_EQ(correlation_value(labeled_edge(EdgeLabel::kMinus), {0}), 1);
  EXPECT_EQ(correlation_value(labeled_edge(EdgeLabel::kMinus), {0, 1}), 0);
  EXPECT_EQ(code_of([] { correlation_value(t3(), {0}); }), ErrorCode::kMissingLabels);
}

TEST(Coordination, Examples) {
  const Graph path = make_graph(3, {{0, 1}, {1, 2}});
  EXPECT_EQ(coordination_value(path, {0, 1}), 1);
  EXPECT_EQ(coordination_value(path, {0, 1, 2}), 0);
  const Graph star = star_graph(4);
  EXPECT_EQ(coordination_value(star, {0, 1}), 2);
}

TEST(Modularity, Examples) {
  const Graph edge = make_graph(2, {{0, 1}});
  EXPECT_DOUBLE_EQ(modularity_value(edge, {0, 1}), 0.75);
  EXPECT_DOUBLE_EQ(modularity_value(edge, {}), 0);
  EXPECT_DOUBLE_EQ(modularity_value(edge, {0}), -0.25);
  EXPECT_EQ(code_of([] { modularity_value(make_graph(2, {}), {0}); }), ErrorCode::kEmptyEdgeSet);
}

TEST(Table, Examples) {
  const ValuationSpec spec = small_table();
  EXPECT_EQ(table_value(spec, {0, 1}), 5);
  EXPECT_EQ(table_value(spec, {}), 0);
  EXPECT_EQ(code_of([&] { table_value(spec, {2}); }), ErrorCode::kMissingEntry);
}

TEST(Table, ValidationRejectsBadTables) {
  const Graph g = make_graph(2, {{0, 1}});
  ValuationSpec no_empty = small_table();
  no_empty.table.erase(NodeSet{});
  try {
    Valuation(g, no_empty);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidTable);
    EXPECT_NE(std::string(e.what()).find("table must define the empty set with value 0"),
              std::string::npos);
  }
  ValuationSpec partial = small_table();
  partial.table.erase(NodeSet{1});
  EXPECT_EQ(code_of([&] { Valuation(g, partial); }), ErrorCode::kInvalidTable);
}

// Every built-in kind against its definition-level oracle on all subsets of
// the family graphs.
TEST(Valuations, MatchBruteForceDefinitions) {
  for (const auto& inst : testing::family_graphs(6, 2, 11)) {
    for (const NodeSet& c : testing::all_subsets(NodeSet(inst.graph.nodes()))) {
      EXPECT_EQ(edge_sum_value(inst.graph, c), testing::brute_edge_sum(inst.graph, c)) << inst.name;
      EXPECT_EQ(correlation_value(inst.graph, c), testing::brute_correlation(inst.graph, c))
          << inst.name;
      EXPECT_EQ(coordination_value(inst.graph, c), testing::brute_coordination(inst.graph, c))
          << inst.name;
      if (inst.graph.edge_count() > 0) {
        EXPECT_NEAR(modularity_value(inst.graph, c), testing::brute_modularity(inst.graph, c),
                    kValueTolerance)
            << inst.name;
      }
    }
  }
}

TEST(Valuations, EmptyCoalitionIsZero) {
  for (const auto& inst : testing::family_graphs(5, 1, 3)) {
    for (ValuationKind kind : testing::kIdmKinds) {
      EXPECT_EQ(Valuation(inst.graph, {kind, {}})(NodeSet{}), 0) << inst.name;
    }
  }
}

TEST(CheckIdm, EdgeSumAndCorrelationPassOnFamilies) {
  for (const auto& inst : testing::family_graphs(7, 1, 5)) {
    for (ValuationKind kind : {ValuationKind::kEdgeSum, ValuationKind::kCorrelation}) {
      const Valuation v(inst.graph, {kind, {}});
      const IdmReport report = check_idm(inst.graph, v);
      EXPECT_TRUE(report.pass()) << inst.name << " " << to_string(kind);
    }
  }
}

TEST(CheckIdm, ModularityViolatedOnPath) {
  const Graph path = make_graph(3, {{0, 1}, {1, 2}});
  const Valuation v(path, {ValuationKind::kModularity, {}});
  const IdmReport report = check_idm(path, v);
  ASSERT_FALSE(report.pass());
  const IdmViolation& bad = *report.violation;
  // The only non-adjacent pair is (0, 2); C = {} is the smallest coalition.
  EXPECT_EQ(bad.i, 0u);
  EXPECT_EQ(bad.j, 2u);
  EXPECT_TRUE(bad.coalition.empty());
  EXPECT_DOUBLE_EQ(bad.lhs, testing::brute_modularity(path, {0}));
  EXPECT_DOUBLE_EQ(bad.rhs, testing::brute_modularity(path, {0, 2}) -
                                testing::brute_modularity(path, {2}));
}

// The printed coordination formula: on the path 0-1-2 the marginal of 0 to
// {1} is n_0 + change in n_1 = 0 + (1 - 0) = 1 without 2 and -1 with 2 inside.
TEST(CheckIdm, CoordinationMarginalDependsOnSharedNeighbour) {
  const Graph path = make_graph(3, {{0, 1}, {1, 2}});
  const double without_j = testing::brute_coordination(path, {0, 1}) -
                           testing::brute_coordination(path, {1});
  const double with_j = testing::brute_coordination(path, {0, 1, 2}) -
                        testing::brute_coordination(path, {1, 2});
  EXPECT_EQ(without_j, 1);
  EXPECT_EQ(with_j, -1);
  const Valuation v(path, {ValuationKind::kCoordination, {}});
  EXPECT_FALSE(check_idm(path, v).pass());
  EXPECT_FALSE(v.idm());
}

TEST(CheckIdm, CompleteGraphPassesVacuously) {
  const Graph k3 = complete_graph(3);
  const Valuation v(k3, {ValuationKind::kModularity, {}});
  const IdmReport report = check_idm(k3, v);
  EXPECT_TRUE(report.pass());
  EXPECT_EQ(report.checks, 0u);
}

TEST(CheckIdm, TooLarge) {
  std::mt19937_64 rng(1);
  const Graph g = with_random_weights(path_graph(13), rng, -1, 1);
  const Valuation v(g, {ValuationKind::kEdgeSum, {}});
  EXPECT_EQ(code_of([&] { check_idm(g, v); }), ErrorCode::kTooLarge);
}

TEST(SeparatorAdditivity, Examples) {
  const Graph path = testing::make_weighted(3, {{0, 1, 4}, {1, 2, -2}});
  const Valuation v(path, {ValuationKind::kEdgeSum, {}});
  EXPECT_TRUE(check_separator_additivity(path, v, {0, 1}, {1, 2}));
  EXPECT_TRUE(check_separator_additivity(path, v, {0, 1}, {0, 1}));
  EXPECT_TRUE(check_separator_additivity(path, v, {1}, {0, 1, 2}));
  EXPECT_EQ(code_of([&] { check_separator_additivity(path, v, {0}, {1}); }),
            ErrorCode::kSeparationViolated);
}

// Additivity over every separated pair for edge sum and correlation.
TEST(SeparatorAdditivity, HoldsForSeparatedPairs) {
  for (const auto& inst : testing::family_graphs(5, 1, 9)) {
    const auto subsets = testing::all_subsets(NodeSet(inst.graph.nodes()));
    for (ValuationKind kind : {ValuationKind::kEdgeSum, ValuationKind::kCorrelation}) {
      const Valuation v(inst.graph, {kind, {}});
      for (const NodeSet& a : subsets) {
        for (const NodeSet& b : subsets) {
          const NodeSet only_a = set_difference(a, b), only_b = set_difference(b, a);
          bool separated = true;
          for (const Edge& e : inst.graph.edges()) {
            if ((only_a.contains(e.u) && only_b.contains(e.v)) ||
                (only_a.contains(e.v) && only_b.contains(e.u))) {
              separated = false;
            }
          }
          if (!separated) continue;
          EXPECT_TRUE(check_separator_additivity(inst.graph, v, a, b)) << inst.name;
        }
      }
    }
  }
}

}  // namespace
}  // namespace gcsg
