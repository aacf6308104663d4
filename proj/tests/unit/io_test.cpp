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

#include "gcsg/io.hpp"

#include <gtest/gtest.h>

#include <random>

#include "expect_error.hpp"
#include "fixtures.hpp"
#include "gcsg/generators.hpp"

namespace gcsg {
namespace {

using testing::code_of;

std::string data(const std::string& name) { return read_text_file(GCSG_TEST_DATA_DIR "/" + name); }

void expect_same(const Problem& a, const Problem& b) {
  EXPECT_EQ(a.graph, b.graph);
  EXPECT_EQ(a.valuation.kind, b.valuation.kind);
  EXPECT_EQ(a.valuation.table, b.valuation.table);
  ASSERT_EQ(a.grid.has_value(), b.grid.has_value());
  if (a.grid) {
    EXPECT_EQ(a.grid->rows, b.grid->rows);
    EXPECT_EQ(a.grid->cols, b.grid->cols);
  }
}

TEST(ParseProblem, TriangleFixture) {
  const Problem p = parse_problem(data("t3.json"));
  EXPECT_EQ(p.graph, testing::t3());
  EXPECT_EQ(p.valuation.kind, ValuationKind::kEdgeSum);
  EXPECT_FALSE(p.grid.has_value());
}

TEST(ParseProblem, UnknownEndpointCarriesFieldPath) {
  const std::string text = R"({"graph": {"nodes": [0, 1], "edges": [{"u": 0, "v": 1},
      {"u": 1, "v": 9}]}, "valuation": {"kind": "coordination"}})";
  try {
    parse_problem(text);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownEndpoint);
    EXPECT_NE(std::string(e.what()).find("graph.edges[1]"), std::string::npos) << e.what();
  }
}

TEST(ParseProblem, TableWithoutEmptySet) {
  const std::string text = R"({"graph": {"nodes": [0], "edges": []},
      "valuation": {"kind": "table", "table": [{"set": [0], "value": 1}]}})";
  try {
    parse_problem(text);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kValidationError);
    EXPECT_NE(std::string(e.what()).find("table must define the empty set with value 0"),
              std::string::npos);
  }
}

TEST(ParseProblem, SchemaErrors) {
  EXPECT_EQ(code_of([] { parse_problem("{"); }), ErrorCode::kParseError);
  EXPECT_EQ(code_of([] { parse_problem(R"({"graph": {"nodes": [0]}})"); }), ErrorCode::kParseError);
  EXPECT_EQ(code_of([] {
              parse_problem(R"({"graph": {"nodes": [0], "edges": []}, "valuation": {"kind": "x"}})");
            }),
            ErrorCode::kParseError);
  EXPECT_EQ(code_of([] {
              parse_problem(R"({"graph": {"nodes": [0, 1], "edges": [{"u": 0, "v": 1}]},
                  "valuation": {"kind": "edge_sum"}})");
            }),
            ErrorCode::kValidationError);
  EXPECT_EQ(code_of([] {
              parse_problem(R"({"graph": {"nodes": [0, 1, 2], "edges": []},
                  "valuation": {"kind": "correlation"}, "grid": {"rows": 2, "cols": 2}})");
            }),
            ErrorCode::kValidationError);
}

TEST(RoundTrip, Fixtures) {
  for (const char* name : {"t3.json", "path3_modularity.json", "grid3x3.json", "table2.json"}) {
    const Problem first = parse_problem(data(name));
    const std::string text = serialize_problem(first);
    const Problem second = parse_problem(text);
    expect_same(first, second);
    EXPECT_EQ(serialize_problem(second), text) << name;
  }
}

TEST(RoundTrip, RandomProblems) {
  for (const auto& inst : testing::family_graphs(6, 2, 67)) {
    for (ValuationKind kind : testing::kIdmKinds) {
      const Problem p{inst.graph, {kind, {}}, std::nullopt};
      expect_same(p, parse_problem(serialize_problem(p)));
    }
  }
}

TEST(Decomposition, RoundTripAndFormat) {
  const TreeDecomposition td{{{0, 1}, {1, 2}}, {{0, 1}}};
  const std::string text = serialize_decomposition(td);
  EXPECT_EQ(parse_decomposition(text), td);
  EXPECT_EQ(parse_decomposition(R"({"bags": [[1, 0], [2, 1]], "tree": [[0, 1]]})"), td);
  EXPECT_EQ(code_of([] { parse_decomposition(R"({"bags": [[0]], "tree": [[0, 3]]})"); }),
            ErrorCode::kParseError);
}

TEST(SerializeResult, Layout) {
  SolveResult r;
  r.structure = CoalitionStructure::FromBlocks({{1, 2}, {0}});
  r.value = 3;
  r.stats.algorithm = "oracle";
  r.stats.candidates = 5;
  r.stats.elapsed_ms = 1.5;
  const std::string plain = serialize_result(r, false);
  EXPECT_EQ(plain.find("stats"), std::string::npos);
  const std::string full = serialize_result(r, true);
  EXPECT_NE(full.find("\"candidates\": 5"), std::string::npos);
  EXPECT_NE(full.find("elapsed_ms"), std::string::npos);
  EXPECT_EQ(serialize_result(r, true, false).find("elapsed_ms"), std::string::npos);
}

TEST(ReadTextFile, MissingFile) {
  EXPECT_EQ(code_of([] { read_text_file("/nonexistent/gcsg.json"); }), ErrorCode::kParseError);
}

}  // namespace
}  // namespace gcsg
