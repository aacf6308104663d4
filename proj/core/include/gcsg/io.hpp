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

#ifndef GCSG_IO_HPP_
#define GCSG_IO_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "gcsg/graph.hpp"
#include "gcsg/solvers.hpp"
#include "gcsg/tree_decomposition.hpp"
#include "gcsg/valuation.hpp"

namespace gcsg {

// JSON problem document:
//
//   {
//     "graph": {
//       "nodes": [0, 1, 2],
//       "edges": [{"u": 0, "v": 1, "weight": 2, "label": "+"}, ...]
//     },
//     "valuation": {"kind": "edge_sum"},
//     "grid": {"rows": 3, "cols": 3}            // optional
//   }
//
// "weight" and "label" ("+" or "-") are optional but all-or-nothing. A
// "table" valuation adds "table": [{"set": [0, 1], "value": 5}, ...] covering
// every subset of the nodes, including {"set": [], "value": 0}.
struct Problem {
  Graph graph;
  ValuationSpec valuation;
  std::optional<GridShape> grid;
};

// Throws kParseError for malformed JSON or schema mismatches and
// kValidationError for semantic failures. Graph construction errors keep
// their own code (e.g. kUnknownEndpoint); every message is prefixed with the
// JSON field path.
Problem parse_problem(std::string_view text);
std::string serialize_problem(const Problem& problem);

// {"bags": [[0, 1], [1, 2]], "tree": [[0, 1]]} with 0-based bag indices.
TreeDecomposition parse_decomposition(std::string_view text);
std::string serialize_decomposition(const TreeDecomposition& td);

// {"blocks": [[0], [1, 2]], "value": 3, "stats": {...}}. Stats are emitted
// only when `include_stats` is set; `include_timing` adds elapsed_ms.
std::string serialize_result(const SolveResult& result, bool include_stats,
                             bool include_timing = true);

// Throws kParseError when the file cannot be read.
std::string read_text_file(const std::filesystem::path& path);

}  // namespace gcsg

#endif  // GCSG_IO_HPP_
