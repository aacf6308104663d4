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

#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "json.hpp"

#include "gcsg/error.hpp"
#include "gcsg/separator.hpp"

namespace gcsg {
namespace {

using nlohmann::json;

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::kParseError, path + ": " + what);
}

const json& field(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) schema_error(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) schema_error(path, "missing field \"" + key + "\"");
  return *it;
}

const json& array_field(const json& obj, const std::string& key, const std::string& path) {
  const json& a = field(obj, key, path);
  if (!a.is_array()) schema_error(path + "." + key, "expected an array");
  return a;
}

NodeId node_id(const json& j, const std::string& path) {
  if (!j.is_number_integer() || (j.is_number_integer() && !j.is_number_unsigned() && j.get<std::int64_t>() < 0)) {
    schema_error(path, "expected a non-negative integer node id");
  }
  return j.get<NodeId>();
}

double number(const json& j, const std::string& path) {
  if (!j.is_number()) schema_error(path, "expected a number");
  return j.get<double>();
}

std::size_t count(const json& j, const std::string& path) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
    schema_error(path, "expected a non-negative integer");
  }
  return j.get<std::size_t>();
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParseError, std::string("malformed JSON: ") + e.what());
  }
}

std::vector<NodeId> node_list(const json& a, const std::string& path) {
  if (!a.is_array()) schema_error(path, "expected an array of node ids");
  std::vector<NodeId> ids;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ids.push_back(node_id(a[i], path + "[" + std::to_string(i) + "]"));
  }
  return ids;
}

json number_json(double x) {
  if (std::floor(x) == x && std::fabs(x) < 9.0e15) return json(static_cast<std::int64_t>(x));
  return json(x);
}

json node_array(const NodeSet& s) { return json(std::vector<NodeId>(s.begin(), s.end())); }

}  // namespace

Problem parse_problem(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) schema_error("$", "expected an object");

  const json& graph = field(doc, "graph", "$");
  const json& nodes_json = array_field(graph, "nodes", "graph");
  const json& edges_json = array_field(graph, "edges", "graph");
  const std::vector<NodeId> nodes = node_list(nodes_json, "graph.nodes");

  std::vector<EdgeSpec> edges;
  for (std::size_t i = 0; i < edges_json.size(); ++i) {
    const std::string path = "graph.edges[" + std::to_string(i) + "]";
    const json& e = edges_json[i];
    EdgeSpec spec{node_id(field(e, "u", path), path + ".u"),
                  node_id(field(e, "v", path), path + ".v"), std::nullopt, std::nullopt};
    if (auto w = e.find("weight"); w != e.end()) spec.weight = number(*w, path + ".weight");
    if (auto l = e.find("label"); l != e.end()) {
      if (*l == "+") {
        spec.label = EdgeLabel::kPlus;
      } else if (*l == "-") {
        spec.label = EdgeLabel::kMinus;
      } else {
        schema_error(path + ".label", "expected \"+\" or \"-\"");
      }
    }
    edges.push_back(spec);
  }

  Problem problem;
  try {
    problem.graph = Graph::Build(nodes, edges);
  } catch (const Error& e) {
    std::string path = "graph";
    if (e.item()) {
      path += (e.code() == ErrorCode::kDuplicateNode ? ".nodes[" : ".edges[") +
              std::to_string(*e.item()) + "]";
    }
    throw Error(e.code(), path + ": " + e.what(), e.item());
  }

  const json& val = field(doc, "valuation", "$");
  const json& kind_json = field(val, "kind", "valuation");
  if (!kind_json.is_string()) schema_error("valuation.kind", "expected a string");
  const auto kind = parse_valuation_kind(kind_json.get<std::string>());
  if (!kind) schema_error("valuation.kind", "unknown valuation kind \"" + kind_json.get<std::string>() + "\"");
  problem.valuation.kind = *kind;
  if (*kind == ValuationKind::kTable) {
    const json& table = array_field(val, "table", "valuation");
    for (std::size_t i = 0; i < table.size(); ++i) {
      const std::string path = "valuation.table[" + std::to_string(i) + "]";
      NodeSet set(node_list(field(table[i], "set", path), path + ".set"));
      const double value = number(field(table[i], "value", path), path + ".value");
      if (!problem.valuation.table.emplace(set, value).second) {
        throw Error(ErrorCode::kValidationError, path + ": duplicate entry for " + set.to_string());
      }
    }
  } else if (val.contains("table")) {
    schema_error("valuation.table", "only table valuations carry a table");
  }

  try {
    Valuation check(problem.graph, problem.valuation);
  } catch (const Error& e) {
    throw Error(ErrorCode::kValidationError, std::string("valuation: ") + e.what());
  }

  if (auto grid = doc.find("grid"); grid != doc.end()) {
    GridShape shape{count(field(*grid, "rows", "grid"), "grid.rows"),
                    count(field(*grid, "cols", "grid"), "grid.cols")};
    try {
      grid_separator(problem.graph, shape.rows, shape.cols);
    } catch (const Error& e) {
      throw Error(ErrorCode::kValidationError, std::string("grid: ") + e.what());
    }
    problem.grid = shape;
  }
  return problem;
}

std::string serialize_problem(const Problem& problem) {
  json doc;
  json edges = json::array();
  const Graph& g = problem.graph;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    json e{{"u", g.edges()[i].u}, {"v", g.edges()[i].v}};
    if (g.has_weights()) e["weight"] = number_json(g.weight(i));
    if (g.has_labels()) e["label"] = g.label(i) == EdgeLabel::kPlus ? "+" : "-";
    edges.push_back(std::move(e));
  }
  doc["graph"] = {{"nodes", node_array(g.nodes())}, {"edges", std::move(edges)}};
  json val{{"kind", std::string(to_string(problem.valuation.kind))}};
  if (problem.valuation.kind == ValuationKind::kTable) {
    json table = json::array();
    for (const auto& [set, value] : problem.valuation.table) {
      table.push_back({{"set", node_array(set)}, {"value", number_json(value)}});
    }
    val["table"] = std::move(table);
  }
  doc["valuation"] = std::move(val);
  if (problem.grid) doc["grid"] = {{"rows", problem.grid->rows}, {"cols", problem.grid->cols}};
  return doc.dump(2) + "\n";
}

TreeDecomposition parse_decomposition(std::string_view text) {
  const json doc = parse_json(text);
  TreeDecomposition td;
  const json& bags = array_field(doc, "bags", "$");
  for (std::size_t i = 0; i < bags.size(); ++i) {
    td.bags.emplace_back(node_list(bags[i], "bags[" + std::to_string(i) + "]"));
  }
  const json& tree = array_field(doc, "tree", "$");
  for (std::size_t i = 0; i < tree.size(); ++i) {
    const std::string path = "tree[" + std::to_string(i) + "]";
    if (!tree[i].is_array() || tree[i].size() != 2) schema_error(path, "expected a pair of bag indices");
    const std::size_t a = count(tree[i][0], path + "[0]"), b = count(tree[i][1], path + "[1]");
    if (a >= td.bags.size() || b >= td.bags.size()) schema_error(path, "bag index out of range");
    td.tree_edges.emplace_back(a, b);
  }
  return td;
}

std::string serialize_decomposition(const TreeDecomposition& td) {
  json bags = json::array();
  for (const NodeSet& b : td.bags) bags.push_back(node_array(b));
  json tree = json::array();
  for (const auto& [a, b] : td.tree_edges) tree.push_back({a, b});
  return json{{"bags", std::move(bags)}, {"tree", std::move(tree)}}.dump(2) + "\n";
}

std::string serialize_result(const SolveResult& result, bool include_stats, bool include_timing) {
  json blocks = json::array();
  for (const NodeSet& b : result.structure.blocks()) blocks.push_back(node_array(b));
  json doc{{"blocks", std::move(blocks)}, {"value", number_json(result.value)}};
  if (include_stats) {
    json stats{{"algorithm", result.stats.algorithm},
               {"candidates", result.stats.candidates},
               {"components", result.stats.components}};
    if (result.stats.algorithm == "treedp") {
      stats["bags"] = result.stats.bags;
      stats["width"] = result.stats.width ? json(*result.stats.width) : json(nullptr);
    }
    if (include_timing) stats["elapsed_ms"] = result.stats.elapsed_ms;
    doc["stats"] = std::move(stats);
  }
  return doc.dump(2) + "\n";
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParseError, "cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace gcsg
