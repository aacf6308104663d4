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

#include <cmath>
#include <string>
#include <vector>

#include "gcsg/error.hpp"

namespace gcsg {

std::string_view to_string(ValuationKind kind) {
  switch (kind) {
    case ValuationKind::kEdgeSum: return "edge_sum";
    case ValuationKind::kCorrelation: return "correlation";
    case ValuationKind::kCoordination: return "coordination";
    case ValuationKind::kModularity: return "modularity";
    case ValuationKind::kTable: return "table";
  }
  return "unknown";
}

std::optional<ValuationKind> parse_valuation_kind(std::string_view name) {
  for (ValuationKind k : {ValuationKind::kEdgeSum, ValuationKind::kCorrelation,
                          ValuationKind::kCoordination, ValuationKind::kModularity,
                          ValuationKind::kTable}) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

double edge_sum_value(const Graph& g, const NodeSet& c) {
  if (!g.has_weights() && g.edge_count() > 0) {
    throw Error(ErrorCode::kMissingWeights, "edge_sum valuation needs edge weights");
  }
  require_subset(g, c);
  double total = 0;
  for (NodeId x : c) {
    for (const Incidence& inc : g.incident(x)) {
      if (inc.neighbor > x && c.contains(inc.neighbor)) total += g.weight(inc.edge);
    }
  }
  return total;
}

double correlation_value(const Graph& g, const NodeSet& c) {
  if (!g.has_labels() && g.edge_count() > 0) {
    throw Error(ErrorCode::kMissingLabels, "correlation valuation needs edge labels");
  }
  require_subset(g, c);
  double total = 0;
  for (NodeId x : c) {
    for (const Incidence& inc : g.incident(x)) {
      const bool inside = c.contains(inc.neighbor);
      if (g.label(inc.edge) == EdgeLabel::kPlus) {
        if (inside && inc.neighbor > x) total += 1;
      } else if (!inside) {
        total += 1;
      }
    }
  }
  return total;
}

double coordination_value(const Graph& g, const NodeSet& c) {
  require_subset(g, c);
  double total = 0;
  for (NodeId i : c) {
    std::size_t in = 0;
    std::size_t out = 0;
    for (const Incidence& inc : g.incident(i)) {
      if (c.contains(inc.neighbor)) {
        ++in;
      } else {
        ++out;
      }
    }
    total += static_cast<double>(in * out);
  }
  return total;
}

double modularity_value(const Graph& g, const NodeSet& c) {
  if (g.edge_count() == 0) {
    throw Error(ErrorCode::kEmptyEdgeSet, "modularity is undefined on a graph without edges");
  }
  require_subset(g, c);
  double internal = 0;
  double cut = 0;
  for (NodeId x : c) {
    for (const Incidence& inc : g.incident(x)) {
      if (!c.contains(inc.neighbor)) {
        cut += 1;
      } else if (inc.neighbor > x) {
        internal += 1;
      }
    }
  }
  const double m = static_cast<double>(g.edge_count());
  // Squared term uses |E(C)| + |cut(C)| exactly as the formula is stated,
  // not the degree sum 2|E(C)| + |cut(C)| of textbook modularity.
  const double share = (internal + cut) / (2 * m);
  return internal / m - share * share;
}

double table_value(const ValuationSpec& spec, const NodeSet& c) {
  auto it = spec.table.find(c);
  if (it == spec.table.end()) {
    throw Error(ErrorCode::kMissingEntry, "valuation table has no entry for " + c.to_string());
  }
  return it->second;
}

namespace {

void validate_table(const Graph& g, const ValuationSpec& spec) {
  const std::size_t n = g.node_count();
  if (n >= 30) {
    throw Error(ErrorCode::kTooLarge, "table valuations support at most 29 nodes");
  }
  for (const auto& [set, value] : spec.table) {
    if (!set.is_subset_of(g.nodes())) {
      throw Error(ErrorCode::kInvalidTable,
                  "table entry " + set.to_string() + " is not a subset of the graph's nodes");
    }
    if (!std::isfinite(value)) {
      throw Error(ErrorCode::kInvalidTable, "table entry " + set.to_string() + " is not finite");
    }
  }
  auto empty = spec.table.find(NodeSet{});
  if (empty == spec.table.end() || empty->second != 0.0) {
    throw Error(ErrorCode::kInvalidTable, "table must define the empty set with value 0");
  }
  if (spec.table.size() != (std::size_t{1} << n)) {
    throw Error(ErrorCode::kInvalidTable,
                "table must define every subset of the nodes: expected " +
                    std::to_string(std::size_t{1} << n) + " entries, got " +
                    std::to_string(spec.table.size()));
  }
}

}  // namespace

Valuation::Valuation(const Graph& graph, ValuationSpec spec)
    : graph_(&graph), spec_(std::move(spec)) {
  switch (spec_.kind) {
    case ValuationKind::kEdgeSum:
      if (!graph.has_weights() && graph.edge_count() > 0) {
        throw Error(ErrorCode::kMissingWeights, "edge_sum valuation needs edge weights");
      }
      exact_ = graph.exact();
      idm_ = true;
      break;
    case ValuationKind::kCorrelation:
      if (!graph.has_labels() && graph.edge_count() > 0) {
        throw Error(ErrorCode::kMissingLabels, "correlation valuation needs edge labels");
      }
      exact_ = true;
      idm_ = true;
      break;
    case ValuationKind::kCoordination:
      exact_ = true;
      break;
    case ValuationKind::kModularity:
      if (graph.edge_count() == 0) {
        throw Error(ErrorCode::kEmptyEdgeSet,
                    "modularity is undefined on a graph without edges");
      }
      exact_ = false;
      break;
    case ValuationKind::kTable:
      validate_table(graph, spec_);
      exact_ = std::all_of(spec_.table.begin(), spec_.table.end(),
                           [](const auto& kv) { return std::floor(kv.second) == kv.second; });
      break;
  }
  if (!idm_ && graph.node_count() <= kDefaultIdmMaxNodes) {
    idm_ = check_idm(graph, *this).pass();
  }
}

double Valuation::operator()(const NodeSet& c) const {
  switch (spec_.kind) {
    case ValuationKind::kEdgeSum: return edge_sum_value(*graph_, c);
    case ValuationKind::kCorrelation: return correlation_value(*graph_, c);
    case ValuationKind::kCoordination: return coordination_value(*graph_, c);
    case ValuationKind::kModularity: return modularity_value(*graph_, c);
    case ValuationKind::kTable:
      require_subset(*graph_, c);
      return table_value(spec_, c);
  }
  throw Error(ErrorCode::kInternal, "unhandled valuation kind");
}

bool values_equal(double a, double b, double tolerance) {
  return tolerance == 0.0 ? a == b : std::fabs(a - b) <= tolerance;
}

IdmReport check_idm(const Graph& g, const Valuation& v, std::size_t max_nodes) {
  const std::size_t n = g.node_count();
  if (n > max_nodes) {
    throw Error(ErrorCode::kTooLarge, "IDM check limited to " + std::to_string(max_nodes) +
                                          " nodes, graph has " + std::to_string(n));
  }
  struct Pair {
    NodeId i;
    NodeId j;
    std::vector<NodeId> rest;
  };
  std::vector<Pair> pairs;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const NodeId i = g.nodes()[a];
      const NodeId j = g.nodes()[b];
      if (g.adjacent(i, j)) continue;
      Pair p{i, j, {}};
      for (NodeId x : g.nodes()) {
        if (x != i && x != j) p.rest.push_back(x);
      }
      pairs.push_back(std::move(p));
    }
  }

  IdmReport report;
  const double tol = v.tolerance();
  // Ordered pairs are covered by symmetry of the identity in i and j.
  for (std::size_t k = 0; n >= 2 && k <= n - 2; ++k) {
    for (const Pair& p : pairs) {
      const std::size_t r = p.rest.size();
      std::vector<std::size_t> pick(k);
      for (std::size_t t = 0; t < k; ++t) pick[t] = t;
      while (true) {
        std::vector<NodeId> members;
        members.reserve(k + 2);
        for (std::size_t t : pick) members.push_back(p.rest[t]);
        const NodeSet c = NodeSet::FromSorted(members);
        NodeSet ci = c;
        ci.insert(p.i);
        NodeSet cj = c;
        cj.insert(p.j);
        NodeSet cij = ci;
        cij.insert(p.j);
        const double lhs = v(ci) - v(c);
        const double rhs = v(cij) - v(cj);
        ++report.checks;
        if (!values_equal(lhs, rhs, tol)) {
          report.violation = IdmViolation{p.i, p.j, c, lhs, rhs};
          return report;
        }
        // next k-combination of [0, r)
        std::size_t t = k;
        while (t > 0 && pick[t - 1] == r - k + t - 1) --t;
        if (t == 0) break;
        ++pick[t - 1];
        for (std::size_t u = t; u < k; ++u) pick[u] = pick[u - 1] + 1;
      }
    }
  }
  return report;
}

bool check_separator_additivity(const Graph& g, const Valuation& v, const NodeSet& a,
                                const NodeSet& b) {
  require_subset(g, a);
  require_subset(g, b);
  const NodeSet a_only = set_difference(a, b);
  const NodeSet b_only = set_difference(b, a);
  for (NodeId x : a_only) {
    for (const Incidence& inc : g.incident(x)) {
      if (b_only.contains(inc.neighbor)) {
        throw Error(ErrorCode::kSeparationViolated,
                    "edge (" + std::to_string(x) + ", " + std::to_string(inc.neighbor) +
                        ") joins A\\B to B\\A");
      }
    }
  }
  const double lhs = v(a) - v(set_intersection(a, b));
  const double rhs = v(set_union(a, b)) - v(b);
  return values_equal(lhs, rhs, v.tolerance());
}

}  // namespace gcsg
