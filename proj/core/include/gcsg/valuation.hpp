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

#ifndef GCSG_VALUATION_HPP_
#define GCSG_VALUATION_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <string_view>

#include "gcsg/graph.hpp"
#include "gcsg/node_set.hpp"

namespace gcsg {

// Absolute tolerance for comparing values of non-integral valuations.
inline constexpr double kValueTolerance = 1e-9;

enum class ValuationKind { kEdgeSum, kCorrelation, kCoordination, kModularity, kTable };

std::string_view to_string(ValuationKind kind);
std::optional<ValuationKind> parse_valuation_kind(std::string_view name);

// Declarative valuation: a built-in family, or an explicit table over the
// power set of the graph's nodes.
struct ValuationSpec {
  ValuationKind kind = ValuationKind::kEdgeSum;
  std::map<NodeSet, double> table;  // only for kTable

  friend bool operator==(const ValuationSpec&, const ValuationSpec&) = default;
};

// Sum of weights of edges with both endpoints in c. Throws kMissingWeights.
double edge_sum_value(const Graph& g, const NodeSet& c);

// |positive edges inside c| + |negative edges with exactly one end in c|.
// Throws kMissingLabels.
double correlation_value(const Graph& g, const NodeSet& c);

// Sum over i in c of the number of ordered pairs (j, k) of neighbours of i
// with j in c and k outside c.
double coordination_value(const Graph& g, const NodeSet& c);

// |E(c)|/|E| - ((|E(c)| + |cut(c)|) / (2|E|))^2, where cut(c) are the edges
// with exactly one end in c. Throws kEmptyEdgeSet.
double modularity_value(const Graph& g, const NodeSet& c);

// Throws kMissingEntry when c is not in the table.
double table_value(const ValuationSpec& spec, const NodeSet& c);

// A valuation bound to a graph. The graph must outlive the Valuation.
//
// Construction validates `spec` against the graph: edge_sum needs weights,
// correlation needs labels, modularity needs at least one edge, and a table
// must cover exactly the power set of the nodes with table(empty) = 0.
class Valuation {
 public:
  Valuation(const Graph& graph, ValuationSpec spec);

  // Value of coalition c. Throws kUnknownNode if c has a node outside the
  // graph.
  double operator()(const NodeSet& c) const;

  const Graph& graph() const noexcept { return *graph_; }
  const ValuationSpec& spec() const noexcept { return spec_; }
  ValuationKind kind() const noexcept { return spec_.kind; }

  // All values are integers, so comparisons can be exact.
  bool exact() const noexcept { return exact_; }
  double tolerance() const noexcept { return exact_ ? 0.0 : kValueTolerance; }

  // Whether the valuation is known to be independent of disconnected members
  // on this graph. Edge sum and correlation are; coordination and modularity
  // are not in general; tables are checked exhaustively when small enough.
  bool idm() const noexcept { return idm_; }

 private:
  const Graph* graph_;
  ValuationSpec spec_;
  bool exact_ = false;
  bool idm_ = false;
};

bool values_equal(double a, double b, double tolerance);

struct IdmViolation {
  NodeId i = 0;
  NodeId j = 0;
  NodeSet coalition;
  double lhs = 0;  // v(C+i) - v(C)
  double rhs = 0;  // v(C+i+j) - v(C+j)
};

struct IdmReport {
  std::optional<IdmViolation> violation;
  std::size_t checks = 0;
  bool pass() const noexcept { return !violation.has_value(); }
};

inline constexpr std::size_t kDefaultIdmMaxNodes = 12;

// Exhaustive check of independence of disconnected members: for every
// non-adjacent pair (i, j) and every C avoiding both, the marginal value of i
// to C equals its marginal value to C + j. Coalitions are scanned in
// increasing size so the reported violation is a minimal one.
// Throws kTooLarge when g has more than max_nodes nodes.
IdmReport check_idm(const Graph& g, const Valuation& v,
                    std::size_t max_nodes = kDefaultIdmMaxNodes);

// For a, b with no edge between a\b and b\a: checks
// v(a) - v(a & b) == v(a | b) - v(b) within the valuation's tolerance.
// Throws kSeparationViolated when the precondition fails.
bool check_separator_additivity(const Graph& g, const Valuation& v,
                                const NodeSet& a, const NodeSet& b);

}  // namespace gcsg

#endif  // GCSG_VALUATION_HPP_
