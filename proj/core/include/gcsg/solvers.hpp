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

#ifndef GCSG_SOLVERS_HPP_
#define GCSG_SOLVERS_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gcsg/graph.hpp"
#include "gcsg/partition.hpp"
#include "gcsg/separator.hpp"
#include "gcsg/tree_decomposition.hpp"
#include "gcsg/valuation.hpp"

namespace gcsg {

enum class Method { kExhaustive, kTreeDP, kOracle };

std::string_view to_string(Method method);
std::optional<Method> parse_method(std::string_view name);

struct SolveStats {
  std::string algorithm;
  std::uint64_t candidates = 0;  // forests, DP partitions, or oracle partitions visited
  std::size_t bags = 0;
  std::optional<std::size_t> width;
  std::size_t components = 1;
  double elapsed_ms = 0;
};

struct SolveResult {
  CoalitionStructure structure;
  double value = 0;
  SolveStats stats;
};

inline constexpr std::size_t kExhaustiveMaxNodes = 16;
inline constexpr std::size_t kOracleMaxNodes = 12;

// Enumerates the acyclic edge subsets of a connected graph and scores the
// components of each as a coalition structure. Ties go to the structure with
// the smallest partition code. Throws kDisconnected or kTooLarge.
SolveResult solve_exhaustive(const Graph& g, const Valuation& v,
                             std::size_t max_nodes = kExhaustiveMaxNodes);

// Best score for one interface partition and the bag partition achieving it
// (as a code over the bag's nodes in ascending order).
struct DPEntry {
  double value = 0;
  PartitionCode witness;
};

// Per-bag tables indexed by BFS position, keyed by the code of a partition
// of that bag's interface.
struct DPTable {
  std::vector<std::map<PartitionCode, DPEntry>> bags;
  std::uint64_t partitions_visited = 0;

  double root_value() const;
  // Throws kMissingWitness.
  CoalitionStructure witness(const DPScaffold& scaffold, std::size_t position,
                             const PartitionCode& key) const;
};

// Fills the tables from the leaves up. Each partition E of a bag scores
// sum over blocks B of [v(B) - v(B minus introduced)] plus the children's
// best values for E restricted to their interfaces; the maximum per
// interface restriction is kept, ties to the smaller code.
// Throws kMissingChildEntry if a child table lacks a key, kTooLarge for
// bags beyond the enumeration limit.
DPTable dp_fill(const Valuation& v, const DPScaffold& scaffold);

// Walks the bags in BFS order, gluing each stored witness onto the structure
// built so far. Throws kMissingWitness, or kInternal if the rebuilt structure
// does not score the root value.
CoalitionStructure dp_reconstruct(const DPTable& tables, const DPScaffold& scaffold,
                                  const Valuation& v);

struct TreeDPOptions {
  std::optional<BagIndex> root;  // default_root() when unset
  bool split_connected = false;
};

// Throws kInvalidDecomposition when td is not valid for g.
SolveResult solve_treedp(const Graph& g, const Valuation& v, const TreeDecomposition& td,
                         const TreeDPOptions& options = {});

// Enumerates every partition of the nodes. Throws kTooLarge beyond
// kOracleMaxNodes.
SolveResult solve_oracle(const Graph& g, const Valuation& v);

enum class DecompositionSource { kNone, kMinFill, kSeparator };
enum class SeparatorKind { kGreedy, kGrid };

struct GridShape {
  std::size_t rows = 0;
  std::size_t cols = 0;
};

struct SolveOptions {
  Method method = Method::kTreeDP;
  std::optional<TreeDecomposition> decomposition;  // whole-graph decomposition
  DecompositionSource source = DecompositionSource::kMinFill;
  SeparatorKind separator = SeparatorKind::kGreedy;
  std::optional<GridShape> grid;  // required for SeparatorKind::kGrid
  bool split_connected = false;
  std::size_t exhaustive_max_nodes = kExhaustiveMaxNodes;
};

// Decomposition used for g under `options` (given, min-fill, or separator).
TreeDecomposition make_decomposition(const Graph& g, const SolveOptions& options);

// Solves each connected component with the chosen method and unions the
// results. Valuations not known to be independent of disconnected members
// skip the componentwise split and are solved by the oracle on the whole
// graph. Throws kMethodNeedsDecomposition for treedp without a source.
SolveResult solve(const Graph& g, const Valuation& v, const SolveOptions& options = {});

}  // namespace gcsg

#endif  // GCSG_SOLVERS_HPP_
