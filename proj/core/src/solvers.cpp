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

#include "gcsg/solvers.hpp"

#include <chrono>
#include <cmath>
#include <unordered_map>
#include <utility>

#include "gcsg/error.hpp"

namespace gcsg {
namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

// Node set for a bitmask over positions of `ground`.
NodeSet subset_of(const NodeSet& ground, std::uint64_t mask) {
  std::vector<NodeId> ids;
  for (std::size_t t = 0; t < ground.size(); ++t) {
    if (mask >> t & 1) ids.push_back(ground[t]);
  }
  return NodeSet::FromSorted(std::move(ids));
}

// Restriction of a restricted-growth string to the given positions,
// relabelled by first appearance.
PartitionCode restrict_code(const std::vector<std::uint32_t>& digits,
                            const std::vector<std::size_t>& positions) {
  PartitionCode out;
  out.digits.reserve(positions.size());
  std::vector<std::uint32_t> relabel(digits.size() + 1, UINT32_MAX);
  std::uint32_t next = 0;
  for (std::size_t p : positions) {
    std::uint32_t& label = relabel[digits[p]];
    if (label == UINT32_MAX) label = next++;
    out.digits.push_back(label);
  }
  return out;
}

// Better value, or an equal value with a smaller code.
bool improves(double value, const PartitionCode& code, double best, const PartitionCode& best_code,
              double tolerance) {
  if (values_equal(value, best, tolerance)) return code < best_code;
  return value > best;
}

double binomial(std::size_t n, std::size_t k) {
  double r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
  return r;
}

class RollbackUnionFind {
 public:
  explicit RollbackUnionFind(std::size_t n) : parent_(n), size_(n, 1) {
    for (std::size_t i = 0; i < n; ++i) parent_[i] = i;
  }
  std::size_t find(std::size_t x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }
  // Joins the roots; returns the absorbed root.
  std::size_t unite(std::size_t ra, std::size_t rb) {
    if (size_[ra] < size_[rb]) std::swap(ra, rb);
    parent_[rb] = ra;
    size_[ra] += size_[rb];
    return rb;
  }
  void undo(std::size_t absorbed) {
    const std::size_t root = parent_[absorbed];
    size_[root] -= size_[absorbed];
    parent_[absorbed] = absorbed;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

class ForestSearch {
 public:
  ForestSearch(const Graph& g, const Valuation& v) : g_(g), v_(v), sets_(g.node_count()) {
    for (const Edge& e : g.edges()) ends_.emplace_back(g.index_of(e.u), g.index_of(e.v));
    best_value_ = -INFINITY;
  }

  void run() { branch(0); }

  std::uint64_t forests() const { return forests_; }
  const PartitionCode& best_code() const { return best_code_; }
  double best_value() const { return best_value_; }

 private:
  void branch(std::size_t k) {
    if (k == ends_.size()) {
      score_leaf();
      return;
    }
    const std::size_t ra = sets_.find(ends_[k].first);
    const std::size_t rb = sets_.find(ends_[k].second);
    if (ra != rb) {
      const std::size_t absorbed = sets_.unite(ra, rb);
      branch(k + 1);
      sets_.undo(absorbed);
    }
    branch(k + 1);
  }

  void score_leaf() {
    ++forests_;
    const std::size_t n = g_.node_count();
    PartitionCode code;
    code.digits.resize(n);
    std::vector<std::uint32_t> label(n, UINT32_MAX);
    std::vector<std::uint64_t> masks;
    std::uint32_t next = 0;
    for (std::size_t t = 0; t < n; ++t) {
      const std::size_t root = sets_.find(t);
      if (label[root] == UINT32_MAX) {
        label[root] = next++;
        masks.push_back(0);
      }
      code.digits[t] = label[root];
      masks[label[root]] |= std::uint64_t{1} << t;
    }
    double total = 0;
    for (std::uint64_t mask : masks) total += block_value(mask);
    if (forests_ == 1 || improves(total, code, best_value_, best_code_, v_.tolerance())) {
      best_value_ = total;
      best_code_ = std::move(code);
    }
  }

  double block_value(std::uint64_t mask) {
    auto it = cache_.find(mask);
    if (it != cache_.end()) return it->second;
    const double value = v_(subset_of(g_.nodes(), mask));
    cache_.emplace(mask, value);
    return value;
  }

  const Graph& g_;
  const Valuation& v_;
  RollbackUnionFind sets_;
  std::vector<std::pair<std::size_t, std::size_t>> ends_;
  std::unordered_map<std::uint64_t, double> cache_;
  std::uint64_t forests_ = 0;
  double best_value_;
  PartitionCode best_code_;
};

}  // namespace

std::string_view to_string(Method method) {
  switch (method) {
    case Method::kExhaustive: return "exhaustive";
    case Method::kTreeDP: return "treedp";
    case Method::kOracle: return "oracle";
  }
  return "unknown";
}

std::optional<Method> parse_method(std::string_view name) {
  for (Method m : {Method::kExhaustive, Method::kTreeDP, Method::kOracle}) {
    if (to_string(m) == name) return m;
  }
  return std::nullopt;
}

SolveResult solve_exhaustive(const Graph& g, const Valuation& v, std::size_t max_nodes) {
  const auto start = Clock::now();
  const std::size_t n = g.node_count();
  if (n > max_nodes || n > 64) {
    throw Error(ErrorCode::kTooLarge, "exhaustive search limited to " +
                                          std::to_string(max_nodes) + " nodes, graph has " +
                                          std::to_string(n));
  }
  if (connected_components(g).size() > 1) {
    throw Error(ErrorCode::kDisconnected, "exhaustive search needs a connected graph");
  }
  SolveResult result;
  result.stats.algorithm = "exhaustive";
  if (n == 0) {
    result.stats.candidates = 1;
    return result;
  }
  ForestSearch search(g, v);
  search.run();
  // Acyclic subsets number at most sum_{k<n} C(e, k) <= C(e + n, n).
  if (static_cast<double>(search.forests()) > binomial(g.edge_count() + n, n)) {
    throw Error(ErrorCode::kInternal, "forest count exceeds the C(e+n, n) bound");
  }
  result.structure = decode(search.best_code(), g.nodes());
  result.value = search.best_value();
  result.stats.candidates = search.forests();
  result.stats.elapsed_ms = elapsed_ms(start);
  return result;
}

double DPTable::root_value() const {
  if (bags.empty() || bags.front().empty()) {
    throw Error(ErrorCode::kMissingWitness, "root table is empty");
  }
  return bags.front().begin()->second.value;
}

CoalitionStructure DPTable::witness(const DPScaffold& scaffold, std::size_t position,
                                    const PartitionCode& key) const {
  if (position >= bags.size()) {
    throw Error(ErrorCode::kMissingWitness, "no table for bag position " + std::to_string(position));
  }
  auto it = bags[position].find(key);
  if (it == bags[position].end()) {
    throw Error(ErrorCode::kMissingWitness,
                "bag position " + std::to_string(position) + " has no entry for the requested key");
  }
  return decode(it->second.witness, scaffold.bags[position]);
}

DPTable dp_fill(const Valuation& v, const DPScaffold& scaffold) {
  const std::size_t m = scaffold.size();
  DPTable table;
  table.bags.resize(m);
  const double tol = v.tolerance();

  for (std::size_t k = m; k-- > 0;) {
    const NodeSet& bag = scaffold.bags[k];
    const std::size_t s = bag.size();
    if (s > kMaxEnumerationSize) {
      throw Error(ErrorCode::kTooLarge, "bag of " + std::to_string(s) + " nodes exceeds the limit of " +
                                            std::to_string(kMaxEnumerationSize));
    }
    std::uint64_t introduced = 0;
    std::vector<std::size_t> interface_positions;
    for (std::size_t t = 0; t < s; ++t) {
      if (scaffold.introduced[k].contains(bag[t])) {
        introduced |= std::uint64_t{1} << t;
      } else {
        interface_positions.push_back(t);
      }
    }
    // Marginal contribution of every block shape: v(B) - v(B minus the
    // nodes this bag introduces).
    std::vector<double> marginal(std::size_t{1} << s, 0.0);
    std::vector<double> value_of(std::size_t{1} << s, 0.0);
    for (std::uint64_t mask = 1; mask < marginal.size(); ++mask) {
      value_of[mask] = v(subset_of(bag, mask));
    }
    for (std::uint64_t mask = 1; mask < marginal.size(); ++mask) {
      marginal[mask] = value_of[mask] - value_of[mask & ~introduced];
    }

    struct ChildView {
      const std::map<PartitionCode, DPEntry>* entries;
      std::vector<std::size_t> positions;
      std::size_t position;
    };
    std::vector<ChildView> children;
    for (std::size_t c : scaffold.children[k]) {
      ChildView view{&table.bags[c], {}, c};
      for (NodeId z : scaffold.interface[c]) view.positions.push_back(bag.position(z));
      children.push_back(std::move(view));
    }

    auto& entries = table.bags[k];
    std::vector<std::uint64_t> masks;
    for (PartitionEnumerator e(bag); !e.done(); e.next()) {
      ++table.partitions_visited;
      const auto& digits = e.code().digits;
      masks.assign(e.block_count(), 0);
      for (std::size_t t = 0; t < s; ++t) masks[digits[t]] |= std::uint64_t{1} << t;
      double score = 0;
      for (std::uint64_t mask : masks) score += marginal[mask];
      for (const ChildView& child : children) {
        auto it = child.entries->find(restrict_code(digits, child.positions));
        if (it == child.entries->end()) {
          throw Error(ErrorCode::kMissingChildEntry,
                      "child bag position " + std::to_string(child.position) +
                          " lacks an interface partition");
        }
        score += it->second.value;
      }
      PartitionCode key = restrict_code(digits, interface_positions);
      auto it = entries.find(key);
      if (it == entries.end()) {
        entries.emplace(std::move(key), DPEntry{score, e.code()});
      } else if (improves(score, e.code(), it->second.value, it->second.witness, tol)) {
        it->second = DPEntry{score, e.code()};
      }
    }
  }
  return table;
}

CoalitionStructure dp_reconstruct(const DPTable& tables, const DPScaffold& scaffold,
                                  const Valuation& v) {
  const std::size_t m = scaffold.size();
  if (tables.bags.size() != m) {
    throw Error(ErrorCode::kMissingWitness, "table count does not match the scaffold");
  }
  // Running structure over the bags placed so far, as node -> block id.
  // Gluing a witness onto it is the union of two structures agreeing on the
  // interface: interface nodes keep their block, introduced nodes join the
  // block of any interface node sharing their witness block, or open a new
  // block.
  std::unordered_map<NodeId, std::size_t> block_of;
  std::size_t blocks = 0;
  for (std::size_t k = 0; k < m; ++k) {
    const NodeSet& bag = scaffold.bags[k];
    std::vector<std::size_t> interface_positions;
    std::vector<std::uint32_t> current(bag.size(), 0);
    for (std::size_t t = 0; t < bag.size(); ++t) {
      auto it = block_of.find(bag[t]);
      if (it != block_of.end()) {
        interface_positions.push_back(t);
        current[t] = static_cast<std::uint32_t>(it->second);
      }
    }
    // Relabel running block ids over the interface to get the lookup key.
    PartitionCode key;
    {
      std::unordered_map<std::size_t, std::uint32_t> relabel;
      for (std::size_t p : interface_positions) {
        auto [it, fresh] = relabel.emplace(current[p], static_cast<std::uint32_t>(relabel.size()));
        key.digits.push_back(it->second);
      }
    }
    auto found = tables.bags[k].find(key);
    if (found == tables.bags[k].end()) {
      throw Error(ErrorCode::kMissingWitness,
                  "bag position " + std::to_string(k) + " has no witness for the interface");
    }
    const auto& witness = found->second.witness.digits;
    if (restrict_code(witness, interface_positions) != key) {
      throw Error(ErrorCode::kInternal, "witness disagrees with the structure on the interface");
    }
    std::vector<std::size_t> target(bag.size() + 1, SIZE_MAX);
    for (std::size_t p : interface_positions) target[witness[p]] = current[p];
    for (std::size_t t = 0; t < bag.size(); ++t) {
      if (block_of.contains(bag[t])) continue;
      std::size_t& b = target[witness[t]];
      if (b == SIZE_MAX) b = blocks++;
      block_of.emplace(bag[t], b);
    }
  }
  std::vector<std::vector<NodeId>> parts(blocks);
  for (const auto& [node, b] : block_of) parts[b].push_back(node);
  std::vector<NodeSet> out;
  out.reserve(blocks);
  for (auto& part : parts) out.emplace_back(std::move(part));
  CoalitionStructure result = CoalitionStructure::FromBlocks(std::move(out));

  double total = 0;
  for (const NodeSet& b : result.blocks()) total += v(b);
  if (m > 0 && !values_equal(total, tables.root_value(), std::max(v.tolerance(), 1e-7))) {
    throw Error(ErrorCode::kInternal,
                "reconstructed structure scores " + std::to_string(total) +
                    " but the root table holds " + std::to_string(tables.root_value()));
  }
  return result;
}

SolveResult solve_treedp(const Graph& g, const Valuation& v, const TreeDecomposition& td,
                         const TreeDPOptions& options) {
  const auto start = Clock::now();
  SolveResult result;
  result.stats.algorithm = "treedp";
  if (g.node_count() == 0) return result;
  const ValidationReport report = validate(td, g);
  if (!report.ok()) throw Error(ErrorCode::kInvalidDecomposition, report.summary());

  const DPScaffold scaffold = build_scaffold(td, options.root.value_or(default_root(td)));
  const DPTable tables = dp_fill(v, scaffold);
  result.structure = dp_reconstruct(tables, scaffold, v);
  result.value = tables.root_value();
  if (options.split_connected) {
    result.structure = split_connected(g, result.structure);
    result.value = structure_value(g, v, result.structure);
  }
  result.stats.candidates = tables.partitions_visited;
  result.stats.bags = td.bags.size();
  result.stats.width = width(td);
  result.stats.elapsed_ms = elapsed_ms(start);
  return result;
}

SolveResult solve_oracle(const Graph& g, const Valuation& v) {
  const auto start = Clock::now();
  const std::size_t n = g.node_count();
  if (n > kOracleMaxNodes) {
    throw Error(ErrorCode::kTooLarge, "oracle limited to " + std::to_string(kOracleMaxNodes) +
                                          " nodes, graph has " + std::to_string(n));
  }
  std::vector<double> value_of(std::size_t{1} << n, 0.0);
  for (std::uint64_t mask = 1; mask < value_of.size(); ++mask) {
    value_of[mask] = v(subset_of(g.nodes(), mask));
  }
  SolveResult result;
  result.stats.algorithm = "oracle";
  double best = -INFINITY;
  PartitionCode best_code;
  std::vector<std::uint64_t> masks;
  for (PartitionEnumerator e(g.nodes()); !e.done(); e.next()) {
    ++result.stats.candidates;
    masks.assign(e.block_count(), 0);
    for (std::size_t t = 0; t < n; ++t) masks[e.code().digits[t]] |= std::uint64_t{1} << t;
    double total = 0;
    for (std::uint64_t mask : masks) total += value_of[mask];
    if (result.stats.candidates == 1 || improves(total, e.code(), best, best_code, v.tolerance())) {
      best = total;
      best_code = e.code();
    }
  }
  result.structure = decode(best_code, g.nodes());
  result.value = n == 0 ? 0.0 : best;
  result.stats.elapsed_ms = elapsed_ms(start);
  return result;
}

TreeDecomposition make_decomposition(const Graph& g, const SolveOptions& options) {
  if (options.decomposition) return *options.decomposition;
  switch (options.source) {
    case DecompositionSource::kMinFill:
      return min_fill_decompose(g);
    case DecompositionSource::kSeparator: {
      if (options.separator == SeparatorKind::kGrid) {
        if (!options.grid) {
          throw Error(ErrorCode::kValidationError,
                      "the grid separator needs grid metadata (rows, cols)");
        }
        return separator_decompose(g, grid_separator_finder(options.grid->rows, options.grid->cols),
                                   SeparatorBound{1.0, 0.5, 0.5});
      }
      return separator_decompose(g, greedy_separator, SeparatorBound{1.0, 0.5, 2.0 / 3.0});
    }
    case DecompositionSource::kNone:
      break;
  }
  throw Error(ErrorCode::kMethodNeedsDecomposition,
              "treedp needs a decomposition file or a construction heuristic");
}

SolveResult solve(const Graph& g, const Valuation& v, const SolveOptions& options) {
  const auto start = Clock::now();
  if (options.method == Method::kTreeDP && !options.decomposition &&
      options.source == DecompositionSource::kNone) {
    throw Error(ErrorCode::kMethodNeedsDecomposition,
                "treedp needs a decomposition file or a construction heuristic");
  }
  if (!v.idm()) {
    // Without independence of disconnected members neither the componentwise
    // split nor the graph-based searches are sound.
    SolveResult result = solve_oracle(g, v);
    result.stats.components = connected_components(g).size();
    result.stats.elapsed_ms = elapsed_ms(start);
    return result;
  }
  if (options.decomposition) {
    const ValidationReport report = validate(*options.decomposition, g);
    if (!report.ok()) throw Error(ErrorCode::kInvalidDecomposition, report.summary());
  }

  const auto components = connected_components(g);
  SolveResult total;
  total.stats.algorithm = std::string(to_string(options.method));
  total.stats.components = components.size();
  std::vector<NodeSet> blocks;
  for (const NodeSet& component : components) {
    const Graph sub = components.size() == 1 ? g : induced_subgraph(g, component);
    SolveResult part;
    switch (options.method) {
      case Method::kExhaustive:
        part = solve_exhaustive(sub, v, options.exhaustive_max_nodes);
        break;
      case Method::kOracle:
        part = solve_oracle(sub, v);
        break;
      case Method::kTreeDP: {
        const TreeDecomposition td =
            options.decomposition ? restrict_decomposition(*options.decomposition, component)
                                  : make_decomposition(sub, options);
        part = solve_treedp(sub, v, td);
        total.stats.bags += part.stats.bags;
        total.stats.width = std::max(total.stats.width.value_or(0), part.stats.width.value_or(0));
        break;
      }
    }
    if (options.split_connected) part.structure = split_connected(sub, part.structure);
    total.value += part.value;
    total.stats.candidates += part.stats.candidates;
    for (const NodeSet& b : part.structure.blocks()) blocks.push_back(b);
  }
  total.structure = CoalitionStructure::FromBlocks(std::move(blocks));
  total.stats.elapsed_ms = elapsed_ms(start);
  return total;
}

}  // namespace gcsg
