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

#include "gcsg/partition.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <unordered_map>

#include "gcsg/error.hpp"

namespace gcsg {
namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

void sort_blocks(std::vector<NodeSet>& blocks) {
  std::sort(blocks.begin(), blocks.end(),
            [](const NodeSet& a, const NodeSet& b) { return a.front() < b.front(); });
}

}  // namespace

CoalitionStructure CoalitionStructure::FromBlocks(std::vector<NodeSet> blocks) {
  CoalitionStructure p;
  std::vector<NodeId> all;
  for (const NodeSet& b : blocks) {
    if (b.empty()) throw Error(ErrorCode::kInvalidStructure, "coalition structure has an empty block");
    all.insert(all.end(), b.begin(), b.end());
  }
  std::sort(all.begin(), all.end());
  for (std::size_t i = 1; i < all.size(); ++i) {
    if (all[i] == all[i - 1]) {
      throw Error(ErrorCode::kInvalidStructure,
                  "node " + std::to_string(all[i]) + " appears in two blocks");
    }
  }
  sort_blocks(blocks);
  p.ground_ = NodeSet::FromSorted(std::move(all));
  p.blocks_ = std::move(blocks);
  return p;
}

CoalitionStructure CoalitionStructure::Singletons(const NodeSet& ground) {
  CoalitionStructure p;
  p.ground_ = ground;
  p.blocks_.reserve(ground.size());
  for (NodeId x : ground) p.blocks_.push_back(NodeSet::FromSorted({x}));
  return p;
}

std::size_t CoalitionStructure::block_of(NodeId id) const {
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (blocks_[b].contains(id)) return b;
  }
  return blocks_.size();
}

std::string CoalitionStructure::to_string() const {
  std::string out = "{";
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (b > 0) out += ",";
    out += blocks_[b].to_string();
  }
  return out + "}";
}

bool is_valid_code(const PartitionCode& code) {
  std::uint32_t next = 0;
  for (std::uint32_t d : code.digits) {
    if (d > next) return false;
    if (d == next) ++next;
  }
  return true;
}

PartitionCode encode(const CoalitionStructure& p) {
  const NodeSet& ground = p.ground();
  std::vector<std::uint32_t> label_of_block(p.size(), 0);
  std::vector<std::size_t> block_at(ground.size(), 0);
  for (std::size_t b = 0; b < p.size(); ++b) {
    for (NodeId x : p.blocks()[b]) block_at[ground.position(x)] = b;
  }
  // Blocks are ordered by smallest member, so first appearance order equals
  // block order; relabel anyway to keep this independent of that invariant.
  PartitionCode code;
  code.digits.resize(ground.size());
  std::vector<bool> seen(p.size(), false);
  std::uint32_t next = 0;
  for (std::size_t t = 0; t < ground.size(); ++t) {
    const std::size_t b = block_at[t];
    if (!seen[b]) {
      seen[b] = true;
      label_of_block[b] = next++;
    }
    code.digits[t] = label_of_block[b];
  }
  return code;
}

CoalitionStructure decode(const PartitionCode& code, const NodeSet& ground) {
  if (code.size() != ground.size()) {
    throw Error(ErrorCode::kMalformedCode,
                "partition code has length " + std::to_string(code.size()) +
                    " but the ground set has " + std::to_string(ground.size()) + " nodes");
  }
  if (!is_valid_code(code)) {
    throw Error(ErrorCode::kMalformedCode, "partition code is not a restricted-growth string");
  }
  std::vector<std::vector<NodeId>> parts;
  for (std::size_t t = 0; t < code.size(); ++t) {
    const std::uint32_t d = code.digits[t];
    if (d == parts.size()) parts.emplace_back();
    parts[d].push_back(ground[t]);
  }
  std::vector<NodeSet> blocks;
  blocks.reserve(parts.size());
  for (auto& part : parts) blocks.push_back(NodeSet::FromSorted(std::move(part)));
  return CoalitionStructure::FromBlocks(std::move(blocks));
}

CoalitionStructure restrict_to(const CoalitionStructure& p, const NodeSet& s) {
  if (!s.is_subset_of(p.ground())) {
    throw Error(ErrorCode::kNotSubset,
                s.to_string() + " is not a subset of the structure's ground " +
                    p.ground().to_string());
  }
  std::vector<NodeSet> blocks;
  for (const NodeSet& b : p.blocks()) {
    NodeSet part = set_intersection(b, s);
    if (!part.empty()) blocks.push_back(std::move(part));
  }
  return CoalitionStructure::FromBlocks(std::move(blocks));
}

CoalitionStructure merge_union(const CoalitionStructure& p, const CoalitionStructure& q) {
  const NodeSet overlap = set_intersection(p.ground(), q.ground());
  const CoalitionStructure p_on = restrict_to(p, overlap);
  const CoalitionStructure q_on = restrict_to(q, overlap);
  if (p_on != q_on) {
    for (std::size_t a = 0; a < overlap.size(); ++a) {
      for (std::size_t b = a + 1; b < overlap.size(); ++b) {
        const bool same_p = p_on.block_of(overlap[a]) == p_on.block_of(overlap[b]);
        const bool same_q = q_on.block_of(overlap[a]) == q_on.block_of(overlap[b]);
        if (same_p != same_q) {
          throw Error(ErrorCode::kAgreementViolated,
                      "nodes " + std::to_string(overlap[a]) + " and " +
                          std::to_string(overlap[b]) + " are " +
                          (same_p ? "together" : "apart") + " in the first structure but " +
                          (same_q ? "together" : "apart") + " in the second");
        }
      }
    }
    throw Error(ErrorCode::kInternal, "structures differ on the overlap without a witness pair");
  }

  const NodeSet all = set_union(p.ground(), q.ground());
  const NodeSet p_only = set_difference(p.ground(), q.ground());
  const NodeSet q_only = set_difference(q.ground(), p.ground());

  // The defining family: untouched blocks plus unions of intersecting pairs.
  std::set<NodeSet> family;
  for (const NodeSet& a : p.blocks()) {
    if (a.is_subset_of(p_only)) family.insert(a);
  }
  for (const NodeSet& b : q.blocks()) {
    if (b.is_subset_of(q_only)) family.insert(b);
  }
  for (const NodeSet& a : p.blocks()) {
    for (const NodeSet& b : q.blocks()) {
      if (a.intersects(b)) family.insert(set_union(a, b));
    }
  }

  // Transitive closure of the same family; equal to it when the operands
  // agree on the overlap.
  DisjointSets sets(all.size());
  for (const CoalitionStructure* s : {&p, &q}) {
    for (const NodeSet& block : s->blocks()) {
      const std::size_t first = all.position(block.front());
      for (NodeId x : block) sets.unite(first, all.position(x));
    }
  }
  std::unordered_map<std::size_t, std::vector<NodeId>> groups;
  for (std::size_t t = 0; t < all.size(); ++t) groups[sets.find(t)].push_back(all[t]);
  std::vector<NodeSet> blocks;
  blocks.reserve(groups.size());
  for (auto& [root, members] : groups) blocks.push_back(NodeSet::FromSorted(std::move(members)));

  const std::set<NodeSet> closed(blocks.begin(), blocks.end());
  if (closed != family) {
    throw Error(ErrorCode::kInternal, "union of agreeing structures produced overlapping blocks");
  }
  return CoalitionStructure::FromBlocks(std::move(blocks));
}

PartitionEnumerator::PartitionEnumerator(NodeSet ground) : ground_(std::move(ground)) {
  if (ground_.size() > kMaxEnumerationSize) {
    throw Error(ErrorCode::kTooLarge,
                "cannot enumerate partitions of " + std::to_string(ground_.size()) +
                    " nodes (limit " + std::to_string(kMaxEnumerationSize) + ")");
  }
  code_.digits.assign(ground_.size(), 0);
  prefix_max_.assign(ground_.size(), 0);
}

void PartitionEnumerator::next() {
  if (done_) return;
  const std::size_t n = code_.size();
  // Rightmost position that can still grow: digit t may reach
  // prefix_max[t-1] + 1.
  std::size_t t = n;
  while (t > 1) {
    --t;
    if (code_.digits[t] <= prefix_max_[t - 1]) {
      ++code_.digits[t];
      prefix_max_[t] = std::max(prefix_max_[t - 1], code_.digits[t]);
      for (std::size_t u = t + 1; u < n; ++u) {
        code_.digits[u] = 0;
        prefix_max_[u] = prefix_max_[t];
      }
      return;
    }
  }
  done_ = true;
}

std::size_t PartitionEnumerator::block_count() const noexcept {
  return prefix_max_.empty() ? 0 : prefix_max_.back() + 1;
}

CoalitionStructure PartitionEnumerator::structure() const { return decode(code_, ground_); }

double structure_value(const Graph& g, const Valuation& v, const CoalitionStructure& p) {
  require_subset(g, p.ground());
  double total = 0;
  for (const NodeSet& b : p.blocks()) total += v(b);
  return total;
}

CoalitionStructure split_connected(const Graph& g, const CoalitionStructure& p) {
  std::vector<NodeSet> blocks;
  for (const NodeSet& b : p.blocks()) {
    for (NodeSet& part : connected_components(induced_subgraph(g, b))) {
      blocks.push_back(std::move(part));
    }
  }
  return CoalitionStructure::FromBlocks(std::move(blocks));
}

}  // namespace gcsg
