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

#ifndef GCSG_PARTITION_HPP_
#define GCSG_PARTITION_HPP_

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gcsg/graph.hpp"
#include "gcsg/node_set.hpp"
#include "gcsg/valuation.hpp"

namespace gcsg {

// A partition of `ground` into disjoint non-empty blocks, kept canonical:
// blocks sorted internally and ordered by smallest member.
class CoalitionStructure {
 public:
  // The empty structure over the empty ground set.
  CoalitionStructure() = default;

  // Throws kInvalidStructure on empty or overlapping blocks.
  static CoalitionStructure FromBlocks(std::vector<NodeSet> blocks);

  // Every node of `ground` in its own block.
  static CoalitionStructure Singletons(const NodeSet& ground);

  const NodeSet& ground() const noexcept { return ground_; }
  std::span<const NodeSet> blocks() const noexcept { return blocks_; }
  std::size_t size() const noexcept { return blocks_.size(); }
  bool empty() const noexcept { return blocks_.empty(); }

  // Index of the block holding `id`, or size() if `id` is not in ground.
  std::size_t block_of(NodeId id) const;

  std::string to_string() const;

  friend bool operator==(const CoalitionStructure&, const CoalitionStructure&) = default;

 private:
  NodeSet ground_;
  std::vector<NodeSet> blocks_;
};

// Restricted-growth string: digit t is the block number of the t-th smallest
// ground node, blocks numbered in order of first appearance.
struct PartitionCode {
  std::vector<std::uint32_t> digits;

  std::size_t size() const noexcept { return digits.size(); }
  friend bool operator==(const PartitionCode&, const PartitionCode&) = default;
  friend auto operator<=>(const PartitionCode&, const PartitionCode&) = default;
};

bool is_valid_code(const PartitionCode& code);

PartitionCode encode(const CoalitionStructure& p);

// Throws kMalformedCode if `code` is not a restricted-growth string of
// length |ground|.
CoalitionStructure decode(const PartitionCode& code, const NodeSet& ground);

// {C & s : C in p} without empty parts. Throws kNotSubset unless s is a
// subset of p.ground().
CoalitionStructure restrict_to(const CoalitionStructure& p, const NodeSet& s);

// Merges structures that agree on the overlap of their grounds: blocks of p
// outside q's ground, blocks of q outside p's ground, and unions of
// intersecting blocks. Throws kAgreementViolated, naming two nodes the
// operands classify differently, when the restrictions to the overlap differ.
CoalitionStructure merge_union(const CoalitionStructure& p, const CoalitionStructure& q);

inline constexpr std::size_t kMaxEnumerationSize = 20;

// Streams every partition of a ground set once, in lexicographic
// restricted-growth order (the discrete partition comes last). Holds O(|s|)
// state; never materializes the Bell(|s|) list.
class PartitionEnumerator {
 public:
  // Throws kTooLarge when |ground| > kMaxEnumerationSize.
  explicit PartitionEnumerator(NodeSet ground);

  bool done() const noexcept { return done_; }
  void next();

  const PartitionCode& code() const noexcept { return code_; }
  std::size_t block_count() const noexcept;
  CoalitionStructure structure() const;
  const NodeSet& ground() const noexcept { return ground_; }

 private:
  NodeSet ground_;
  PartitionCode code_;
  std::vector<std::uint32_t> prefix_max_;  // max of digits[0..t]
  bool done_ = false;
};

// Sum of v over the blocks of p.
// Throws kUnknownNode unless p.ground() is a subset of g's nodes.
double structure_value(const Graph& g, const Valuation& v, const CoalitionStructure& p);

// Replaces each block with the connected components of the subgraph it
// induces.
CoalitionStructure split_connected(const Graph& g, const CoalitionStructure& p);

}  // namespace gcsg

#endif  // GCSG_PARTITION_HPP_
