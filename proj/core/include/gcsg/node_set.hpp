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

#ifndef GCSG_NODE_SET_HPP_
#define GCSG_NODE_SET_HPP_

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace gcsg {

using NodeId = std::uint64_t;

// A sorted, duplicate-free set of node ids. Used for coalitions, bags and
// separator parts alike.
class NodeSet {
 public:
  using const_iterator = std::vector<NodeId>::const_iterator;

  NodeSet() = default;
  NodeSet(std::initializer_list<NodeId> ids) : NodeSet(std::vector<NodeId>(ids)) {}
  explicit NodeSet(std::vector<NodeId> ids);

  // Caller guarantees `sorted_ids` is strictly increasing.
  static NodeSet FromSorted(std::vector<NodeId> sorted_ids);

  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  const_iterator begin() const noexcept { return members_.begin(); }
  const_iterator end() const noexcept { return members_.end(); }
  NodeId front() const { return members_.front(); }
  NodeId back() const { return members_.back(); }
  NodeId operator[](std::size_t i) const { return members_[i]; }
  std::span<const NodeId> ids() const noexcept { return members_; }

  bool contains(NodeId id) const {
    return std::binary_search(members_.begin(), members_.end(), id);
  }
  // Position of `id` in ascending order, or size() if absent.
  std::size_t position(NodeId id) const;

  bool is_subset_of(const NodeSet& other) const;
  bool intersects(const NodeSet& other) const;

  void insert(NodeId id);

  friend NodeSet set_union(const NodeSet& a, const NodeSet& b);
  friend NodeSet set_intersection(const NodeSet& a, const NodeSet& b);
  friend NodeSet set_difference(const NodeSet& a, const NodeSet& b);

  friend bool operator==(const NodeSet&, const NodeSet&) = default;
  friend auto operator<=>(const NodeSet&, const NodeSet&) = default;

  std::string to_string() const;

 private:
  std::vector<NodeId> members_;
};

NodeSet set_union(const NodeSet& a, const NodeSet& b);
NodeSet set_intersection(const NodeSet& a, const NodeSet& b);
NodeSet set_difference(const NodeSet& a, const NodeSet& b);

}  // namespace gcsg

#endif  // GCSG_NODE_SET_HPP_
