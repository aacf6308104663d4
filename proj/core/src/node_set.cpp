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

#include "gcsg/node_set.hpp"

#include <iterator>

namespace gcsg {

NodeSet::NodeSet(std::vector<NodeId> ids) : members_(std::move(ids)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

NodeSet NodeSet::FromSorted(std::vector<NodeId> sorted_ids) {
  NodeSet s;
  s.members_ = std::move(sorted_ids);
  return s;
}

std::size_t NodeSet::position(NodeId id) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), id);
  if (it == members_.end() || *it != id) return members_.size();
  return static_cast<std::size_t>(it - members_.begin());
}

bool NodeSet::is_subset_of(const NodeSet& other) const {
  return std::includes(other.members_.begin(), other.members_.end(),
                       members_.begin(), members_.end());
}

bool NodeSet::intersects(const NodeSet& other) const {
  auto a = members_.begin();
  auto b = other.members_.begin();
  while (a != members_.end() && b != other.members_.end()) {
    if (*a == *b) return true;
    if (*a < *b) {
      ++a;
    } else {
      ++b;
    }
  }
  return false;
}

void NodeSet::insert(NodeId id) {
  auto it = std::lower_bound(members_.begin(), members_.end(), id);
  if (it == members_.end() || *it != id) members_.insert(it, id);
}

std::string NodeSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(members_[i]);
  }
  out += "}";
  return out;
}

NodeSet set_union(const NodeSet& a, const NodeSet& b) {
  std::vector<NodeId> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return NodeSet::FromSorted(std::move(out));
}

NodeSet set_intersection(const NodeSet& a, const NodeSet& b) {
  std::vector<NodeId> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return NodeSet::FromSorted(std::move(out));
}

NodeSet set_difference(const NodeSet& a, const NodeSet& b) {
  std::vector<NodeId> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return NodeSet::FromSorted(std::move(out));
}

}  // namespace gcsg
