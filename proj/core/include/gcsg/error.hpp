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

#ifndef GCSG_ERROR_HPP_
#define GCSG_ERROR_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gcsg {

enum class ErrorCode {
  // graph
  kDuplicateNode,
  kUnknownEndpoint,
  kSelfLoop,
  kDuplicateEdge,
  kUnknownNode,
  // valuation
  kMissingWeights,
  kMissingLabels,
  kEmptyEdgeSet,
  kMissingEntry,
  kInvalidTable,
  kSeparationViolated,
  // partition
  kInvalidStructure,
  kNotSubset,
  kAgreementViolated,
  kMalformedCode,
  // tree decomposition / separators
  kEmptyDecomposition,
  kInvalidDecomposition,
  kNotAGrid,
  kInvalidSeparator,
  // solvers
  kMissingChildEntry,
  kMissingWitness,
  kDisconnected,
  kMethodNeedsDecomposition,
  // shared
  kTooLarge,
  kParseError,
  kValidationError,
  kInternal,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library. `item` optionally carries the
// position of the offending element in the caller's input list (for example
// the index of a bad edge), so file readers can point at the right field.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> item = std::nullopt)
      : std::runtime_error(message), code_(code), item_(item) {}

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> item() const noexcept { return item_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> item_;
};

}  // namespace gcsg

#endif  // GCSG_ERROR_HPP_
