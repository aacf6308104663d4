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

#include "gcsg/error.hpp"

namespace gcsg {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDuplicateNode: return "DuplicateNode";
    case ErrorCode::kUnknownEndpoint: return "UnknownEndpoint";
    case ErrorCode::kSelfLoop: return "SelfLoop";
    case ErrorCode::kDuplicateEdge: return "DuplicateEdge";
    case ErrorCode::kUnknownNode: return "UnknownNode";
    case ErrorCode::kMissingWeights: return "MissingWeights";
    case ErrorCode::kMissingLabels: return "MissingLabels";
    case ErrorCode::kEmptyEdgeSet: return "EmptyEdgeSet";
    case ErrorCode::kMissingEntry: return "MissingEntry";
    case ErrorCode::kInvalidTable: return "InvalidTable";
    case ErrorCode::kSeparationViolated: return "SeparationViolated";
    case ErrorCode::kInvalidStructure: return "InvalidStructure";
    case ErrorCode::kNotSubset: return "NotSubset";
    case ErrorCode::kAgreementViolated: return "AgreementViolated";
    case ErrorCode::kMalformedCode: return "MalformedCode";
    case ErrorCode::kEmptyDecomposition: return "EmptyDecomposition";
    case ErrorCode::kInvalidDecomposition: return "InvalidDecomposition";
    case ErrorCode::kNotAGrid: return "NotAGrid";
    case ErrorCode::kInvalidSeparator: return "InvalidSeparator";
    case ErrorCode::kMissingChildEntry: return "MissingChildEntry";
    case ErrorCode::kMissingWitness: return "MissingWitness";
    case ErrorCode::kDisconnected: return "Disconnected";
    case ErrorCode::kMethodNeedsDecomposition: return "MethodNeedsDecomposition";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kValidationError: return "ValidationError";
    case ErrorCode::kInternal: return "Internal";
  }
  return "Unknown";
}

}  // namespace gcsg
