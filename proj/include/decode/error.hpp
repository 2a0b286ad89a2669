// Copyright 2026 The DeCoDe Authors
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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace decode {

enum class ErrorCode {
  kMalformedLine,
  kMissingWeight,
  kNegativeWeight,
  kZeroWeight,
  kSelfLoop,
  kDuplicateEdge,
  kEmptyGraph,
  kInvalidNode,
  kMaskLength,
  kUndefined,  // statistic undefined for this graph (too few nodes, no triples)
  kEmptyLayer,
  kNodeSetMismatch,
  kDegenerateDensity,
  kUnallocatedLabels,
  kInvalidTree,
  kInvalidArgument,
  kIo,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedLine: return "MalformedLine";
    case ErrorCode::kMissingWeight: return "MissingWeight";
    case ErrorCode::kNegativeWeight: return "NegativeWeight";
    case ErrorCode::kZeroWeight: return "ZeroWeight";
    case ErrorCode::kSelfLoop: return "SelfLoop";
    case ErrorCode::kDuplicateEdge: return "DuplicateEdge";
    case ErrorCode::kEmptyGraph: return "EmptyGraph";
    case ErrorCode::kInvalidNode: return "InvalidNode";
    case ErrorCode::kMaskLength: return "MaskLength";
    case ErrorCode::kUndefined: return "Undefined";
    case ErrorCode::kEmptyLayer: return "EmptyLayer";
    case ErrorCode::kNodeSetMismatch: return "NodeSetMismatch";
    case ErrorCode::kDegenerateDensity: return "DegenerateDensity";
    case ErrorCode::kUnallocatedLabels: return "UnallocatedLabels";
    case ErrorCode::kInvalidTree: return "InvalidTree";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kIo: return "Io";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace decode
