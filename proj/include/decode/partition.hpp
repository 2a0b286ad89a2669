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

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "decode/error.hpp"
#include "decode/graph.hpp"

namespace decode {

using ClusterId = std::int64_t;
inline constexpr ClusterId kUnallocated = -1;

/// How a node obtained its cluster label.
enum class Provenance : std::uint8_t { kCore, kAllocated, kSingleton, kUnallocated };

constexpr std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::kCore: return "core";
    case Provenance::kAllocated: return "allocated";
    case Provenance::kSingleton: return "singleton";
    case Provenance::kUnallocated: return "unallocated";
  }
  return "unallocated";
}

/// Node -> cluster map. Cluster ids are dense in [0, num_clusters) and
/// kUnallocated marks nodes outside every cluster.
struct Partition {
  std::vector<ClusterId> labels;
  std::vector<Provenance> provenance;
  std::size_t num_clusters = 0;

  Partition() = default;

  /// All nodes unallocated.
  explicit Partition(std::size_t n)
      : labels(n, kUnallocated), provenance(n, Provenance::kUnallocated) {}

  /// Builds a partition from arbitrary non-negative ids (or kUnallocated),
  /// renumbering them densely in order of first appearance.
  static Partition from_labels(const std::vector<ClusterId>& raw,
                               Provenance allocated_as = Provenance::kCore) {
    Partition p(raw.size());
    std::unordered_map<ClusterId, ClusterId> dense;
    for (std::size_t v = 0; v < raw.size(); ++v) {
      if (raw[v] == kUnallocated) continue;
      if (raw[v] < 0) {
        throw Error(ErrorCode::kInvalidArgument, "negative cluster id");
      }
      auto [it, inserted] =
          dense.emplace(raw[v], static_cast<ClusterId>(dense.size()));
      p.labels[v] = it->second;
      p.provenance[v] = allocated_as;
    }
    p.num_clusters = dense.size();
    return p;
  }

  std::size_t size() const noexcept { return labels.size(); }
  bool allocated(NodeId v) const { return labels[v] != kUnallocated; }

  std::size_t unallocated_count() const {
    std::size_t c = 0;
    for (auto l : labels) c += (l == kUnallocated);
    return c;
  }

  std::vector<std::size_t> cluster_sizes() const {
    std::vector<std::size_t> sizes(num_clusters, 0);
    for (auto l : labels) {
      if (l != kUnallocated) ++sizes[static_cast<std::size_t>(l)];
    }
    return sizes;
  }

  std::vector<NodeId> members(ClusterId c) const {
    std::vector<NodeId> out;
    for (NodeId v = 0; v < labels.size(); ++v) {
      if (labels[v] == c) out.push_back(v);
    }
    return out;
  }

  friend bool operator==(const Partition&, const Partition&) = default;
};

}  // namespace decode
