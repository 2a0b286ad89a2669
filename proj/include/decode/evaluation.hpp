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

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "decode/error.hpp"
#include "decode/graph.hpp"
#include "decode/partition.hpp"

namespace decode {

enum class UnallocatedPolicy { kExclude, kOwnCluster };

constexpr std::string_view to_string(UnallocatedPolicy p) {
  return p == UnallocatedPolicy::kOwnCluster ? "own_cluster" : "exclude";
}

inline UnallocatedPolicy parse_unallocated_policy(std::string_view s) {
  if (s == "exclude") return UnallocatedPolicy::kExclude;
  if (s == "own_cluster" || s == "own-cluster") return UnallocatedPolicy::kOwnCluster;
  throw Error(ErrorCode::kInvalidArgument, "unknown unallocated policy '" + std::string(s) + "'");
}

/// Sparse co-occurrence counts between two partitions. Rows index the first
/// partition, columns the second; both are renumbered densely.
struct ContingencyTable {
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> cells;
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  std::size_t total = 0;

  /// Under kExclude a node unallocated on either side is dropped; under
  /// kOwnCluster each unallocated node forms its own class.
  static ContingencyTable build(const Partition& a, const Partition& b,
                                UnallocatedPolicy policy) {
    if (a.size() != b.size()) {
      throw Error(ErrorCode::kNodeSetMismatch, "partitions cover different node counts");
    }
    ContingencyTable t;
    std::map<ClusterId, std::size_t> ra, rb;
    std::size_t extra_a = 0, extra_b = 0;
    auto key = [](ClusterId c, std::size_t& extra, std::map<ClusterId, std::size_t>& ids,
                  std::vector<std::size_t>& marg) {
      // Unallocated singletons get fresh negative keys so they never collide.
      const ClusterId k = c == kUnallocated ? -2 - static_cast<ClusterId>(extra++) : c;
      auto [it, inserted] = ids.emplace(k, ids.size());
      if (inserted) marg.push_back(0);
      ++marg[it->second];
      return it->second;
    };
    for (NodeId v = 0; v < a.size(); ++v) {
      const bool ua = !a.allocated(v), ub = !b.allocated(v);
      if ((ua || ub) && policy == UnallocatedPolicy::kExclude) continue;
      const std::size_t i = key(a.labels[v], extra_a, ra, t.rows);
      const std::size_t j = key(b.labels[v], extra_b, rb, t.cols);
      ++t.cells[{i, j}];
      ++t.total;
    }
    return t;
  }
};

/// Normalized mutual information with natural logarithms. When both sides
/// consist of a single class the value is 1; when only one side does, 0.
inline double nmi(const Partition& pred, const Partition& truth,
                  UnallocatedPolicy policy = UnallocatedPolicy::kExclude) {
  const auto t = ContingencyTable::build(pred, truth, policy);
  if (t.total == 0) {
    throw Error(ErrorCode::kInvalidArgument, "no node is labelled in both partitions");
  }
  const double n = static_cast<double>(t.total);
  double num = 0.0;
  for (const auto& [ij, count] : t.cells) {
    const double c = static_cast<double>(count);
    num += c * std::log(c * n / (static_cast<double>(t.rows[ij.first]) *
                                 static_cast<double>(t.cols[ij.second])));
  }
  num *= -2.0;
  double den = 0.0;
  for (auto r : t.rows) den += static_cast<double>(r) * std::log(static_cast<double>(r) / n);
  for (auto c : t.cols) den += static_cast<double>(c) * std::log(static_cast<double>(c) / n);
  if (t.rows.size() == 1 && t.cols.size() == 1) return 1.0;
  if (t.rows.size() == 1 || t.cols.size() == 1) return 0.0;
  return std::clamp(num / den, 0.0, 1.0);
}

/// Weighted Newman-Girvan modularity.
inline double modularity(const Graph& g, const Partition& p) {
  if (p.size() != g.num_nodes()) {
    throw Error(ErrorCode::kNodeSetMismatch, "partition length does not match graph");
  }
  if (p.unallocated_count() > 0) {
    throw Error(ErrorCode::kUnallocatedLabels,
                std::to_string(p.unallocated_count()) + " nodes are unallocated");
  }
  const double w = g.total_weight();
  if (!(w > 0.0)) throw Error(ErrorCode::kInvalidArgument, "graph has no edge weight");
  std::vector<double> inside(p.num_clusters, 0.0), strength(p.num_clusters, 0.0);
  for (const auto& e : g.edges()) {
    if (p.labels[e.u] == p.labels[e.v]) inside[static_cast<std::size_t>(p.labels[e.u])] += e.weight;
  }
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    strength[static_cast<std::size_t>(p.labels[v])] += g.strength(v);
  }
  double q = 0.0;
  for (std::size_t c = 0; c < p.num_clusters; ++c) {
    const double s = strength[c] / (2.0 * w);
    q += inside[c] / w - s * s;
  }
  return q;
}

struct ClusterHomogeneity {
  ClusterId cluster = 0;
  std::size_t size = 0;
  double value = 0.0;  // sum of squared attribute frequencies
};

struct HomogeneityReport {
  std::vector<ClusterHomogeneity> clusters;
  std::vector<ClusterId> skipped_empty;
};

/// Complement of the Gini index of `attribute` within each cluster. Empty
/// clusters are listed in `skipped_empty`. Unallocated nodes are ignored.
inline HomogeneityReport gini_homogeneity(const Partition& p,
                                          const std::vector<std::string>& attribute) {
  if (attribute.size() != p.size()) {
    throw Error(ErrorCode::kNodeSetMismatch, "attribute length does not match partition");
  }
  std::vector<std::map<std::string, std::size_t>> freq(p.num_clusters);
  for (NodeId v = 0; v < p.size(); ++v) {
    if (!p.allocated(v)) continue;
    if (attribute[v].empty()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "attribute missing for clustered node " + std::to_string(v));
    }
    ++freq[static_cast<std::size_t>(p.labels[v])][attribute[v]];
  }
  HomogeneityReport r;
  for (std::size_t c = 0; c < p.num_clusters; ++c) {
    std::size_t size = 0;
    for (const auto& [k, f] : freq[c]) size += f;
    if (size == 0) {
      r.skipped_empty.push_back(static_cast<ClusterId>(c));
      continue;
    }
    double g = 0.0;
    for (const auto& [k, f] : freq[c]) {
      const double share = static_cast<double>(f) / static_cast<double>(size);
      g += share * share;
    }
    r.clusters.push_back({static_cast<ClusterId>(c), size, g});
  }
  return r;
}

}  // namespace decode
