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
#include <string>
#include <vector>

#include "decode/error.hpp"
#include "decode/graph.hpp"
#include "decode/partition.hpp"
#include "decode/union_find.hpp"

namespace decode {

using Mask = std::vector<bool>;

/// Connected components of the subgraph admitted by the masks.
///
/// A null mask admits everything. Nodes outside `node_mask` are
/// kUnallocated; an edge counts only when it is in `edge_mask` (indexed by
/// EdgeId) and both endpoints are admitted. Component ids are dense and
/// ordered by the smallest node id they contain.
inline Partition connected_components(const Graph& g,
                                      const Mask* node_mask = nullptr,
                                      const Mask* edge_mask = nullptr) {
  const std::size_t n = g.num_nodes();
  if (node_mask && node_mask->size() != n) {
    throw Error(ErrorCode::kMaskLength,
                "node mask has " + std::to_string(node_mask->size()) +
                    " entries, graph has " + std::to_string(n) + " nodes");
  }
  if (edge_mask && edge_mask->size() != g.num_edges()) {
    throw Error(ErrorCode::kMaskLength,
                "edge mask has " + std::to_string(edge_mask->size()) +
                    " entries, graph has " + std::to_string(g.num_edges()) +
                    " edges");
  }
  auto admitted = [&](NodeId v) { return !node_mask || (*node_mask)[v]; };

  UnionFind uf(n);
  const auto edges = g.edges();
  for (EdgeId id = 0; id < edges.size(); ++id) {
    if (edge_mask && !(*edge_mask)[id]) continue;
    if (admitted(edges[id].u) && admitted(edges[id].v)) {
      uf.unite(edges[id].u, edges[id].v);
    }
  }
  Partition p(n);
  std::vector<ClusterId> id_of_root(n, kUnallocated);
  for (NodeId v = 0; v < n; ++v) {
    if (!admitted(v)) continue;
    auto r = uf.find(v);
    if (id_of_root[r] == kUnallocated) {
      id_of_root[r] = static_cast<ClusterId>(p.num_clusters++);
    }
    p.labels[v] = id_of_root[r];
    p.provenance[v] = Provenance::kCore;
  }
  return p;
}

}  // namespace decode
