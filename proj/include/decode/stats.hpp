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

// Descriptive statistics of a whole network. All of them ignore weights.

#include <algorithm>
#include <cstddef>
#include <vector>

#include "decode/components.hpp"
#include "decode/error.hpp"
#include "decode/graph.hpp"

namespace decode {

/// Observed edges over possible edges, m / (n(n-1)/2).
inline double graph_density(const Graph& g) {
  const double n = static_cast<double>(g.num_nodes());
  if (g.num_nodes() < 2) {
    throw Error(ErrorCode::kUndefined, "density needs at least 2 nodes");
  }
  return static_cast<double>(g.num_edges()) / (n * (n - 1.0) / 2.0);
}

inline std::size_t triangle_count(const Graph& g) {
  std::vector<char> mark(g.num_nodes(), 0);
  std::size_t closed = 0;  // each triangle is seen once per edge
  for (const auto& e : g.edges()) {
    for (const auto& nb : g.neighbors(e.u)) mark[nb.node] = 1;
    for (const auto& nb : g.neighbors(e.v)) closed += mark[nb.node];
    for (const auto& nb : g.neighbors(e.u)) mark[nb.node] = 0;
  }
  return closed / 3;
}

inline std::size_t connected_triples(const Graph& g) {
  std::size_t triples = 0;
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    const std::size_t d = g.degree(v);
    triples += d * (d - (d > 0 ? 1 : 0)) / 2;
  }
  return triples;
}

/// 3 x triangles / connected triples.
inline double global_transitivity(const Graph& g) {
  const std::size_t triples = connected_triples(g);
  if (triples == 0) {
    throw Error(ErrorCode::kUndefined, "graph has no connected triple");
  }
  return 3.0 * static_cast<double>(triangle_count(g)) /
         static_cast<double>(triples);
}

/// Freeman degree centralization, sum(d_max - d_v) / ((n-1)(n-2)).
inline double degree_centralization(const Graph& g) {
  const std::size_t n = g.num_nodes();
  if (n < 3) {
    throw Error(ErrorCode::kUndefined, "centralization needs at least 3 nodes");
  }
  std::size_t dmax = 0;
  for (NodeId v = 0; v < n; ++v) dmax = std::max(dmax, g.degree(v));
  double total = 0.0;
  for (NodeId v = 0; v < n; ++v) {
    total += static_cast<double>(dmax - g.degree(v));
  }
  return total / (static_cast<double>(n - 1) * static_cast<double>(n - 2));
}

inline std::size_t isolated_count(const Graph& g) {
  std::size_t c = 0;
  for (NodeId v = 0; v < g.num_nodes(); ++v) c += (g.degree(v) == 0);
  return c;
}

inline std::size_t component_count(const Graph& g) {
  return connected_components(g).num_clusters;
}

/// Induced subgraph on the largest connected component (ties: the one with
/// the smallest node id). Names are carried over; ids are renumbered in
/// increasing order of the original ids.
inline Graph giant_component(const Graph& g) {
  auto comps = connected_components(g);
  auto sizes = comps.cluster_sizes();
  if (sizes.empty()) return g;
  const auto best = static_cast<ClusterId>(
      std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
  std::vector<NodeId> remap(g.num_nodes(), g.num_nodes());
  std::vector<std::string> names;
  NodeId next = 0;
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    if (comps.labels[v] != best) continue;
    remap[v] = next++;
    if (g.has_names()) names.push_back(g.label(v));
  }
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    if (remap[e.u] < next && remap[e.v] < next) {
      edges.push_back({remap[e.u], remap[e.v], e.weight});
    }
  }
  return Graph::from_edges(next, std::move(edges), std::move(names));
}

}  // namespace decode
