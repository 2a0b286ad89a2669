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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "decode/error.hpp"

namespace decode {

using NodeId = std::size_t;
using EdgeId = std::size_t;

/// Undirected edge stored once with u < v.
struct Edge {
  NodeId u = 0;
  NodeId v = 0;
  double weight = 1.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Adjacency entry: the neighbor, the weight of the connecting edge, and the
/// id of that edge in Graph::edges().
struct Neighbor {
  NodeId node = 0;
  double weight = 1.0;
  EdgeId edge = 0;
};

/// Immutable undirected weighted graph with stable ids 0..n-1.
///
/// Edges are kept in canonical order (sorted by (u, v), u < v) and the
/// adjacency of every node is sorted by neighbor id. A weight of exactly 1 on
/// every edge makes the graph binary. Nodes may carry names; when they do,
/// names are unique and looked up through find().
class Graph {
 public:
  Graph() = default;

  /// Validates and canonicalizes `edges`. `names` is either empty or holds
  /// exactly `n` unique names.
  static Graph from_edges(std::size_t n, std::vector<Edge> edges,
                          std::vector<std::string> names = {}) {
    if (!names.empty() && names.size() != n) {
      throw Error(ErrorCode::kInvalidArgument,
                  "expected " + std::to_string(n) + " node names, got " +
                      std::to_string(names.size()));
    }
    Graph g;
    g.n_ = n;
    for (auto& e : edges) {
      if (e.u >= n || e.v >= n) {
        throw Error(ErrorCode::kInvalidNode,
                    "edge endpoint out of range for n=" + std::to_string(n));
      }
      if (e.u == e.v) {
        throw Error(ErrorCode::kSelfLoop,
                    "self-loop on node " + std::to_string(e.u));
      }
      if (!std::isfinite(e.weight)) {
        throw Error(ErrorCode::kInvalidArgument, "non-finite edge weight");
      }
      if (e.weight < 0.0) {
        throw Error(ErrorCode::kNegativeWeight,
                    "negative weight " + std::to_string(e.weight));
      }
      if (e.weight == 0.0) {
        throw Error(ErrorCode::kZeroWeight,
                    "zero-weight edge between " + std::to_string(e.u) +
                        " and " + std::to_string(e.v));
      }
      if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
      return a.u != b.u ? a.u < b.u : a.v < b.v;
    });
    for (std::size_t k = 1; k < edges.size(); ++k) {
      if (edges[k].u == edges[k - 1].u && edges[k].v == edges[k - 1].v) {
        throw Error(ErrorCode::kDuplicateEdge,
                    "duplicate edge " + std::to_string(edges[k].u) + "-" +
                        std::to_string(edges[k].v));
      }
    }
    g.edges_ = std::move(edges);

    g.offsets_.assign(n + 1, 0);
    for (const auto& e : g.edges_) {
      ++g.offsets_[e.u + 1];
      ++g.offsets_[e.v + 1];
    }
    for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] += g.offsets_[i];
    g.adjacency_.resize(g.offsets_[n]);
    std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
    g.strength_.assign(n, 0.0);
    for (EdgeId id = 0; id < g.edges_.size(); ++id) {
      const auto& e = g.edges_[id];
      g.adjacency_[fill[e.u]++] = {e.v, e.weight, id};
      g.adjacency_[fill[e.v]++] = {e.u, e.weight, id};
    }
    for (NodeId v = 0; v < n; ++v) {
      auto first = g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
      auto last = g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
      std::sort(first, last, [](const Neighbor& a, const Neighbor& b) {
        return a.node < b.node;
      });
      double s = 0.0;
      for (auto it = first; it != last; ++it) s += it->weight;
      g.strength_[v] = s;
    }
    g.total_weight_ = 0.0;
    g.binary_ = true;
    for (const auto& e : g.edges_) {
      g.total_weight_ += e.weight;
      if (e.weight != 1.0) g.binary_ = false;
    }

    g.names_ = std::move(names);
    for (NodeId v = 0; v < g.names_.size(); ++v) {
      auto [it, inserted] = g.name_index_.emplace(g.names_[v], v);
      if (!inserted) {
        throw Error(ErrorCode::kInvalidArgument,
                    "duplicate node name '" + g.names_[v] + "'");
      }
    }
    return g;
  }

  std::size_t num_nodes() const noexcept { return n_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }

  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId id) const { return edges_.at(id); }

  std::span<const Neighbor> neighbors(NodeId v) const {
    return std::span<const Neighbor>(adjacency_).subspan(
        offsets_[v], offsets_[v + 1] - offsets_[v]);
  }

  std::size_t degree(NodeId v) const { return offsets_[v + 1] - offsets_[v]; }
  double strength(NodeId v) const { return strength_[v]; }
  double total_weight() const noexcept { return total_weight_; }
  bool is_binary() const noexcept { return binary_; }

  bool has_names() const noexcept { return !names_.empty(); }
  std::span<const std::string> names() const noexcept { return names_; }

  /// Name of `v`, or its decimal id when the graph is unnamed.
  std::string label(NodeId v) const {
    return names_.empty() ? std::to_string(v) : names_[v];
  }

  std::optional<NodeId> find(std::string_view name) const {
    if (names_.empty()) return std::nullopt;
    auto it = name_index_.find(std::string(name));
    if (it == name_index_.end()) return std::nullopt;
    return it->second;
  }

  std::optional<EdgeId> find_edge(NodeId a, NodeId b) const {
    if (a >= n_ || b >= n_) return std::nullopt;
    auto nbrs = neighbors(a);
    auto it = std::lower_bound(
        nbrs.begin(), nbrs.end(), b,
        [](const Neighbor& x, NodeId key) { return x.node < key; });
    if (it == nbrs.end() || it->node != b) return std::nullopt;
    return it->edge;
  }

  /// Same topology and names with every weight set to 1.
  Graph binarized() const {
    auto edges = edges_;
    for (auto& e : edges) e.weight = 1.0;
    return from_edges(n_, std::move(edges), names_);
  }

  /// Same topology and names with weights replaced edge-by-edge (indexed by
  /// EdgeId).
  Graph with_weights(std::span<const double> weights) const {
    if (weights.size() != edges_.size()) {
      throw Error(ErrorCode::kInvalidArgument, "weight vector length mismatch");
    }
    auto edges = edges_;
    for (std::size_t k = 0; k < edges.size(); ++k) edges[k].weight = weights[k];
    return from_edges(n_, std::move(edges), names_);
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_ && a.names_ == b.names_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Neighbor> adjacency_;
  std::vector<double> strength_;
  double total_weight_ = 0.0;
  bool binary_ = true;
  std::vector<std::string> names_;
  std::unordered_map<std::string, NodeId> name_index_;
};

}  // namespace decode
