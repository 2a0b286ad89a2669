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
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "decode/error.hpp"
#include "decode/graph.hpp"

namespace decode {

/// Ordered layers of a multiplex network over one node set.
///
/// Node identity across layers is by name when the layers are named and by
/// integer id otherwise. Layers may list named nodes in different orders; the
/// first layer fixes the ids of the overlay.
class LayerStack {
 public:
  void add(std::string name, Graph layer) {
    if (!layers_.empty()) check_compatible(layers_.front(), layer);
    names_.push_back(std::move(name));
    layers_.push_back(std::move(layer));
  }

  std::size_t size() const noexcept { return layers_.size(); }
  bool empty() const noexcept { return layers_.empty(); }
  const Graph& layer(std::size_t k) const { return layers_.at(k); }
  const std::string& name(std::size_t k) const { return names_.at(k); }

 private:
  static void check_compatible(const Graph& ref, const Graph& g) {
    if (ref.num_nodes() != g.num_nodes()) {
      throw Error(ErrorCode::kNodeSetMismatch,
                  "layer has " + std::to_string(g.num_nodes()) +
                      " nodes, expected " + std::to_string(ref.num_nodes()));
    }
    if (ref.has_names() != g.has_names()) {
      throw Error(ErrorCode::kNodeSetMismatch,
                  "named and unnamed layers cannot be stacked");
    }
    if (!ref.has_names()) return;
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
      if (!ref.find(g.label(v))) {
        throw Error(ErrorCode::kNodeSetMismatch,
                    "node '" + g.label(v) + "' is missing from the first layer");
      }
    }
  }

  std::vector<Graph> layers_;
  std::vector<std::string> names_;
};

/// Divides every weight by the layer's total weight.
inline Graph normalize_layer(const Graph& g) {
  const double total = g.total_weight();
  if (g.num_edges() == 0 || total <= 0.0) {
    throw Error(ErrorCode::kEmptyLayer, "layer has no weight to normalize");
  }
  std::vector<double> w;
  w.reserve(g.num_edges());
  for (const auto& e : g.edges()) w.push_back(e.weight / total);
  return g.with_weights(w);
}

/// Overlapping network: union of the layers' edge sets, summing the
/// (optionally normalized) weights of an edge present in several layers.
///
/// Contributions to one edge are summed in ascending order, so the result
/// does not depend on the order of the layers.
inline Graph overlay(const LayerStack& stack, bool prenormalize) {
  if (stack.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "overlay of an empty stack");
  }
  const Graph& ref = stack.layer(0);
  std::map<std::pair<NodeId, NodeId>, std::vector<double>> contributions;
  for (std::size_t k = 0; k < stack.size(); ++k) {
    const Graph layer =
        prenormalize ? normalize_layer(stack.layer(k)) : stack.layer(k);
    for (const auto& e : layer.edges()) {
      NodeId u = e.u;
      NodeId v = e.v;
      if (ref.has_names()) {
        u = *ref.find(layer.label(e.u));
        v = *ref.find(layer.label(e.v));
      }
      if (u > v) std::swap(u, v);
      contributions[{u, v}].push_back(e.weight);
    }
  }
  std::vector<Edge> edges;
  edges.reserve(contributions.size());
  for (auto& [key, ws] : contributions) {
    std::sort(ws.begin(), ws.end());
    double sum = 0.0;
    for (double w : ws) sum += w;
    edges.push_back({key.first, key.second, sum});
  }
  std::vector<std::string> names(ref.names().begin(), ref.names().end());
  return Graph::from_edges(ref.num_nodes(), std::move(edges), std::move(names));
}

}  // namespace decode
