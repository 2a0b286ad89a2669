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


#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>
#include <unordered_map>

#include "oracles.hpp"

namespace decode {
namespace {

using testing::graph_of;
using testing::random_graph;

Graph complete(std::size_t n) {
  std::vector<std::pair<NodeId, NodeId>> e;
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return graph_of(n, e);
}

Graph path(std::size_t n) {
  std::vector<std::pair<NodeId, NodeId>> e;
  for (NodeId v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return graph_of(n, e);
}

Graph star(std::size_t leaves) {
  std::vector<std::pair<NodeId, NodeId>> e;
  for (NodeId v = 1; v <= leaves; ++v) e.emplace_back(0, v);
  return graph_of(leaves + 1, e);
}

Graph cycle(std::size_t n) {
  auto g = path(n);
  std::vector<Edge> e(g.edges().begin(), g.edges().end());
  e.push_back({0, n - 1, 1.0});
  return Graph::from_edges(n, e);
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kIo;
}

TEST(Stats, Density) {
  EXPECT_DOUBLE_EQ(graph_density(complete(5)), 1.0);
  EXPECT_DOUBLE_EQ(graph_density(path(5)), 0.4);
  EXPECT_NEAR(graph_density(testing::karate()), 78.0 / 561.0, 1e-15);
  EXPECT_EQ(code_of([] { graph_density(Graph::from_edges(1, {})); }), ErrorCode::kUndefined);
}

TEST(Stats, Transitivity) {
  EXPECT_DOUBLE_EQ(global_transitivity(complete(3)), 1.0);
  EXPECT_DOUBLE_EQ(global_transitivity(path(3)), 0.0);
  EXPECT_EQ(code_of([] { global_transitivity(path(2)); }), ErrorCode::kUndefined);

  // Triple enumeration over every (center, unordered pair of neighbors).
  auto g = testing::karate();
  double closed = 0, triples = 0;
  for (NodeId c = 0; c < g.num_nodes(); ++c) {
    auto nb = g.neighbors(c);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        ++triples;
        if (g.find_edge(nb[i].node, nb[j].node)) ++closed;
      }
  }
  EXPECT_NEAR(global_transitivity(g), closed / triples, 1e-15);
  EXPECT_EQ(triangle_count(g), 45u);
}

TEST(Stats, DegreeCentralization) {
  EXPECT_DOUBLE_EQ(degree_centralization(star(6)), 1.0);
  EXPECT_DOUBLE_EQ(degree_centralization(cycle(7)), 0.0);
  EXPECT_EQ(code_of([] { degree_centralization(path(2)); }), ErrorCode::kUndefined);
  auto g = testing::karate();
  double dmax = 0, sum = 0;
  for (NodeId v = 0; v < g.num_nodes(); ++v) dmax = std::max(dmax, double(g.degree(v)));
  for (NodeId v = 0; v < g.num_nodes(); ++v) sum += dmax - double(g.degree(v));
  EXPECT_NEAR(degree_centralization(g), sum / (33.0 * 32.0), 1e-15);
}

TEST(Stats, RangesOnRandomGraphs) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 30; ++t) {
    auto g = random_graph(rng, 10 + t, 0.3);
    EXPECT_GE(graph_density(g), 0.0);
    EXPECT_LE(graph_density(g), 1.0);
    EXPECT_GE(degree_centralization(g), 0.0);
    EXPECT_LE(degree_centralization(g), 1.0);
    if (connected_triples(g) > 0) {
      EXPECT_GE(global_transitivity(g), 0.0);
      EXPECT_LE(global_transitivity(g), 1.0);
    }
  }
}

TEST(Stats, GiantComponentAndIsolates) {
  auto g = graph_of(7, {{0, 1}, {1, 2}, {3, 4}});
  EXPECT_EQ(isolated_count(g), 2u);
  EXPECT_EQ(component_count(g), 4u);
  auto giant = giant_component(g);
  EXPECT_EQ(giant.num_nodes(), 3u);
  EXPECT_EQ(giant.num_edges(), 2u);
}

TEST(Layers, NormalizeExamples) {
  auto g = Graph::from_edges(4, {{0, 1, 2}, {1, 2, 3}, {2, 3, 5}});
  auto h = normalize_layer(g);
  EXPECT_DOUBLE_EQ(h.edge(0).weight, 0.2);
  EXPECT_DOUBLE_EQ(h.edge(1).weight, 0.3);
  EXPECT_DOUBLE_EQ(h.edge(2).weight, 0.5);
  auto p = normalize_layer(path(9));
  for (const auto& e : p.edges()) EXPECT_DOUBLE_EQ(e.weight, 1.0 / 8.0);
  EXPECT_EQ(code_of([] { normalize_layer(Graph::from_edges(3, {})); }),
            ErrorCode::kEmptyLayer);
}

TEST(Layers, NormalizedKarateSumsToOne) {
  auto h = normalize_layer(testing::karate_weighted());
  double sum = 0;
  for (const auto& e : h.edges()) sum += e.weight;
  EXPECT_NEAR(sum, 1.0, 1e-12);
}

TEST(Layers, OverlayUnionAndSum) {
  std::vector<std::string> names{"a", "b", "c"};
  LayerStack s;
  s.add("A", Graph::from_edges(3, {{0, 1, 0.2}}, names));
  s.add("B", Graph::from_edges(3, {{0, 1, 0.3}, {1, 2, 4.0}}, names));
  auto g = overlay(s, false);
  EXPECT_EQ(g.num_edges(), 2u);
  EXPECT_DOUBLE_EQ(g.edge(*g.find_edge(0, 1)).weight, 0.5);
  EXPECT_DOUBLE_EQ(g.edge(*g.find_edge(1, 2)).weight, 4.0);
}

TEST(Layers, OverlayMatchesNameswiseOrder) {
  LayerStack s;
  s.add("A", Graph::from_edges(3, {{0, 1, 1.0}}, {"a", "b", "c"}));
  s.add("B", Graph::from_edges(3, {{0, 1, 2.0}}, {"c", "b", "a"}));  // c-b
  auto g = overlay(s, false);
  EXPECT_DOUBLE_EQ(g.edge(*g.find_edge(*g.find("b"), *g.find("c"))).weight, 2.0);
}

TEST(Layers, MismatchedNodeSetsRejected) {
  LayerStack s;
  s.add("A", Graph::from_edges(3, {{0, 1, 1.0}}, {"a", "b", "c"}));
  EXPECT_EQ(code_of([&] { s.add("B", Graph::from_edges(2, {{0, 1, 1.0}}, {"a", "b"})); }),
            ErrorCode::kNodeSetMismatch);
  EXPECT_EQ(code_of([&] { s.add("C", Graph::from_edges(3, {{0, 1, 1.0}}, {"a", "b", "z"})); }),
            ErrorCode::kNodeSetMismatch);
  EXPECT_EQ(code_of([&] { s.add("D", Graph::from_edges(3, {{0, 1, 1.0}})); }),
            ErrorCode::kNodeSetMismatch);
}

// Three random layers merged through a hash map keyed by the edge.
TEST(Layers, OverlayEqualsHashMergeOracle) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    LayerStack s;
    std::vector<Graph> layers;
    for (int k = 0; k < 3; ++k) layers.push_back(random_graph(rng, 25, 0.2, 9));
    for (int k = 0; k < 3; ++k) s.add("L" + std::to_string(k), layers[k]);
    for (bool pre : {false, true}) {
      std::unordered_map<std::size_t, double> merged;
      for (const auto& l : layers) {
        const double total = pre ? l.total_weight() : 1.0;
        for (const auto& e : l.edges()) merged[e.u * 1000 + e.v] += e.weight / total;
      }
      auto g = overlay(s, pre);
      ASSERT_EQ(g.num_edges(), merged.size());
      for (const auto& e : g.edges()) {
        EXPECT_NEAR(e.weight, merged.at(e.u * 1000 + e.v), 1e-15);
      }
    }
  }
}

TEST(Layers, NormalizedOverlayIsPermutationInvariant) {
  std::mt19937_64 rng(9);
  std::vector<Graph> layers;
  for (int k = 0; k < 4; ++k) layers.push_back(random_graph(rng, 30, 0.15, 7));
  std::vector<int> order{0, 1, 2, 3};
  std::optional<Graph> first;
  do {
    LayerStack s;
    for (int k : order) s.add("L", layers[k]);
    auto g = overlay(s, true);
    if (!first) {
      first = g;
    } else {
      EXPECT_EQ(g, *first);
    }
  } while (std::next_permutation(order.begin(), order.end()));
}

}  // namespace
}  // namespace decode
