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

#include <random>

#include "oracles.hpp"

namespace decode {
namespace {

using testing::bfs_components;
using testing::graph_of;
using testing::random_graph;

TEST(Graph, CanonicalizesAndBuildsSymmetricAdjacency) {
  auto g = Graph::from_edges(4, {{2, 0, 1.5}, {3, 1, 2.0}, {0, 1, 1.0}});
  ASSERT_EQ(g.num_edges(), 3u);
  EXPECT_EQ(g.edge(0), (Edge{0, 1, 1.0}));
  EXPECT_EQ(g.edge(1), (Edge{0, 2, 1.5}));
  EXPECT_EQ(g.edge(2), (Edge{1, 3, 2.0}));
  EXPECT_DOUBLE_EQ(g.strength(0), 2.5);
  EXPECT_FALSE(g.is_binary());
  EXPECT_EQ(g.find_edge(3, 1), 2u);
  EXPECT_FALSE(g.find_edge(2, 3).has_value());
}

TEST(Graph, RejectsInvalidEdges) {
  auto code = [](std::vector<Edge> e) {
    try {
      Graph::from_edges(3, std::move(e));
    } catch (const Error& err) {
      return err.code();
    }
    return ErrorCode::kIo;
  };
  EXPECT_EQ(code({{0, 0, 1}}), ErrorCode::kSelfLoop);
  EXPECT_EQ(code({{0, 1, 1}, {1, 0, 2}}), ErrorCode::kDuplicateEdge);
  EXPECT_EQ(code({{0, 1, -1}}), ErrorCode::kNegativeWeight);
  EXPECT_EQ(code({{0, 1, 0}}), ErrorCode::kZeroWeight);
  EXPECT_EQ(code({{0, 5, 1}}), ErrorCode::kInvalidNode);
}

TEST(Graph, DegreeSumAndSymmetryOnRandomGraphs) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    auto g = random_graph(rng, 5 + trial, 0.2, 4);
    std::size_t deg_sum = 0;
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
      deg_sum += g.degree(v);
      for (const auto& nb : g.neighbors(v)) {
        auto back = g.find_edge(nb.node, v);
        ASSERT_TRUE(back.has_value());
        EXPECT_EQ(*back, nb.edge);
        EXPECT_EQ(g.edge(nb.edge).weight, nb.weight);
      }
    }
    EXPECT_EQ(deg_sum, 2 * g.num_edges());
  }
}

TEST(Graph, BinarizedAndWithWeights) {
  auto g = Graph::from_edges(3, {{0, 1, 2.0}, {1, 2, 3.0}}, {"a", "b", "c"});
  auto b = g.binarized();
  EXPECT_TRUE(b.is_binary());
  EXPECT_EQ(b.names()[2], "c");
  std::vector<double> w{5.0, 7.0};
  auto h = g.with_weights(w);
  EXPECT_DOUBLE_EQ(h.total_weight(), 12.0);
  EXPECT_EQ(h.find("b"), 1u);
}

TEST(UnionFind, UniteReducesComponentCountOnlyAcrossSets) {
  UnionFind uf(5);
  EXPECT_TRUE(uf.unite(0, 1));
  EXPECT_FALSE(uf.unite(1, 0));
  EXPECT_TRUE(uf.unite(3, 4));
  EXPECT_TRUE(uf.unite(1, 4));
  EXPECT_EQ(uf.components(), 2u);
  EXPECT_EQ(uf.find(uf.find(3)), uf.find(0));
  EXPECT_EQ(uf.set_size(4), 4u);
  EXPECT_FALSE(uf.same(2, 0));
}

TEST(Components, MaskedPath) {
  auto g = graph_of(3, {{0, 1}, {1, 2}});
  Mask mask{true, false, true};
  auto p = connected_components(g, &mask);
  EXPECT_EQ(p.num_clusters, 2u);
  EXPECT_EQ(p.labels, (std::vector<ClusterId>{0, kUnallocated, 1}));
}

TEST(Components, EdgeMaskAndLengthCheck) {
  auto g = graph_of(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  EXPECT_EQ(connected_components(g).num_clusters, 1u);
  Mask edges(g.num_edges(), false);
  edges[*g.find_edge(2, 3)] = true;
  EXPECT_EQ(connected_components(g, nullptr, &edges).num_clusters, 3u);
  Mask bad(2, true);
  EXPECT_THROW(connected_components(g, &bad), Error);
}

TEST(Components, KarateIsConnected) {
  auto g = testing::karate();
  EXPECT_EQ(g.num_nodes(), 34u);
  EXPECT_EQ(g.num_edges(), 78u);
  std::size_t count = 0;
  bfs_components(g, std::vector<bool>(34, true), count);
  EXPECT_EQ(count, 1u);
  EXPECT_EQ(connected_components(g).num_clusters, 1u);
}

TEST(Components, MatchBreadthFirstSearchUpTo200Nodes) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + rng() % 200;
    auto g = random_graph(rng, n, 1.5 / static_cast<double>(n));
    std::vector<bool> keep(n);
    for (std::size_t v = 0; v < n; ++v) keep[v] = rng() % 4 != 0;
    std::size_t expected = 0;
    auto oracle = bfs_components(g, keep, expected);
    auto p = connected_components(g, &keep);
    ASSERT_EQ(p.num_clusters, expected);
    for (NodeId v = 0; v < n; ++v) {
      EXPECT_EQ(p.labels[v] == kUnallocated, oracle[v] < 0);
      for (NodeId u = 0; u < v; ++u) {
        if (oracle[v] >= 0 && oracle[u] >= 0) {
          EXPECT_EQ(p.labels[v] == p.labels[u], oracle[v] == oracle[u]);
        }
      }
    }
  }
}

TEST(Partition, FromLabelsRenumbersByFirstAppearance) {
  auto p = Partition::from_labels({7, kUnallocated, 3, 7});
  EXPECT_EQ(p.labels, (std::vector<ClusterId>{0, kUnallocated, 1, 0}));
  EXPECT_EQ(p.num_clusters, 2u);
  EXPECT_EQ(p.cluster_sizes(), (std::vector<std::size_t>{2, 1}));
  EXPECT_EQ(p.unallocated_count(), 1u);
}

}  // namespace
}  // namespace decode
