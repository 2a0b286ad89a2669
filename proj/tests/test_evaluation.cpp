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

#include <cmath>
#include <random>
#include <set>

#include "oracles.hpp"

namespace decode {
namespace {

using testing::graph_of;

Partition labels(std::vector<ClusterId> raw) { return Partition::from_labels(raw); }

TEST(Nmi, IdenticalPartitionsScoreOne) {
  auto p = labels({0, 0, 1, 1, 2});
  EXPECT_DOUBLE_EQ(nmi(p, p), 1.0);
  EXPECT_DOUBLE_EQ(nmi(p, labels({5, 5, 3, 3, 9})), 1.0);
}

TEST(Nmi, HandComputedFourNodeTable) {
  // rows {2,2}, columns {3,1}, cells 2,1,1.
  const double ln2 = std::log(2.0), ln3 = std::log(3.0);
  const double want = (12 * ln2 - 6 * ln3) / (12 * ln2 - 3 * ln3);
  EXPECT_NEAR(nmi(labels({0, 0, 1, 1}), labels({0, 0, 0, 1})), want, 1e-15);
  EXPECT_NEAR(nmi(labels({0, 0, 1, 1}), labels({0, 1, 0, 1})), 0.0, 1e-15);
}

TEST(Nmi, IndependentRoundRobinApproachesZero) {
  std::vector<ClusterId> a, b;
  for (ClusterId v = 0; v < 6000; ++v) {
    a.push_back(v % 3);
    b.push_back(v < 3000 ? 0 : 1);
  }
  EXPECT_LT(nmi(labels(a), labels(b)), 1e-3);
}

TEST(Nmi, SingleClusterConventions) {
  auto one = labels({0, 0, 0, 0});
  EXPECT_EQ(nmi(one, one), 1.0);
  EXPECT_EQ(nmi(one, labels({0, 1, 0, 1})), 0.0);
  EXPECT_EQ(nmi(labels({0, 1, 0, 1}), one), 0.0);
}

TEST(Nmi, MatchesDenseOracleOnRandomPartitions) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 5 + rng() % 80;
    std::vector<long> a(n), b(n);
    std::vector<ClusterId> ra(n), rb(n);
    const long ka = 2 + static_cast<long>(rng() % 5), kb = 2 + static_cast<long>(rng() % 5);
    for (std::size_t v = 0; v < n; ++v) {
      ra[v] = a[v] = static_cast<long>(rng() % ka);
      rb[v] = b[v] = static_cast<long>(rng() % kb);
    }
    auto pa = labels(ra), pb = labels(rb);
    if (pa.num_clusters < 2 || pb.num_clusters < 2) continue;
    EXPECT_NEAR(nmi(pa, pb), testing::direct_nmi(a, b), 1e-12);
  }
}

TEST(Nmi, UnallocatedPolicies) {
  auto truth = labels({0, 0, 1, 1, 1});
  auto pred = labels({0, 0, 1, 1, kUnallocated});
  EXPECT_DOUBLE_EQ(nmi(pred, truth, UnallocatedPolicy::kExclude), 1.0);
  const double strict = nmi(pred, truth, UnallocatedPolicy::kOwnCluster);
  EXPECT_LT(strict, 1.0);
  EXPECT_NEAR(strict, testing::direct_nmi({0, 0, 1, 1, 2}, {0, 0, 1, 1, 1}), 1e-12);
  EXPECT_THROW(nmi(labels({0}), labels({0, 1})), Error);
  EXPECT_THROW(nmi(Partition(3), labels({0, 1, 1})), Error);
}

TEST(Modularity, Examples) {
  auto two_k3 = graph_of(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  EXPECT_NEAR(modularity(two_k3, labels({0, 0, 0, 1, 1, 1})), 0.5, 1e-15);
  EXPECT_NEAR(testing::direct_modularity(two_k3, {0, 0, 0, 1, 1, 1}), 0.5, 1e-15);
  EXPECT_NEAR(modularity(two_k3, labels({0, 0, 0, 0, 0, 0})), 0.0, 1e-15);

  auto g = testing::karate_weighted();
  std::vector<ClusterId> own(g.num_nodes());
  for (NodeId v = 0; v < g.num_nodes(); ++v) own[v] = static_cast<ClusterId>(v);
  double analytic = 0.0;
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    const double s = g.strength(v) / (2 * g.total_weight());
    analytic -= s * s;
  }
  EXPECT_NEAR(modularity(g, labels(own)), analytic, 1e-14);
}

TEST(Modularity, MatchesDoubleSumOracle) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 30; ++t) {
    auto g = testing::random_graph(rng, 30, 0.2, 6);
    if (g.num_edges() == 0) continue;
    std::vector<long> l(g.num_nodes());
    std::vector<ClusterId> raw(g.num_nodes());
    for (NodeId v = 0; v < g.num_nodes(); ++v) raw[v] = l[v] = static_cast<long>(rng() % 4);
    EXPECT_NEAR(modularity(g, labels(raw)), testing::direct_modularity(g, l), 1e-12);
  }
}

TEST(Modularity, RejectsUnallocatedNodes) {
  auto g = graph_of(3, {{0, 1}, {1, 2}});
  try {
    modularity(g, labels({0, 0, kUnallocated}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnallocatedLabels);
  }
}

TEST(Homogeneity, Examples) {
  auto p = labels({0, 1, 1, 2, 2, 2, 2});
  auto r = gini_homogeneity(p, {"a", "a", "b", "a", "a", "a", "b"});
  ASSERT_EQ(r.clusters.size(), 3u);
  EXPECT_DOUBLE_EQ(r.clusters[0].value, 1.0);
  EXPECT_DOUBLE_EQ(r.clusters[1].value, 0.5);
  EXPECT_DOUBLE_EQ(r.clusters[2].value, 0.625);
  EXPECT_EQ(r.clusters[2].size, 4u);
}

TEST(Homogeneity, EmptyClustersAreSkipped) {
  Partition p(3);
  p.labels = {0, 0, 2};
  p.provenance.assign(3, Provenance::kCore);
  p.num_clusters = 3;
  auto r = gini_homogeneity(p, {"x", "y", "x"});
  EXPECT_EQ(r.clusters.size(), 2u);
  EXPECT_EQ(r.skipped_empty, (std::vector<ClusterId>{1}));
}

TEST(Homogeneity, BoundedByNumberOfValuesTouched) {
  std::mt19937_64 rng(17);
  std::vector<ClusterId> raw(200);
  std::vector<std::string> attr(200);
  for (std::size_t v = 0; v < 200; ++v) {
    raw[v] = static_cast<ClusterId>(rng() % 7);
    attr[v] = std::string(1, static_cast<char>('a' + rng() % 5));
  }
  auto p = labels(raw);
  for (const auto& c : gini_homogeneity(p, attr).clusters) {
    std::set<std::string> touched;
    for (NodeId v : p.members(c.cluster)) touched.insert(attr[v]);
    EXPECT_GE(c.value, 1.0 / static_cast<double>(touched.size()) - 1e-15);
    EXPECT_LE(c.value, 1.0 + 1e-15);
  }
}

TEST(Homogeneity, MissingAttributeIsAnError) {
  EXPECT_THROW(gini_homogeneity(labels({0, 0}), {"a", ""}), Error);
}

}  // namespace
}  // namespace decode
