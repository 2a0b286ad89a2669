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
#include <atomic>
#include <cmath>
#include <cstddef>
#include <functional>
#include <queue>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "decode/error.hpp"
#include "decode/graph.hpp"

namespace decode {

/// Node-wise density used as the height function of the level-set scan.
enum class Measure { kDegree, kLocalDensity, kBetweenness };

constexpr std::string_view to_string(Measure m) {
  switch (m) {
    case Measure::kDegree: return "degree";
    case Measure::kLocalDensity: return "local_density";
    case Measure::kBetweenness: return "betweenness";
  }
  return "degree";
}

inline Measure parse_measure(std::string_view s) {
  if (s == "degree" || s == "deg") return Measure::kDegree;
  if (s == "local_density" || s == "local-density" || s == "ld") {
    return Measure::kLocalDensity;
  }
  if (s == "betweenness" || s == "betw" || s == "bt") return Measure::kBetweenness;
  throw Error(ErrorCode::kInvalidArgument, "unknown measure '" + std::string(s) + "'");
}

struct DensityVector {
  std::vector<double> values;
  Measure measure = Measure::kDegree;
  bool weighted = false;
  bool normalized = false;

  std::size_t size() const noexcept { return values.size(); }
  double operator[](NodeId v) const { return values[v]; }
  double max() const {
    return values.empty() ? 0.0 : *std::max_element(values.begin(), values.end());
  }
};

/// Neighbor count, or strength (sum of incident weights) when weighted.
inline DensityVector degree_density(const Graph& g, bool weighted) {
  DensityVector d{std::vector<double>(g.num_nodes()), Measure::kDegree, weighted};
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    d.values[v] = weighted ? g.strength(v) : static_cast<double>(g.degree(v));
  }
  return d;
}

/// Edge density of the subgraph induced by the closed neighborhood N[v]:
/// (edges, or total weight, inside N[v]) / (k(k-1)/2) with k = |N[v]|.
/// Isolated nodes get 0.
inline DensityVector local_density(const Graph& g, bool weighted) {
  const std::size_t n = g.num_nodes();
  DensityVector d{std::vector<double>(n, 0.0), Measure::kLocalDensity, weighted};
  std::vector<char> in_hood(n, 0);
  for (NodeId v = 0; v < n; ++v) {
    const auto nbrs = g.neighbors(v);
    if (nbrs.empty()) continue;
    for (const auto& nb : nbrs) in_hood[nb.node] = 1;
    double inside = 0.0;
    for (const auto& nb : nbrs) {
      inside += weighted ? nb.weight : 1.0;
      for (const auto& x : g.neighbors(nb.node)) {
        if (x.node > nb.node && in_hood[x.node]) inside += weighted ? x.weight : 1.0;
      }
    }
    for (const auto& nb : nbrs) in_hood[nb.node] = 0;
    const double k = static_cast<double>(nbrs.size() + 1);
    d.values[v] = inside / (k * (k - 1.0) / 2.0);
  }
  return d;
}

namespace detail {

// Relative tolerance for treating two weighted path lengths as equal.
inline constexpr double kPathTieTolerance = 1e-12;

inline bool same_length(double a, double b) {
  return std::abs(a - b) <= kPathTieTolerance * std::max(std::abs(a), std::abs(b));
}

// Adds the single-source dependencies of `source` to `acc` (Brandes).
// Weighted paths use edge length 1/w.
struct BrandesWorkspace {
  std::vector<double> dist, sigma, delta;
  std::vector<std::vector<NodeId>> preds;
  std::vector<NodeId> order;
  std::vector<char> settled;

  explicit BrandesWorkspace(std::size_t n)
      : dist(n), sigma(n), delta(n), preds(n), settled(n) {
    order.reserve(n);
  }

  void accumulate(const Graph& g, NodeId source, bool weighted,
                  std::vector<double>& acc) {
    const std::size_t n = g.num_nodes();
    std::fill(dist.begin(), dist.end(), -1.0);
    std::fill(sigma.begin(), sigma.end(), 0.0);
    std::fill(delta.begin(), delta.end(), 0.0);
    std::fill(settled.begin(), settled.end(), 0);
    for (auto& p : preds) p.clear();
    order.clear();
    dist[source] = 0.0;
    sigma[source] = 1.0;

    if (!weighted) {
      std::size_t head = 0;
      order.push_back(source);
      while (head < order.size()) {
        const NodeId v = order[head++];
        for (const auto& nb : g.neighbors(v)) {
          const NodeId w = nb.node;
          if (dist[w] < 0.0) {
            dist[w] = dist[v] + 1.0;
            order.push_back(w);
          }
          if (dist[w] == dist[v] + 1.0) {
            sigma[w] += sigma[v];
            preds[w].push_back(v);
          }
        }
      }
    } else {
      // Min-heap on (distance, node id): equal tentative distances pop in
      // node id order.
      using Item = std::pair<double, NodeId>;
      std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
      heap.emplace(0.0, source);
      while (!heap.empty()) {
        auto [dv, v] = heap.top();
        heap.pop();
        if (settled[v] || dv != dist[v]) continue;
        settled[v] = 1;
        order.push_back(v);
        for (const auto& nb : g.neighbors(v)) {
          const NodeId w = nb.node;
          if (settled[w]) continue;
          const double alt = dist[v] + 1.0 / nb.weight;
          if (dist[w] < 0.0 || (alt < dist[w] && !same_length(alt, dist[w]))) {
            dist[w] = alt;
            sigma[w] = sigma[v];
            preds[w].assign(1, v);
            heap.emplace(alt, w);
          } else if (same_length(alt, dist[w])) {
            sigma[w] += sigma[v];
            preds[w].push_back(v);
          }
        }
      }
    }
    (void)n;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const NodeId w = *it;
      for (NodeId v : preds[w]) delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
      if (w != source) acc[w] += delta[w];
    }
  }
};

}  // namespace detail

/// Raw shortest-path betweenness (each unordered pair counted once).
///
/// Sources are processed in fixed blocks whose size depends only on n, and
/// block sums are combined in block order, so the output is bit-identical for
/// any `threads` value.
inline DensityVector betweenness_density(const Graph& g, bool weighted,
                                         unsigned threads = 1) {
  const std::size_t n = g.num_nodes();
  DensityVector d{std::vector<double>(n, 0.0), Measure::kBetweenness, weighted};
  if (n == 0) return d;
  const std::size_t block = std::max<std::size_t>(32, (n + 63) / 64);
  const std::size_t blocks = (n + block - 1) / block;
  std::vector<std::vector<double>> partial(blocks, std::vector<double>(n, 0.0));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    detail::BrandesWorkspace ws(n);
    for (std::size_t b = next++; b < blocks; b = next++) {
      const std::size_t end = std::min(n, (b + 1) * block);
      for (NodeId s = b * block; s < end; ++s) {
        ws.accumulate(g, s, weighted, partial[b]);
      }
    }
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(blocks)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  for (const auto& part : partial) {
    for (NodeId v = 0; v < n; ++v) d.values[v] += part[v];
  }
  for (auto& x : d.values) x /= 2.0;
  return d;
}

inline DensityVector compute_density(const Graph& g, Measure m, bool weighted,
                                     unsigned threads = 1) {
  switch (m) {
    case Measure::kDegree: return degree_density(g, weighted);
    case Measure::kLocalDensity: return local_density(g, weighted);
    case Measure::kBetweenness: return betweenness_density(g, weighted, threads);
  }
  return degree_density(g, weighted);
}

/// Rescales to unit sum. An all-zero vector is returned unchanged with
/// `normalized` left false.
inline DensityVector normalize(DensityVector d) {
  double total = 0.0;
  for (double x : d.values) total += x;
  if (total <= 0.0) {
    d.normalized = false;
    return d;
  }
  for (auto& x : d.values) x /= total;
  d.normalized = true;
  return d;
}

}  // namespace decode
