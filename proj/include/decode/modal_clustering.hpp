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
#include <functional>
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "decode/cluster_tree.hpp"
#include "decode/density.hpp"
#include "decode/error.hpp"
#include "decode/graph.hpp"
#include "decode/partition.hpp"
#include "decode/union_find.hpp"

namespace decode {

/// Edge admission rule of the weighted scan.
enum class Combine { kAnd, kOr };

constexpr std::string_view to_string(Combine c) {
  return c == Combine::kAnd ? "and" : "or";
}

inline Combine parse_combine(std::string_view s) {
  if (s == "and" || s == "AND") return Combine::kAnd;
  if (s == "or" || s == "OR") return Combine::kOr;
  throw Error(ErrorCode::kInvalidArgument, "unknown combine option '" + std::string(s) + "'");
}

struct WeightedOptions {
  Combine combine = Combine::kOr;
  /// One admission round per level instead of iterating to a fixpoint.
  bool single_pass = false;
  /// After the last level, join whatever is still connected ignoring weights.
  bool final_pass = true;
};

struct ClusterResult {
  ClusterTree tree;
  Partition cores;
};

/// Relative gap below which two density values count as the same level.
/// Betweenness sums fractions in node-dependent order, so equal values can
/// differ in the last bits.
inline constexpr double kLevelTieTolerance = 1e-12;

/// Distinct positive density values, strictly descending. Runs of values
/// within kLevelTieTolerance of their neighbor collapse to the run's minimum,
/// so every node of a run satisfies density >= level.
inline std::vector<double> level_grid(const DensityVector& d) {
  std::vector<double> values;
  for (double x : d.values) {
    if (x > 0.0) values.push_back(x);
  }
  if (values.empty()) {
    throw Error(ErrorCode::kDegenerateDensity, "no node has positive density");
  }
  std::sort(values.begin(), values.end(), std::greater<>());
  std::vector<double> out{values.front()};
  for (std::size_t k = 1; k < values.size(); ++k) {
    if (values[k - 1] - values[k] <= kLevelTieTolerance * values[k - 1]) {
      out.back() = values[k];
    } else {
      out.push_back(values[k]);
    }
  }
  return out;
}

/// Per node, the weight of the heaviest incident edge not yet examined.
class MaxEdgePointer {
 public:
  explicit MaxEdgePointer(const Graph& g)
      : g_(&g), order_(g.num_nodes()), cursor_(g.num_nodes(), 0),
        examined_(g.num_edges(), 0) {
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
      auto nb = g.neighbors(v);
      order_[v].assign(nb.begin(), nb.end());
      std::stable_sort(order_[v].begin(), order_[v].end(),
                       [](const Neighbor& a, const Neighbor& b) { return a.weight > b.weight; });
    }
  }

  /// nullopt once every incident edge has been examined.
  std::optional<double> current(NodeId v) {
    auto& list = order_[v];
    std::size_t& c = cursor_[v];
    while (c < list.size() && examined_[list[c].edge]) ++c;
    if (c == list.size()) return std::nullopt;
    return list[c].weight;
  }

  /// Unexamined incident edges whose weight equals current(v).
  template <typename F>
  void for_each_max(NodeId v, F&& f) {
    const auto top = current(v);
    if (!top) return;
    const auto& list = order_[v];
    for (std::size_t k = cursor_[v]; k < list.size() && list[k].weight == *top; ++k) {
      if (!examined_[list[k].edge]) f(list[k]);
    }
  }

  void examine(EdgeId e) { examined_[e] = 1; }
  bool examined(EdgeId e) const { return examined_[e] != 0; }

 private:
  const Graph* g_;
  std::vector<std::vector<Neighbor>> order_;
  std::vector<std::size_t> cursor_;
  std::vector<char> examined_;
};

namespace detail {

// Incremental component tracking plus tree construction. Each level is a
// two-phase step: admit() the nodes entering at this level, then commit() the
// edges accepted at this level. Tree updates compare components before and
// after the whole step, so the order of edges within a level is irrelevant.
class LevelScanner {
 public:
  explicit LevelScanner(std::size_t n)
      : uf_(n), admitted_(n, 0), fresh_(n, 0),
        tree_of_root_(n, kNone), group_of_root_(n, kNone) {
    tree_.graph_size = n;
  }

  void admit(std::span<const NodeId> nodes) {
    for (NodeId v : nodes) {
      admitted_[v] = 1;
      fresh_[v] = 1;
      pending_.push_back(v);
    }
  }

  bool admitted(NodeId v) const { return admitted_[v] != 0; }
  bool fresh(NodeId v) const { return fresh_[v] != 0; }

  // Record the level unless `only_if_merged` and the count did not change.
  void commit(const Graph& g, double level, std::span<const EdgeId> edges,
              bool only_if_merged = false) {
    const std::size_t before = count_;
    std::vector<NodeId> involved(pending_.begin(), pending_.end());
    std::vector<std::pair<NodeId, std::size_t>> old_tree;  // node -> tree id
    for (EdgeId e : edges) {
      for (NodeId x : {g.edge(e).u, g.edge(e).v}) {
        if (!fresh_[x]) {
          old_tree.emplace_back(x, tree_of_root_[uf_.find(x)]);
          involved.push_back(x);
        }
      }
    }
    count_ += pending_.size();
    for (EdgeId e : edges) {
      if (uf_.unite(g.edge(e).u, g.edge(e).v)) --count_;
    }

    std::sort(involved.begin(), involved.end());
    involved.erase(std::unique(involved.begin(), involved.end()), involved.end());
    std::sort(old_tree.begin(), old_tree.end());
    struct Group {
      std::size_t root;
      std::vector<std::size_t> olds;
      std::vector<NodeId> fresh;
    };
    std::vector<Group> groups;
    auto old_it = old_tree.begin();
    for (NodeId x : involved) {
      const std::size_t r = uf_.find(x);
      if (group_of_root_[r] == kNone) {
        group_of_root_[r] = groups.size();
        groups.push_back({r, {}, {}});
      }
      Group& grp = groups[group_of_root_[r]];
      if (fresh_[x]) {
        grp.fresh.push_back(x);
      } else {
        while (old_it != old_tree.end() && old_it->first < x) ++old_it;
        grp.olds.push_back(old_it->second);
      }
    }
    for (auto& grp : groups) {
      group_of_root_[grp.root] = kNone;
      std::sort(grp.olds.begin(), grp.olds.end());
      grp.olds.erase(std::unique(grp.olds.begin(), grp.olds.end()), grp.olds.end());
      std::size_t id;
      if (grp.olds.size() == 1) {
        id = grp.olds.front();
        auto& m = tree_.nodes[id].members;
        m.insert(m.end(), grp.fresh.begin(), grp.fresh.end());
      } else {
        id = tree_.nodes.size();
        TreeNode t;
        t.id = id;
        t.birth_level = level;
        t.children = grp.olds;
        t.members = std::move(grp.fresh);
        for (std::size_t c : grp.olds) {
          tree_.nodes[c].merge_level = level;
          tree_.nodes[c].parent = id;
        }
        tree_.nodes.push_back(std::move(t));
      }
      tree_of_root_[grp.root] = id;
    }
    for (NodeId v : pending_) fresh_[v] = 0;
    pending_.clear();
    if (!only_if_merged || count_ != before) tree_.levels.push_back({level, count_});
  }

  ClusterTree take_tree() { return std::move(tree_); }

 private:
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  UnionFind uf_;
  std::vector<char> admitted_;
  std::vector<char> fresh_;
  std::vector<NodeId> pending_;
  std::vector<std::size_t> tree_of_root_;
  std::vector<std::size_t> group_of_root_;
  std::size_t count_ = 0;
  ClusterTree tree_;
};

// Node ids in descending density, sliced per level of `grid`.
inline std::vector<std::vector<NodeId>> nodes_by_level(const DensityVector& d,
                                                       const std::vector<double>& grid) {
  std::vector<NodeId> order(d.size());
  std::iota(order.begin(), order.end(), NodeId{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](NodeId a, NodeId b) { return d[a] > d[b]; });
  std::vector<std::vector<NodeId>> out(grid.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    while (k < order.size() && d[order[k]] >= grid[i]) out[i].push_back(order[k++]);
    std::sort(out[i].begin(), out[i].end());
  }
  return out;
}

inline void check_sizes(const Graph& g, const DensityVector& d) {
  if (d.size() != g.num_nodes()) {
    throw Error(ErrorCode::kInvalidArgument, "density vector length does not match graph");
  }
}

}  // namespace detail

/// Level-set scan ignoring weights: at each level every edge between admitted
/// nodes is admitted.
inline ClusterResult cluster_unweighted(const Graph& g, const DensityVector& d) {
  detail::check_sizes(g, d);
  const auto grid = level_grid(d);
  const auto by_level = detail::nodes_by_level(d, grid);
  detail::LevelScanner scan(g.num_nodes());
  std::vector<EdgeId> edges;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    scan.admit(by_level[i]);
    edges.clear();
    for (NodeId v : by_level[i]) {
      for (const auto& nb : g.neighbors(v)) {
        if (scan.admitted(nb.node) && (!scan.fresh(nb.node) || nb.node > v)) {
          edges.push_back(nb.edge);
        }
      }
    }
    scan.commit(g, grid[i], edges);
  }
  ClusterResult r{scan.take_tree(), {}};
  r.cores = extract_cores(r.tree);
  return r;
}

/// Level-set scan where an edge between admitted nodes enters only when it is
/// the heaviest unexamined edge of both endpoints (AND) or of at least one
/// (OR).
inline ClusterResult cluster_weighted(const Graph& g, const DensityVector& d,
                                      const WeightedOptions& opt = {}) {
  detail::check_sizes(g, d);
  const auto grid = level_grid(d);
  const auto by_level = detail::nodes_by_level(d, grid);
  const std::size_t n = g.num_nodes();
  detail::LevelScanner scan(n);
  MaxEdgePointer ptr(g);
  std::vector<NodeId> admitted_list;
  std::vector<std::size_t> candidate_stamp(n, 0), edge_stamp(g.num_edges(), 0);
  std::size_t stamp = 0;
  std::vector<EdgeId> level_edges, round_edges;
  std::vector<NodeId> candidates;

  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto& fresh = by_level[i];
    scan.admit(fresh);
    admitted_list.insert(admitted_list.end(), fresh.begin(), fresh.end());
    level_edges.clear();

    // Only nodes whose pointer or neighborhood changed can have a newly
    // qualifying edge; the single-pass variant rescans everything.
    ++stamp;
    candidates.clear();
    auto add_candidate = [&](NodeId v) {
      if (scan.admitted(v) && candidate_stamp[v] != stamp) {
        candidate_stamp[v] = stamp;
        candidates.push_back(v);
      }
    };
    if (opt.single_pass) {
      for (NodeId v : admitted_list) add_candidate(v);
    } else {
      for (NodeId v : fresh) {
        add_candidate(v);
        for (const auto& nb : g.neighbors(v)) add_candidate(nb.node);
      }
    }

    while (!candidates.empty()) {
      std::sort(candidates.begin(), candidates.end());
      ++stamp;
      round_edges.clear();
      for (NodeId v : candidates) {
        ptr.for_each_max(v, [&](const Neighbor& nb) {
          if (!scan.admitted(nb.node) || edge_stamp[nb.edge] == stamp) return;
          if (opt.combine == Combine::kAnd) {
            const auto other = ptr.current(nb.node);
            if (!other || *other != nb.weight) return;
          }
          edge_stamp[nb.edge] = stamp;
          round_edges.push_back(nb.edge);
        });
      }
      if (round_edges.empty()) break;
      candidates.clear();
      ++stamp;
      for (EdgeId e : round_edges) {
        ptr.examine(e);
        level_edges.push_back(e);
      }
      if (opt.single_pass) break;
      for (EdgeId e : round_edges) {
        add_candidate(g.edge(e).u);
        add_candidate(g.edge(e).v);
      }
    }
    scan.commit(g, grid[i], level_edges);
  }

  if (opt.final_pass) {
    level_edges.clear();
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      const auto& ed = g.edge(e);
      if (!ptr.examined(e) && scan.admitted(ed.u) && scan.admitted(ed.v)) {
        level_edges.push_back(e);
      }
    }
    scan.commit(g, 0.0, level_edges, /*only_if_merged=*/true);
  }
  ClusterResult r{scan.take_tree(), {}};
  r.cores = extract_cores(r.tree);
  return r;
}

/// How unallocated nodes pick among the clusters of their labelled neighbors.
enum class AllocationRule {
  /// Sum of connection weights into the cluster divided by the cluster size.
  kConnectionDensity,
  /// Highest density of the cluster's mode (its densest core member).
  kModeDensity,
};

constexpr std::string_view to_string(AllocationRule r) {
  return r == AllocationRule::kModeDensity ? "mode_density" : "connection_density";
}

struct AllocationOptions {
  AllocationRule rule = AllocationRule::kConnectionDensity;
  bool weighted = false;
  /// Nodes that no core can reach become singleton clusters.
  bool allocate_isolates = false;
};

/// Grows the cores outward in synchronous rounds: every unallocated node with
/// at least one labelled neighbor is assigned using the labels and cluster
/// sizes from the start of the round. Ties go to the larger cluster, then the
/// lower id. Core labels never change.
inline Partition allocate(const Graph& g, const DensityVector& d, const Partition& cores,
                          const AllocationOptions& opt = {}) {
  detail::check_sizes(g, d);
  if (cores.size() != g.num_nodes()) {
    throw Error(ErrorCode::kInvalidArgument, "partition length does not match graph");
  }
  if (cores.num_clusters == 0) {
    throw Error(ErrorCode::kInvalidArgument, "allocation needs at least one core");
  }
  const std::size_t n = g.num_nodes();
  Partition p = cores;
  auto sizes = p.cluster_sizes();
  std::vector<double> mode(p.num_clusters, 0.0);
  for (NodeId v = 0; v < n; ++v) {
    if (p.allocated(v)) {
      auto& m = mode[static_cast<std::size_t>(p.labels[v])];
      m = std::max(m, d[v]);
    }
  }

  std::vector<NodeId> frontier;
  std::vector<char> queued(n, 0);
  auto enqueue_neighbors = [&](NodeId v) {
    for (const auto& nb : g.neighbors(v)) {
      if (!p.allocated(nb.node) && !queued[nb.node]) {
        queued[nb.node] = 1;
        frontier.push_back(nb.node);
      }
    }
  };
  for (NodeId v = 0; v < n; ++v) {
    if (p.allocated(v)) enqueue_neighbors(v);
  }

  std::vector<double> score(p.num_clusters, 0.0);
  std::vector<ClusterId> touched;
  std::vector<std::pair<NodeId, ClusterId>> decided;
  while (!frontier.empty()) {
    std::sort(frontier.begin(), frontier.end());
    decided.clear();
    for (NodeId v : frontier) {
      touched.clear();
      for (const auto& nb : g.neighbors(v)) {
        const ClusterId c = p.labels[nb.node];
        if (c == kUnallocated) continue;
        auto& s = score[static_cast<std::size_t>(c)];
        if (s == 0.0) touched.push_back(c);
        if (opt.rule == AllocationRule::kModeDensity) {
          s = 1.0;
        } else {
          s += opt.weighted ? nb.weight : 1.0;
        }
      }
      ClusterId best = kUnallocated;
      double best_score = 0.0;
      for (ClusterId c : touched) {
        const auto ci = static_cast<std::size_t>(c);
        const double s = opt.rule == AllocationRule::kModeDensity
                             ? mode[ci]
                             : score[ci] / static_cast<double>(sizes[ci]);
        score[ci] = 0.0;
        const auto bi = static_cast<std::size_t>(best);
        if (best == kUnallocated || s > best_score ||
            (s == best_score && (sizes[ci] > sizes[bi] ||
                                 (sizes[ci] == sizes[bi] && c < best)))) {
          best = c;
          best_score = s;
        }
      }
      decided.emplace_back(v, best);
    }
    for (auto [v, c] : decided) {
      p.labels[v] = c;
      p.provenance[v] = Provenance::kAllocated;
      ++sizes[static_cast<std::size_t>(c)];
    }
    frontier.clear();
    for (auto [v, c] : decided) enqueue_neighbors(v);
  }

  if (opt.allocate_isolates) {
    for (NodeId v = 0; v < n; ++v) {
      if (!p.allocated(v)) {
        p.labels[v] = static_cast<ClusterId>(p.num_clusters++);
        p.provenance[v] = Provenance::kSingleton;
      }
    }
  }
  return p;
}

}  // namespace decode
