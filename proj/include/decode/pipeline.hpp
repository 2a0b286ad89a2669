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

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "decode/cluster_tree.hpp"
#include "decode/density.hpp"
#include "decode/evaluation.hpp"
#include "decode/graph.hpp"
#include "decode/io.hpp"
#include "decode/modal_clustering.hpp"
#include "decode/partition.hpp"

#ifndef DECODE_DEFAULT_DATA_DIR
#define DECODE_DEFAULT_DATA_DIR "data"
#endif

namespace decode {

/// Everything that determines one clustering run.
struct PipelineOptions {
  Measure measure = Measure::kDegree;
  bool weighted = false;
  Combine combine = Combine::kOr;
  bool allocate = true;
  bool allocate_isolates = false;
  bool single_pass = false;
  bool final_pass = true;
  AllocationRule rule = AllocationRule::kConnectionDensity;
  /// Scan the unit-sum density. Clusters are unchanged; levels are rescaled.
  bool normalize = false;
  unsigned threads = 1;
};

struct PipelineResult {
  DensityVector density;
  ClusterTree tree;
  Partition cores;
  Partition partition;
};

/// density -> level-set scan -> optional allocation. Unweighted runs ignore
/// edge weights throughout.
inline PipelineResult run_pipeline(const Graph& g, const PipelineOptions& opt) {
  PipelineResult r;
  r.density = compute_density(g, opt.measure, opt.weighted, opt.threads);
  if (opt.normalize) r.density = decode::normalize(std::move(r.density));
  ClusterResult c =
      opt.weighted
          ? cluster_weighted(g, r.density, {opt.combine, opt.single_pass, opt.final_pass})
          : cluster_unweighted(g, r.density);
  r.tree = std::move(c.tree);
  r.cores = std::move(c.cores);
  if (opt.allocate) {
    r.partition = decode::allocate(g, r.density, r.cores,
                                   {opt.rule, opt.weighted, opt.allocate_isolates});
  } else {
    r.partition = r.cores;
    if (opt.allocate_isolates) {
      for (NodeId v = 0; v < g.num_nodes(); ++v) {
        if (!r.partition.allocated(v)) {
          r.partition.labels[v] = static_cast<ClusterId>(r.partition.num_clusters++);
          r.partition.provenance[v] = Provenance::kSingleton;
        }
      }
    }
  }
  return r;
}

/// Dataset directory: $DECODE_DATA_DIR if set, else the build-time default.
inline std::filesystem::path data_dir() {
  if (const char* env = std::getenv("DECODE_DATA_DIR"); env && *env) return env;
  return DECODE_DEFAULT_DATA_DIR;
}

/// One published NMI value. Entries with a tolerance are checked; the rest
/// are reported alongside for comparison.
struct BenchCase {
  std::string dataset;
  bool weighted = false;
  Combine combine = Combine::kOr;
  Measure measure = Measure::kDegree;
  double reference = 0.0;
  std::optional<double> tolerance;
};

inline const std::vector<BenchCase>& bench_cases() {
  using M = Measure;
  using C = Combine;
  static const std::vector<BenchCase> cases = {
      {"karate", false, C::kOr, M::kDegree, 1.00, 0.02},
      {"karate", false, C::kOr, M::kLocalDensity, 0.36, std::nullopt},
      {"karate", false, C::kOr, M::kBetweenness, 1.00, 0.02},
      {"karate", true, C::kOr, M::kDegree, 1.00, 0.02},
      {"karate", true, C::kOr, M::kLocalDensity, 0.44, std::nullopt},
      {"karate", true, C::kOr, M::kBetweenness, 0.85, 0.10},
      {"karate", true, C::kAnd, M::kDegree, 0.61, 0.10},
      {"karate", true, C::kAnd, M::kLocalDensity, 0.36, std::nullopt},
      {"karate", true, C::kAnd, M::kBetweenness, 0.42, std::nullopt},
      {"lesmis", false, C::kOr, M::kDegree, 0.00, std::nullopt},
      {"lesmis", false, C::kOr, M::kLocalDensity, 0.76, std::nullopt},
      {"lesmis", false, C::kOr, M::kBetweenness, 0.00, std::nullopt},
      {"lesmis", true, C::kOr, M::kDegree, 0.48, std::nullopt},
      {"lesmis", true, C::kOr, M::kLocalDensity, 0.43, std::nullopt},
      {"lesmis", true, C::kOr, M::kBetweenness, 0.61, std::nullopt},
      {"lesmis", true, C::kAnd, M::kDegree, 0.76, std::nullopt},
      {"lesmis", true, C::kAnd, M::kLocalDensity, 0.78, std::nullopt},
      {"lesmis", true, C::kAnd, M::kBetweenness, 0.78, std::nullopt},
      {"polbooks", false, C::kOr, M::kDegree, 0.60, 0.05},
      {"polbooks", false, C::kOr, M::kLocalDensity, 0.31, 0.05},
      {"polbooks", false, C::kOr, M::kBetweenness, 0.07, 0.05},
      {"email", false, C::kOr, M::kDegree, 0.26, std::nullopt},
      {"email", false, C::kOr, M::kLocalDensity, 0.58, 0.05},
      {"email", false, C::kOr, M::kBetweenness, 0.26, std::nullopt},
      {"football", false, C::kOr, M::kDegree, 0.33, 0.05},
      {"football", false, C::kOr, M::kLocalDensity, 0.55, 0.05},
      {"football", false, C::kOr, M::kBetweenness, 0.13, 0.05},
  };
  return cases;
}

/// A benchmark network with its ground truth aligned to the graph's ids.
struct Dataset {
  std::string name;
  Graph graph;
  Partition truth;
};

/// Loads `<name>.tsv` (binary) or `<name>_weighted.tsv`, falling back to the
/// binarized weighted file, plus `<name>_labels.csv`. Returns nullopt when
/// the files are absent.
inline std::optional<Dataset> load_dataset(const std::string& name, bool weighted,
                                           const std::filesystem::path& dir = data_dir()) {
  namespace fs = std::filesystem;
  const fs::path plain = dir / (name + ".tsv");
  const fs::path heavy = dir / (name + "_weighted.tsv");
  const fs::path labels = dir / (name + "_labels.csv");
  if (!fs::exists(labels)) return std::nullopt;
  Dataset ds{name, {}, {}};
  if (weighted) {
    if (!fs::exists(heavy)) return std::nullopt;
    ds.graph = load_edge_list(heavy.string(), true);
  } else if (fs::exists(plain)) {
    ds.graph = load_edge_list(plain.string(), false);
  } else if (fs::exists(heavy)) {
    ds.graph = load_edge_list(heavy.string(), true).binarized();
  } else {
    return std::nullopt;
  }
  ds.truth = partition_from_labels(load_node_labels(labels.string(), ds.graph));
  return ds;
}

struct BenchOutcome {
  BenchCase bench;
  bool skipped = false;
  double nmi = 0.0;
  std::size_t clusters = 0;
  std::size_t unallocated = 0;
  double seconds = 0.0;

  bool checked() const { return !skipped && bench.tolerance.has_value(); }
  bool passed() const {
    return !checked() || std::abs(nmi - bench.reference) <= *bench.tolerance;
  }
};

inline PipelineOptions bench_options(const BenchCase& c) {
  PipelineOptions o;
  o.measure = c.measure;
  o.weighted = c.weighted;
  o.combine = c.combine;
  return o;
}

inline BenchOutcome run_bench_case(const BenchCase& c, const Dataset& ds) {
  BenchOutcome out{c};
  const auto t0 = std::chrono::steady_clock::now();
  const auto r = run_pipeline(ds.graph, bench_options(c));
  out.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  out.nmi = nmi(r.partition, ds.truth, UnallocatedPolicy::kExclude);
  out.clusters = r.partition.num_clusters;
  out.unallocated = r.partition.unallocated_count();
  return out;
}

}  // namespace decode
