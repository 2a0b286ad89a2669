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


#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "decode.hpp"

namespace {

using decode::Error;
using decode::ErrorCode;
using nlohmann::ordered_json;

// Exit statuses.
constexpr int kExitParse = 1;
constexpr int kExitDegenerate = 2;
constexpr int kExitIo = 3;

int exit_code(const Error& e) {
  switch (e.code()) {
    case ErrorCode::kIo: return kExitIo;
    case ErrorCode::kDegenerateDensity: return kExitDegenerate;
    default: return kExitParse;
  }
}

std::string num(double x) { return decode::detail::format_double(x); }

// Writes `text` to `path`, or to stdout for "-".
void emit(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot write '" + path + "'");
  out << text;
  if (!out) throw Error(ErrorCode::kIo, "write failed for '" + path + "'");
}

struct DensityArgs {
  std::string input;
  std::string measure = "degree";
  bool weighted = false;
  bool normalize = false;
  unsigned threads = 1;
  std::string format = "csv";
  std::string output = "-";
};

struct ClusterArgs {
  std::string input;
  std::string measure = "degree";
  bool weighted = false;
  std::string combine;
  bool allocate = false;
  bool allocate_isolates = false;
  std::string rule = "connection";
  bool normalize = false;
  bool single_pass = false;
  bool no_final_pass = false;
  unsigned threads = 1;
  std::string tree_out;
  std::string membership_out;
  std::string dot_out;
  std::string format = "csv";
};

struct EvalArgs {
  std::string graph;
  bool weighted = false;
  std::string pred;
  std::string truth;
  std::string metric = "nmi";
  std::string policy = "exclude";
  std::string format = "csv";
};

struct StatsArgs {
  std::string input;
  bool weighted = false;
  std::string format = "csv";
};

struct OverlayArgs {
  std::vector<std::string> layers;
  bool weighted = false;
  bool normalize = false;
  std::string output = "-";
};

struct BenchArgs {
  std::vector<std::string> suites;
  std::string format = "csv";
};

void add_format(CLI::App* cmd, std::string& target) {
  cmd->add_option("--format", target, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
}

int cmd_density(const DensityArgs& a) {
  const auto g = decode::load_edge_list(a.input, a.weighted);
  auto d = decode::compute_density(g, decode::parse_measure(a.measure), a.weighted, a.threads);
  if (a.normalize) d = decode::normalize(d);
  std::ostringstream os;
  if (a.format == "json") {
    ordered_json j;
    j["measure"] = std::string(decode::to_string(d.measure));
    j["weighted"] = d.weighted;
    j["normalized"] = d.normalized;
    ordered_json values = ordered_json::object();
    for (decode::NodeId v = 0; v < g.num_nodes(); ++v) values[g.label(v)] = d[v];
    j["values"] = std::move(values);
    os << j.dump(2) << '\n';
  } else {
    os << "node,value\n";
    for (decode::NodeId v = 0; v < g.num_nodes(); ++v) {
      os << g.label(v) << ',' << num(d[v]) << '\n';
    }
  }
  emit(a.output, os.str());
  return 0;
}

int cmd_cluster(const ClusterArgs& a) {
  if (!a.combine.empty() && !a.weighted) {
    throw Error(ErrorCode::kInvalidArgument, "--combine requires --weighted");
  }
  if (a.tree_out.empty() && a.membership_out.empty() && a.dot_out.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "no output requested: pass --membership-out, --tree-out or --dot-out");
  }
  const auto g = decode::load_edge_list(a.input, a.weighted);

  decode::PipelineOptions opt;
  opt.measure = decode::parse_measure(a.measure);
  opt.weighted = a.weighted;
  if (!a.combine.empty()) opt.combine = decode::parse_combine(a.combine);
  opt.allocate = a.allocate;
  opt.allocate_isolates = a.allocate_isolates;
  opt.single_pass = a.single_pass;
  opt.final_pass = !a.no_final_pass;
  opt.rule = a.rule == "mode" ? decode::AllocationRule::kModeDensity
                              : decode::AllocationRule::kConnectionDensity;
  opt.threads = a.threads;

  opt.normalize = a.normalize;
  const auto r = decode::run_pipeline(g, opt);

  if (!a.membership_out.empty()) {
    std::ostringstream os;
    decode::write_membership_csv(os, g, r.partition);
    emit(a.membership_out, os.str());
  }
  if (!a.tree_out.empty()) emit(a.tree_out, decode::tree_to_json(r.tree));
  if (!a.dot_out.empty()) emit(a.dot_out, decode::tree_to_dot(r.tree, &g));

  // Summary goes to stderr when a file output already uses stdout.
  const bool stdout_taken =
      a.membership_out == "-" || a.tree_out == "-" || a.dot_out == "-";
  std::ostream& out = stdout_taken ? std::cerr : std::cout;
  const std::size_t clusters = r.partition.num_clusters;
  const std::size_t cores = r.cores.num_clusters;
  const std::size_t unallocated = r.partition.unallocated_count();
  if (a.format == "json") {
    ordered_json j;
    j["clusters"] = clusters;
    j["cores"] = cores;
    j["unallocated"] = unallocated;
    ordered_json levels = ordered_json::array();
    for (const auto& l : r.tree.levels) {
      levels.push_back(ordered_json{{"level", l.level}, {"components", l.components}});
    }
    j["levels"] = std::move(levels);
    out << j.dump(2) << '\n';
  } else {
    out << "clusters," << clusters << "\ncores," << cores << "\nunallocated," << unallocated
        << "\nlevel,components\n";
    for (const auto& l : r.tree.levels) out << num(l.level) << ',' << l.components << '\n';
  }
  return 0;
}

int cmd_eval(const EvalArgs& a) {
  const auto g = decode::load_edge_list(a.graph, a.weighted);
  const auto pred = decode::load_membership_csv(a.pred, g);
  std::ostringstream os;
  if (a.metric == "nmi") {
    const auto truth = decode::partition_from_labels(decode::load_node_labels(a.truth, g));
    const double v = decode::nmi(pred, truth, decode::parse_unallocated_policy(a.policy));
    if (a.format == "json") {
      os << ordered_json{{"metric", "nmi"}, {"value", v}}.dump() << '\n';
    } else {
      os << "metric,value\nnmi," << num(v) << '\n';
    }
  } else if (a.metric == "modularity") {
    const double v = decode::modularity(g, pred);
    if (a.format == "json") {
      os << ordered_json{{"metric", "modularity"}, {"value", v}}.dump() << '\n';
    } else {
      os << "metric,value\nmodularity," << num(v) << '\n';
    }
  } else {
    const auto attr = decode::load_node_labels(a.truth, g);
    const auto rep = decode::gini_homogeneity(pred, attr);
    for (auto c : rep.skipped_empty) {
      std::cerr << "warning: cluster " << c << " is empty and was skipped\n";
    }
    if (a.format == "json") {
      ordered_json arr = ordered_json::array();
      for (const auto& c : rep.clusters) {
        arr.push_back(ordered_json{{"cluster", c.cluster}, {"size", c.size}, {"value", c.value}});
      }
      os << ordered_json{{"metric", "homogeneity"}, {"clusters", arr}}.dump(2) << '\n';
    } else {
      os << "cluster,size,homogeneity\n";
      for (const auto& c : rep.clusters) {
        os << c.cluster << ',' << c.size << ',' << num(c.value) << '\n';
      }
    }
  }
  std::cout << os.str();
  return 0;
}

int cmd_stats(const StatsArgs& a) {
  const auto g = decode::load_edge_list(a.input, a.weighted);
  ordered_json j;
  j["nodes"] = g.num_nodes();
  j["edges"] = g.num_edges();
  j["total_weight"] = g.total_weight();
  auto guarded = [&](const char* key, auto f) {
    try {
      j[key] = f();
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kUndefined) throw;
      j[key] = nullptr;
    }
  };
  guarded("density", [&] { return decode::graph_density(g); });
  guarded("transitivity", [&] { return decode::global_transitivity(g); });
  guarded("degree_centralization", [&] { return decode::degree_centralization(g); });
  j["isolated"] = decode::isolated_count(g);
  j["components"] = decode::component_count(g);
  if (a.format == "json") {
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "statistic,value\n";
    for (const auto& [k, v] : j.items()) {
      std::cout << k << ',';
      if (v.is_null()) {
        std::cout << "NA";
      } else if (v.is_number_float()) {
        std::cout << num(v.get<double>());
      } else {
        std::cout << v.dump();
      }
      std::cout << '\n';
    }
  }
  return 0;
}

int cmd_overlay(const OverlayArgs& a) {
  decode::LayerStack stack;
  for (const auto& path : a.layers) stack.add(path, decode::load_edge_list(path, a.weighted));
  emit(a.output, decode::to_edge_list(decode::overlay(stack, a.normalize)));
  return 0;
}

int cmd_bench(const BenchArgs& a) {
  std::vector<std::string> suites = a.suites;
  if (suites.empty() || (suites.size() == 1 && suites[0] == "all")) {
    suites = {"karate", "lesmis", "polbooks", "football", "email"};
  }
  std::vector<decode::BenchOutcome> rows;
  for (const auto& s : suites) {
    bool known = false;
    for (const auto& c : decode::bench_cases()) {
      if (c.dataset != s) continue;
      known = true;
      auto ds = decode::load_dataset(c.dataset, c.weighted);
      if (!ds) {
        decode::BenchOutcome skipped{c};
        skipped.skipped = true;
        rows.push_back(skipped);
        continue;
      }
      rows.push_back(decode::run_bench_case(c, *ds));
    }
    if (!known) throw Error(ErrorCode::kInvalidArgument, "unknown suite '" + s + "'");
  }

  bool failed = false;
  std::set<std::string> warned;
  for (const auto& r : rows) {
    if (r.skipped && warned.insert(r.bench.dataset).second) {
      std::cerr << "warning: dataset '" << r.bench.dataset << "' not found under "
                << decode::data_dir().string() << "; skipping (see tools/fetch_datasets.py)\n";
    }
    failed |= !r.passed();
  }
  auto option = [](const decode::BenchCase& c) {
    return c.weighted ? std::string(decode::to_string(c.combine)) : std::string("binary");
  };
  auto status = [](const decode::BenchOutcome& r) {
    if (r.skipped) return "skip";
    if (!r.checked()) return "info";
    return r.passed() ? "pass" : "fail";
  };
  if (a.format == "json") {
    ordered_json arr = ordered_json::array();
    for (const auto& r : rows) {
      ordered_json o;
      o["dataset"] = r.bench.dataset;
      o["option"] = option(r.bench);
      o["measure"] = std::string(decode::to_string(r.bench.measure));
      o["reference"] = r.bench.reference;
      o["tolerance"] = r.bench.tolerance ? ordered_json(*r.bench.tolerance) : ordered_json();
      o["nmi"] = r.skipped ? ordered_json() : ordered_json(r.nmi);
      o["clusters"] = r.clusters;
      o["status"] = status(r);
      arr.push_back(std::move(o));
    }
    std::cout << arr.dump(2) << '\n';
  } else {
    std::cout << "dataset,option,measure,nmi,reference,tolerance,clusters,status\n";
    for (const auto& r : rows) {
      std::cout << r.bench.dataset << ',' << option(r.bench) << ','
                << decode::to_string(r.bench.measure) << ','
                << (r.skipped ? std::string("NA") : num(r.nmi)) << ',' << num(r.bench.reference)
                << ',' << (r.bench.tolerance ? num(*r.bench.tolerance) : std::string("NA"))
                << ',' << r.clusters << ',' << status(r) << '\n';
    }
  }
  return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Modal (density-based) community detection on networks"};
  app.require_subcommand(1);

  DensityArgs da;
  auto* density = app.add_subcommand("density", "Node-wise density as CSV node,value");
  density->add_option("input", da.input, "Edge list")->required();
  density->add_option("--measure", da.measure, "degree | local_density | betweenness")
      ->capture_default_str();
  density->add_flag("--weighted", da.weighted, "Read and use edge weights");
  density->add_flag("--normalize", da.normalize, "Rescale values to unit sum");
  density->add_option("--threads", da.threads, "Worker threads for betweenness")
      ->check(CLI::PositiveNumber);
  density->add_option("-o,--output", da.output, "Output path, '-' for stdout");
  add_format(density, da.format);

  ClusterArgs ca;
  auto* cluster = app.add_subcommand("cluster", "Level-set scan, cores and allocation");
  cluster->add_option("input", ca.input, "Edge list")->required();
  cluster->add_option("--measure", ca.measure, "degree | local_density | betweenness")
      ->capture_default_str();
  cluster->add_flag("--weighted", ca.weighted, "Weighted scan with AND/OR edge admission");
  cluster->add_option("--combine", ca.combine, "Edge admission for --weighted: and | or")
      ->check(CLI::IsMember({"and", "or"}));
  cluster->add_flag("--allocate", ca.allocate, "Assign non-core nodes to clusters");
  cluster->add_flag("--allocate-isolates", ca.allocate_isolates,
                    "Make nodes no core reaches singleton clusters");
  cluster->add_option("--rule", ca.rule, "Allocation rule: connection | mode")
      ->check(CLI::IsMember({"connection", "mode"}))
      ->capture_default_str();
  cluster->add_flag("--normalize", ca.normalize, "Record levels on the normalized density");
  cluster->add_flag("--single-pass-compat", ca.single_pass,
                    "One edge-admission round per level");
  cluster->add_flag("--no-final-pass", ca.no_final_pass,
                    "Stop the weighted tree at the last density level");
  cluster->add_option("--threads", ca.threads, "Worker threads for betweenness")
      ->check(CLI::PositiveNumber);
  cluster->add_option("--tree-out", ca.tree_out, "Cluster tree JSON path");
  cluster->add_option("--membership-out", ca.membership_out, "Membership CSV path");
  cluster->add_option("--dot-out", ca.dot_out, "Cluster tree Graphviz path");
  add_format(cluster, ca.format);

  EvalArgs ea;
  auto* eval = app.add_subcommand("eval", "Score a membership file");
  eval->add_option("--graph", ea.graph, "Edge list the membership refers to")->required();
  eval->add_flag("--weighted", ea.weighted, "Use edge weights (modularity)");
  eval->add_option("--pred", ea.pred, "Membership CSV")->required();
  eval->add_option("--truth", ea.truth, "node,label CSV (nmi, homogeneity)");
  eval->add_option("--metric", ea.metric, "nmi | modularity | homogeneity")
      ->check(CLI::IsMember({"nmi", "modularity", "homogeneity"}))
      ->capture_default_str();
  eval->add_option("--policy", ea.policy, "Unallocated nodes in nmi: exclude | own_cluster")
      ->check(CLI::IsMember({"exclude", "own_cluster"}))
      ->capture_default_str();
  add_format(eval, ea.format);

  StatsArgs sa;
  auto* stats = app.add_subcommand("stats", "Descriptive statistics");
  stats->add_option("input", sa.input, "Edge list")->required();
  stats->add_flag("--weighted", sa.weighted, "Read edge weights");
  add_format(stats, sa.format);

  OverlayArgs oa;
  auto* overlay = app.add_subcommand("overlay", "Sum layers into one weighted network");
  overlay->add_option("layers", oa.layers, "Layer edge lists")->required();
  overlay->add_flag("--weighted", oa.weighted, "Layer files carry weights");
  overlay->add_flag("--normalize", oa.normalize, "Divide each layer by its total weight");
  overlay->add_option("-o,--output", oa.output, "Output path, '-' for stdout");

  BenchArgs ba;
  auto* bench = app.add_subcommand("bench", "NMI against published reference values");
  bench->add_option("suites", ba.suites, "karate lesmis polbooks football email | all");
  add_format(bench, ba.format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    if (*density) return cmd_density(da);
    if (*cluster) return cmd_cluster(ca);
    if (*eval) {
      if (ea.metric != "modularity" && ea.truth.empty()) {
        throw Error(ErrorCode::kInvalidArgument, "--truth is required for " + ea.metric);
      }
      return cmd_eval(ea);
    }
    if (*stats) return cmd_stats(sa);
    if (*overlay) return cmd_overlay(oa);
    if (*bench) return cmd_bench(ba);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  }
  return kExitParse;
}
