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

// Text formats: whitespace/comma separated edge lists, `node,label` CSV
// files, and `node,cluster,provenance` membership files.

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <unordered_map>
#include <utility>
#include <vector>

#include "decode/error.hpp"
#include "decode/graph.hpp"
#include "decode/partition.hpp"

namespace decode {

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

inline std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  auto is_sep = [](char c) {
    return c == ' ' || c == '\t' || c == ',' || c == '\r';
  };
  while (i < line.size()) {
    while (i < line.size() && is_sep(line[i])) ++i;
    const std::size_t start = i;
    while (i < line.size() && !is_sep(line[i])) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

inline std::vector<std::string_view> split_csv(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    out.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

inline bool parse_double(std::string_view s, double& out) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, out);
  return ec == std::errc() && ptr == end;
}

inline std::string format_double(double x) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

inline bool is_comment(std::string_view line) {
  line = trim(line);
  return line.empty() || line.front() == '#' || line.front() == '%';
}

inline std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path + "'");
  return in;
}

}  // namespace detail

/// Parses `src dst [weight]` lines. Node tokens are treated as names and get
/// ids in order of first appearance. Blank lines and lines starting with '#'
/// or '%' are skipped. With `weighted` unset a weight column is validated but
/// every edge gets weight 1.
inline Graph parse_edge_list(std::istream& in, bool weighted,
                             std::string_view source = "<input>") {
  std::unordered_map<std::string, NodeId> ids;
  std::vector<std::string> names;
  std::vector<Edge> edges;
  std::set<std::pair<NodeId, NodeId>> seen;
  std::string line;
  std::size_t lineno = 0;
  auto where = [&] {
    return std::string(source) + ":" + std::to_string(lineno) + ": ";
  };
  auto intern = [&](std::string_view token) {
    auto [it, inserted] = ids.emplace(std::string(token), names.size());
    if (inserted) names.emplace_back(token);
    return it->second;
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (detail::is_comment(line)) continue;
    const auto tokens = detail::split_tokens(line);
    if (tokens.size() < 2 || tokens.size() > 3) {
      throw Error(ErrorCode::kMalformedLine,
                  where() + "expected 'src dst [weight]', got " +
                      std::to_string(tokens.size()) + " fields");
    }
    double w = 1.0;
    if (tokens.size() == 3) {
      if (!detail::parse_double(tokens[2], w)) {
        throw Error(ErrorCode::kMalformedLine,
                    where() + "bad weight '" + std::string(tokens[2]) + "'");
      }
      if (w < 0.0) {
        throw Error(ErrorCode::kNegativeWeight,
                    where() + "negative weight " + std::string(tokens[2]));
      }
      if (w == 0.0) {
        throw Error(ErrorCode::kZeroWeight, where() + "zero weight");
      }
      if (!weighted) w = 1.0;
    } else if (weighted) {
      throw Error(ErrorCode::kMissingWeight, where() + "missing weight column");
    }
    if (tokens[0] == tokens[1]) {
      throw Error(ErrorCode::kSelfLoop,
                  where() + "self-loop on '" + std::string(tokens[0]) + "'");
    }
    NodeId a = intern(tokens[0]);
    NodeId b = intern(tokens[1]);
    if (!seen.emplace(std::min(a, b), std::max(a, b)).second) {
      throw Error(ErrorCode::kDuplicateEdge,
                  where() + "duplicate edge " + std::string(tokens[0]) + " " +
                      std::string(tokens[1]));
    }
    edges.push_back({a, b, w});
  }
  if (edges.empty()) {
    throw Error(ErrorCode::kEmptyGraph, std::string(source) + ": no edges");
  }
  const std::size_t n = names.size();
  return Graph::from_edges(n, std::move(edges), std::move(names));
}

inline Graph load_edge_list(const std::string& path, bool weighted) {
  auto in = detail::open_input(path);
  return parse_edge_list(in, weighted, path);
}

/// Canonical text form: endpoints of every edge ordered by label, lines
/// sorted, weight column present unless the graph is binary. Reading this
/// output back and writing it again reproduces it byte for byte.
inline void write_edge_list(std::ostream& out, const Graph& g) {
  std::vector<std::string> lines;
  lines.reserve(g.num_edges());
  for (const auto& e : g.edges()) {
    auto a = g.label(e.u);
    auto b = g.label(e.v);
    if (b < a) std::swap(a, b);
    std::string line = a + "\t" + b;
    if (!g.is_binary()) line += "\t" + detail::format_double(e.weight);
    lines.push_back(std::move(line));
  }
  std::sort(lines.begin(), lines.end());
  for (const auto& l : lines) out << l << '\n';
}

inline std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  write_edge_list(os, g);
  return os.str();
}

/// Resolves a node token against `g`: by name when the graph is named,
/// otherwise as a decimal id.
inline NodeId resolve_node(const Graph& g, std::string_view token) {
  if (g.has_names()) {
    if (auto v = g.find(token)) return *v;
  } else {
    NodeId v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec == std::errc() && ptr == token.data() + token.size() &&
        v < g.num_nodes()) {
      return v;
    }
  }
  throw Error(ErrorCode::kInvalidNode, "unknown node '" + std::string(token) + "'");
}

/// Per-node categorical attribute; empty string where the file has no row.
inline std::vector<std::string> parse_node_labels(std::istream& in,
                                                  const Graph& g,
                                                  std::string_view source = "<labels>") {
  std::vector<std::string> labels(g.num_nodes());
  std::vector<bool> seen(g.num_nodes(), false);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (detail::is_comment(line)) continue;
    const auto fields = detail::split_csv(line);
    if (lineno == 1 && fields.size() >= 2 && fields[0] == "node") continue;
    if (fields.size() != 2 || fields[1].empty()) {
      throw Error(ErrorCode::kMalformedLine,
                  std::string(source) + ":" + std::to_string(lineno) +
                      ": expected 'node,label'");
    }
    const NodeId v = resolve_node(g, fields[0]);
    if (seen[v]) {
      throw Error(ErrorCode::kMalformedLine,
                  std::string(source) + ":" + std::to_string(lineno) +
                      ": node listed twice");
    }
    seen[v] = true;
    labels[v] = std::string(fields[1]);
  }
  return labels;
}

inline std::vector<std::string> load_node_labels(const std::string& path,
                                                 const Graph& g) {
  auto in = detail::open_input(path);
  return parse_node_labels(in, g, path);
}

/// Ground-truth partition from categorical labels; empty labels stay
/// unallocated. Clusters are numbered in order of first appearance.
inline Partition partition_from_labels(const std::vector<std::string>& labels) {
  std::unordered_map<std::string, ClusterId> ids;
  std::vector<ClusterId> raw(labels.size(), kUnallocated);
  for (std::size_t v = 0; v < labels.size(); ++v) {
    if (labels[v].empty()) continue;
    raw[v] = ids.emplace(labels[v], static_cast<ClusterId>(ids.size())).first->second;
  }
  return Partition::from_labels(raw);
}

inline void write_membership_csv(std::ostream& out, const Graph& g,
                                 const Partition& p) {
  out << "node,cluster,provenance\n";
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    out << g.label(v) << ',';
    if (p.labels[v] == kUnallocated) {
      out << "NA";
    } else {
      out << p.labels[v];
    }
    out << ',' << to_string(p.provenance[v]) << '\n';
  }
}

inline Provenance parse_provenance(std::string_view s) {
  for (auto p : {Provenance::kCore, Provenance::kAllocated,
                 Provenance::kSingleton, Provenance::kUnallocated}) {
    if (s == to_string(p)) return p;
  }
  throw Error(ErrorCode::kMalformedLine, "unknown provenance '" + std::string(s) + "'");
}

/// Reads a membership file produced by write_membership_csv. Cluster ids are
/// kept as written (they are dense in files this library writes); nodes
/// missing from the file are unallocated.
inline Partition parse_membership_csv(std::istream& in, const Graph& g,
                                      std::string_view source = "<membership>") {
  std::vector<ClusterId> raw(g.num_nodes(), kUnallocated);
  std::vector<Provenance> prov(g.num_nodes(), Provenance::kUnallocated);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (detail::is_comment(line)) continue;
    const auto fields = detail::split_csv(line);
    if (lineno == 1 && !fields.empty() && fields[0] == "node") continue;
    if (fields.size() < 2 || fields.size() > 3) {
      throw Error(ErrorCode::kMalformedLine,
                  std::string(source) + ":" + std::to_string(lineno) +
                      ": expected 'node,cluster[,provenance]'");
    }
    const NodeId v = resolve_node(g, fields[0]);
    if (fields[1] != "NA") {
      ClusterId c = 0;
      auto [ptr, ec] = std::from_chars(fields[1].data(),
                                       fields[1].data() + fields[1].size(), c);
      if (ec != std::errc() || ptr != fields[1].data() + fields[1].size() || c < 0) {
        throw Error(ErrorCode::kMalformedLine,
                    std::string(source) + ":" + std::to_string(lineno) +
                        ": bad cluster id '" + std::string(fields[1]) + "'");
      }
      raw[v] = c;
      prov[v] = Provenance::kCore;
    }
    if (fields.size() == 3) prov[v] = parse_provenance(fields[2]);
  }
  ClusterId max_id = -1;
  for (auto c : raw) max_id = std::max(max_id, c);
  Partition p(g.num_nodes());
  p.labels = std::move(raw);
  p.provenance = std::move(prov);
  p.num_clusters = static_cast<std::size_t>(max_id + 1);
  return p;
}

inline Partition load_membership_csv(const std::string& path, const Graph& g) {
  auto in = detail::open_input(path);
  return parse_membership_csv(in, g, path);
}

}  // namespace decode
