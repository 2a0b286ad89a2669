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
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "decode/error.hpp"
#include "decode/graph.hpp"
#include "decode/io.hpp"
#include "decode/partition.hpp"

namespace decode {

enum class TreeNodeKind { kLeaf, kInternal, kRoot };

constexpr std::string_view to_string(TreeNodeKind k) {
  switch (k) {
    case TreeNodeKind::kLeaf: return "leaf";
    case TreeNodeKind::kInternal: return "internal";
    case TreeNodeKind::kRoot: return "root";
  }
  return "leaf";
}

/// One component of the level-set hierarchy. `members` are the graph nodes
/// absorbed while this component existed on its own, i.e. between its birth
/// and its merge into `parent`.
struct TreeNode {
  std::size_t id = 0;
  double birth_level = 0.0;
  std::optional<double> merge_level;
  std::optional<std::size_t> parent;
  std::vector<std::size_t> children;
  std::vector<NodeId> members;

  /// A childless node is a leaf even when it never merges.
  TreeNodeKind kind() const {
    if (children.empty()) return TreeNodeKind::kLeaf;
    return parent ? TreeNodeKind::kInternal : TreeNodeKind::kRoot;
  }

  friend bool operator==(const TreeNode&, const TreeNode&) = default;
};

/// Number of connected components right after scanning `level`.
struct LevelRecord {
  double level = 0.0;
  std::size_t components = 0;

  friend bool operator==(const LevelRecord&, const LevelRecord&) = default;
};

/// Cluster tree over descending density levels. Tree node ids follow creation
/// order, so children always precede their parent.
struct ClusterTree {
  std::size_t graph_size = 0;
  std::vector<TreeNode> nodes;
  std::vector<LevelRecord> levels;

  std::vector<std::size_t> leaves() const {
    std::vector<std::size_t> out;
    for (const auto& t : nodes) {
      if (t.children.empty()) out.push_back(t.id);
    }
    return out;
  }

  std::vector<std::size_t> roots() const {
    std::vector<std::size_t> out;
    for (const auto& t : nodes) {
      if (!t.parent) out.push_back(t.id);
    }
    return out;
  }

  /// Components alive at `level`: born at or above it and not yet merged.
  std::size_t components_at(double level) const {
    std::size_t c = 0;
    for (const auto& t : nodes) {
      if (t.birth_level >= level && (!t.merge_level || *t.merge_level < level)) ++c;
    }
    return c;
  }

  /// Every graph node in the subtree rooted at `id`, sorted.
  std::vector<NodeId> subtree_members(std::size_t id) const {
    std::vector<NodeId> out;
    std::vector<std::size_t> stack{id};
    while (!stack.empty()) {
      const auto& t = nodes.at(stack.back());
      stack.pop_back();
      out.insert(out.end(), t.members.begin(), t.members.end());
      stack.insert(stack.end(), t.children.begin(), t.children.end());
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Throws kInvalidTree on the first violated structural invariant.
  void validate() const {
    auto fail = [](const std::string& msg) { throw Error(ErrorCode::kInvalidTree, msg); };
    std::vector<char> seen(graph_size, 0);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const auto& t = nodes[i];
      if (t.id != i) fail("node ids must equal their position");
      if (t.parent.has_value() != t.merge_level.has_value()) {
        fail("node " + std::to_string(i) + " has parent xor merge_level");
      }
      if (t.parent) {
        if (*t.parent >= nodes.size() || *t.parent <= i) {
          fail("node " + std::to_string(i) + " has an invalid parent");
        }
        if (t.birth_level < *t.merge_level) {
          fail("node " + std::to_string(i) + " merges above its birth level");
        }
        const auto& p = nodes[*t.parent];
        if (std::find(p.children.begin(), p.children.end(), i) == p.children.end()) {
          fail("parent of node " + std::to_string(i) + " does not list it");
        }
        if (p.birth_level != *t.merge_level) {
          fail("node " + std::to_string(i) + " merge level differs from parent birth");
        }
      }
      for (std::size_t c : t.children) {
        if (c >= nodes.size() || nodes[c].parent != i) {
          fail("child link of node " + std::to_string(i) + " is inconsistent");
        }
      }
      if (!t.children.empty() && t.children.size() < 2) {
        fail("internal node " + std::to_string(i) + " has a single child");
      }
      for (NodeId v : t.members) {
        if (v >= graph_size) fail("member out of range");
        if (seen[v]) fail("node " + std::to_string(v) + " belongs to two tree nodes");
        seen[v] = 1;
      }
    }
    for (const auto& r : levels) {
      if (components_at(r.level) != r.components) {
        fail("component count at level " + detail::format_double(r.level) +
             " is not reproducible from the tree");
      }
    }
  }

  friend bool operator==(const ClusterTree&, const ClusterTree&) = default;
};

/// Cores are the leaf member sets, numbered by leaf order. Everything else is
/// left unallocated.
inline Partition extract_cores(const ClusterTree& t) {
  Partition p(t.graph_size);
  ClusterId next = 0;
  for (std::size_t id : t.leaves()) {
    for (NodeId v : t.nodes[id].members) {
      p.labels[v] = next;
      p.provenance[v] = Provenance::kCore;
    }
    ++next;
  }
  p.num_clusters = static_cast<std::size_t>(next);
  return p;
}

inline nlohmann::ordered_json tree_to_json_value(const ClusterTree& t) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["graph_size"] = t.graph_size;
  ordered_json levels = ordered_json::array();
  for (const auto& r : t.levels) {
    levels.push_back(ordered_json{{"level", r.level}, {"components", r.components}});
  }
  j["levels"] = std::move(levels);
  ordered_json nodes = ordered_json::array();
  for (const auto& n : t.nodes) {
    ordered_json o;
    o["id"] = n.id;
    o["kind"] = std::string(to_string(n.kind()));
    o["birth_level"] = n.birth_level;
    o["merge_level"] = n.merge_level ? ordered_json(*n.merge_level) : ordered_json(nullptr);
    o["parent"] = n.parent ? ordered_json(*n.parent) : ordered_json(nullptr);
    o["children"] = n.children;
    o["members"] = n.members;
    nodes.push_back(std::move(o));
  }
  j["nodes"] = std::move(nodes);
  return j;
}

inline std::string tree_to_json(const ClusterTree& t, int indent = 2) {
  return tree_to_json_value(t).dump(indent) + "\n";
}

/// Inverse of tree_to_json. The stored `kind` must agree with the structure.
inline ClusterTree tree_from_json(std::string_view text) {
  ClusterTree t;
  try {
    const auto j = nlohmann::json::parse(text);
    t.graph_size = j.at("graph_size").get<std::size_t>();
    for (const auto& r : j.at("levels")) {
      t.levels.push_back({r.at("level").get<double>(), r.at("components").get<std::size_t>()});
    }
    for (const auto& o : j.at("nodes")) {
      TreeNode n;
      n.id = o.at("id").get<std::size_t>();
      n.birth_level = o.at("birth_level").get<double>();
      if (!o.at("merge_level").is_null()) n.merge_level = o["merge_level"].get<double>();
      if (!o.at("parent").is_null()) n.parent = o["parent"].get<std::size_t>();
      n.children = o.at("children").get<std::vector<std::size_t>>();
      n.members = o.at("members").get<std::vector<NodeId>>();
      if (o.at("kind").get<std::string>() != to_string(n.kind())) {
        throw Error(ErrorCode::kInvalidTree,
                    "kind of node " + std::to_string(n.id) + " contradicts its links");
      }
      t.nodes.push_back(std::move(n));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kInvalidTree, e.what());
  }
  t.validate();
  return t;
}

/// Graphviz rendering: one box per tree node labelled with its levels and
/// member names, edges child -> parent.
inline std::string tree_to_dot(const ClusterTree& t, const Graph* g = nullptr) {
  std::ostringstream os;
  os << "digraph cluster_tree {\n  rankdir=BT;\n  node [shape=box];\n";
  for (const auto& n : t.nodes) {
    os << "  t" << n.id << " [label=\"" << to_string(n.kind()) << ' ' << n.id
       << "\\nbirth " << detail::format_double(n.birth_level);
    if (n.merge_level) os << "  merge " << detail::format_double(*n.merge_level);
    os << "\\n";
    for (std::size_t k = 0; k < n.members.size(); ++k) {
      if (k) os << ' ';
      os << (g ? g->label(n.members[k]) : std::to_string(n.members[k]));
    }
    os << "\"];\n";
  }
  for (const auto& n : t.nodes) {
    if (n.parent) os << "  t" << n.id << " -> t" << *n.parent << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace decode
