#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace phylo {

using NodeId = std::size_t;

struct Edge {
  NodeId parent;
  NodeId child;
  double length;  // may be negative (neighbour-joining estimates)

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Rooted tree over named and unnamed nodes.
///
/// Nodes [0, names.size()) carry a name (profile id); they are usually
/// leaves, but minimum-spanning-tree outputs also place named nodes inside the
/// tree. Nodes [names.size(), node_count) are unnamed internal nodes. Edges are
/// oriented away from the root.
class Tree {
 public:
  Tree() = default;
  Tree(std::vector<std::string> names, std::size_t node_count, std::vector<Edge> edges, NodeId root,
       std::optional<double> root_length = std::nullopt);

  static Tree single(std::string name);

  std::size_t node_count() const noexcept { return node_count_; }
  std::size_t named_count() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(NodeId v) const { return names_.at(v); }
  bool is_named(NodeId v) const noexcept { return v < names_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  NodeId root() const noexcept { return root_; }
  std::optional<double> root_length() const noexcept { return root_length_; }

  /// Children per node, each list in edge order.
  std::vector<std::vector<NodeId>> children() const;
  /// Parent per node; the root maps to itself.
  std::vector<NodeId> parents() const;
  /// Edge length above each node; 0 at the root.
  std::vector<double> lengths_above() const;

  double total_length() const noexcept;

 private:
  std::vector<std::string> names_;
  std::size_t node_count_ = 0;
  std::vector<Edge> edges_;
  NodeId root_ = 0;
  std::optional<double> root_length_;
};

/// Re-orients an undirected edge set as a tree rooted at `root`. Edge lengths
/// are taken from `length(parent, child)`.
template <class LengthFn>
Tree orient_tree(std::vector<std::string> names, std::size_t node_count,
                 const std::vector<std::pair<NodeId, NodeId>>& links, NodeId root, LengthFn length);

/// Parses Newick. The trailing ';' is optional. Named internal nodes keep
/// their name; unnamed leaves get the empty name.
Tree read_newick(std::string_view text);
/// Canonical Newick: children ordered by the smallest name in their subtree,
/// zero lengths omitted, shortest round-trip decimals, terminal ';'.
std::string write_newick(const Tree& tree);

Tree read_nexus(std::string_view text);
std::string write_nexus(const Tree& tree);

}  // namespace phylo

#include "phylo/tree_orient.ipp"
