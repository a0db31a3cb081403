#pragma once

#include <utility>

#include "phylo/error.hpp"

namespace phylo {

template <class LengthFn>
Tree orient_tree(std::vector<std::string> names, std::size_t node_count,
                 const std::vector<std::pair<NodeId, NodeId>>& links, NodeId root, LengthFn length) {
  std::vector<std::vector<NodeId>> adj(node_count);
  for (auto [a, b] : links) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<Edge> edges;
  edges.reserve(links.size());
  std::vector<char> seen(node_count, 0);
  std::vector<NodeId> stack{root};
  seen[root] = 1;
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    for (NodeId w : adj[v]) {
      if (seen[w]) continue;
      seen[w] = 1;
      edges.push_back({v, w, length(v, w)});
      stack.push_back(w);
    }
  }
  if (edges.size() != links.size() || edges.size() + 1 != node_count)
    fail(ErrorKind::InvalidInput, "edge set does not form a spanning tree");
  return Tree(std::move(names), node_count, std::move(edges), root);
}

}  // namespace phylo
