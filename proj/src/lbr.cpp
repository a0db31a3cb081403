#include "phylo/lbr.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <tuple>
#include <unordered_map>

#include "phylo/error.hpp"
#include "phylo/mst.hpp"

namespace phylo {

bool default_contemporary_predicate(std::size_t u, std::size_t v, std::pair<std::size_t, std::size_t> candidate,
                                    const DistanceMatrix& m) {
  const auto [w, z] = candidate;
  if ((w == u && z == v) || (w == v && z == u)) return true;
  return m.get(w, z) <= std::min(m.get(w, v), m.get(u, z));
}

namespace {

struct WorkEdge {
  double w;
  std::size_t a, b;
  friend bool operator<(const WorkEdge& x, const WorkEdge& y) { return std::tie(x.w, x.a, x.b) < std::tie(y.w, y.a, y.b); }
};

using Adjacency = std::vector<std::vector<std::size_t>>;

void unlink(Adjacency& adj, std::size_t a, std::size_t b) {
  auto drop = [](std::vector<std::size_t>& xs, std::size_t x) { xs.erase(std::find(xs.begin(), xs.end(), x)); };
  drop(adj[a], b);
  drop(adj[b], a);
}

std::vector<std::size_t> component(const Adjacency& adj, std::size_t start) {
  std::vector<std::size_t> out{start};
  std::vector<char> seen(adj.size(), 0);
  seen[start] = 1;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (auto w : adj[out[i]])
      if (!seen[w]) {
        seen[w] = 1;
        out.push_back(w);
      }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Tree run_lbr(const Tree& tree, const DistanceMatrix& m, const ContemporaryPredicate& predicate) {
  const auto n = m.size();
  if (tree.named_count() != tree.node_count())
    fail(ErrorKind::InvalidInput, "lbr needs a tree whose nodes are all profiles");
  if (tree.node_count() != n) fail(ErrorKind::InvalidInput, "tree and matrix cover different profiles");
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(m.ids()[i], i);
  std::vector<std::size_t> to_matrix(n);
  for (std::size_t v = 0; v < n; ++v) {
    auto it = index.find(tree.name(v));
    if (it == index.end()) fail(ErrorKind::InvalidInput, "tree node '" + tree.name(v) + "' is not in the matrix");
    to_matrix[v] = it->second;
  }
  {
    auto sorted = to_matrix;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      fail(ErrorKind::InvalidInput, "tree repeats a profile");
  }
  if (n < 2) return tree;

  // Work in matrix indices from here on.
  Adjacency adj(n);
  std::set<WorkEdge> work;
  std::multiset<double> weights;
  for (const auto& e : tree.edges()) {
    const auto a = to_matrix[e.parent], b = to_matrix[e.child];
    adj[a].push_back(b);
    adj[b].push_back(a);
    work.insert({m.get(a, b), a, b});
    weights.insert(m.get(a, b));
  }
  std::set<std::pair<std::size_t, std::size_t>> readded;
  std::size_t budget = work.size();

  while (!work.empty()) {
    const auto [d_uv, u, v] = *work.begin();
    work.erase(work.begin());
    unlink(adj, u, v);
    const auto side_u = component(adj, u);
    const auto side_v = component(adj, v);

    const auto hq_u = harmonic_centrality(m, side_u);
    const auto hq_v = harmonic_centrality(m, side_v);
    std::pair<std::size_t, std::size_t> best{u, v};
    auto best_key = std::tuple(std::numeric_limits<double>::infinity(), 0.0, std::size_t{0}, std::size_t{0});
    for (std::size_t x = 0; x < side_u.size(); ++x)
      for (std::size_t y = 0; y < side_v.size(); ++y) {
        auto key = std::tuple(m.get(side_u[x], side_v[y]), hq_u[x] + hq_v[y], side_u[x], side_v[y]);
        if (key < best_key) {
          best_key = key;
          best = {side_u[x], side_v[y]};
        }
      }

    if (!predicate(u, v, best, m)) {
      auto w = side_u.front();
      for (auto x : side_u)
        if (m.get(x, v) < m.get(w, v)) w = x;
      auto z = side_v.front();
      for (auto y : side_v)
        if (m.get(u, y) < m.get(u, z)) z = y;
      best = {w, z};
    }

    const auto [w, z] = best;
    const double d_wz = m.get(w, z);
    if ((w == u && z == v) || d_wz > d_uv) {
      adj[u].push_back(v);
      adj[v].push_back(u);
      continue;
    }
    adj[w].push_back(z);
    adj[z].push_back(w);
    weights.erase(weights.find(d_uv));
    weights.insert(d_wz);
    if (d_wz != *weights.begin() && budget > 0 && readded.insert({w, z}).second) {
      work.insert({d_wz, w, z});
      --budget;
    }
  }

  std::vector<std::pair<NodeId, NodeId>> links;
  links.reserve(n - 1);
  for (std::size_t a = 0; a < n; ++a)
    for (auto b : adj[a])
      if (a < b) links.emplace_back(a, b);
  return orient_tree(m.ids(), n, links, to_matrix[tree.root()], [&](NodeId p, NodeId c) { return m.get(p, c); });
}

}  // namespace phylo
