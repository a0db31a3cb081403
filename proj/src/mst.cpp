#include "phylo/mst.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <tuple>

#include "phylo/error.hpp"

namespace phylo {

std::vector<std::size_t> lv_counts(const DistanceMatrix& m, std::size_t node, std::size_t max_level) {
  std::vector<std::size_t> lv(max_level, 0);
  for (std::size_t j = 0; j < m.size(); ++j) {
    if (j == node) continue;
    const double d = m.get(node, j);
    if (d >= 1 && d <= static_cast<double>(max_level) && d == static_cast<double>(static_cast<std::size_t>(d)))
      ++lv[static_cast<std::size_t>(d) - 1];
  }
  return lv;
}

std::vector<double> harmonic_centrality(const DistanceMatrix& m, const std::vector<std::size_t>& subset) {
  std::vector<std::size_t> nodes = subset;
  if (nodes.empty()) {
    nodes.resize(m.size());
    std::iota(nodes.begin(), nodes.end(), std::size_t{0});
  }
  std::vector<double> q(nodes.size(), 0.0);
  if (nodes.size() < 2) return q;
  for (std::size_t a = 0; a < nodes.size(); ++a) {
    double inv = 0;
    for (std::size_t b = 0; b < nodes.size(); ++b) {
      if (a == b) continue;
      const double d = m.get(nodes[a], nodes[b]);
      inv += 1.0 / (d == 0 ? kZeroDistanceEpsilon : d);
    }
    q[a] = static_cast<double>(nodes.size() - 1) / inv;
  }
  return q;
}

std::vector<std::size_t> profile_frequencies(const Dataset& ds) {
  std::map<std::vector<std::uint32_t>, std::size_t> seen;
  std::vector<std::vector<std::uint32_t>> keys;
  keys.reserve(ds.size());
  for (std::size_t i = 0; i < ds.size(); ++i) {
    auto c = ds.codes(i);
    keys.emplace_back(c.begin(), c.end());
    ++seen[keys.back()];
  }
  std::vector<std::size_t> freq(ds.size());
  for (std::size_t i = 0; i < ds.size(); ++i) freq[i] = seen[keys[i]];
  return freq;
}

namespace {

struct DisjointSets {
  std::vector<std::size_t> parent, rank;
  explicit DisjointSets(std::size_t n) : parent(n), rank(n, 0) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (rank[a] < rank[b]) std::swap(a, b);
    parent[b] = a;
    if (rank[a] == rank[b]) ++rank[a];
    return true;
  }
};

std::vector<std::size_t> frequencies_for(const DistanceMatrix& m, const Dataset* ds) {
  std::vector<std::size_t> freq(m.size(), 1);
  if (!ds || ds->size() != m.size()) return freq;
  for (std::size_t i = 0; i < m.size(); ++i)
    if ((*ds)[i].id != m.ids()[i]) return freq;
  return profile_frequencies(*ds);
}

}  // namespace

Tree run_goeburst(const DistanceMatrix& m, std::size_t levels, const Dataset* dataset) {
  const auto n = m.size();
  if (n == 0) fail(ErrorKind::InvalidInput, "goeburst needs at least one profile");
  if (!m.has_symmetric_values()) fail(ErrorKind::InvalidInput, "goeburst needs a symmetric distance matrix");
  if (levels == 0) levels = 1;
  if (n == 1) return Tree::single(m.ids()[0]);

  const auto depth = std::max<std::size_t>(levels, 3);
  std::vector<std::vector<std::size_t>> lv(n);
  for (std::size_t i = 0; i < n; ++i) lv[i] = lv_counts(m, i, depth);
  const auto freq = frequencies_for(m, dataset);

  struct Link {
    double d;
    std::size_t a, b;  // a < b
  };
  std::vector<Link> links;
  links.reserve(n * (n - 1) / 2);
  for (std::size_t b = 1; b < n; ++b)
    for (std::size_t a = 0; a < b; ++a) links.push_back({m.get(a, b), a, b});

  // Orders endpoint statistics as (max, min) pairs; larger wins.
  auto prefer = [](std::size_t x1, std::size_t y1, std::size_t x2, std::size_t y2) -> int {
    const auto hi1 = std::max(x1, y1), lo1 = std::min(x1, y1);
    const auto hi2 = std::max(x2, y2), lo2 = std::min(x2, y2);
    if (hi1 != hi2) return hi1 > hi2 ? -1 : 1;
    if (lo1 != lo2) return lo1 > lo2 ? -1 : 1;
    return 0;
  };
  std::sort(links.begin(), links.end(), [&](const Link& x, const Link& y) {
    if (x.d != y.d) return x.d < y.d;
    for (std::size_t k = 0; k < levels; ++k)
      if (int c = prefer(lv[x.a][k], lv[x.b][k], lv[y.a][k], lv[y.b][k])) return c < 0;
    if (int c = prefer(freq[x.a], freq[x.b], freq[y.a], freq[y.b])) return c < 0;
    return std::tie(x.a, x.b) < std::tie(y.a, y.b);
  });

  DisjointSets sets(n);
  std::vector<std::pair<NodeId, NodeId>> chosen;
  chosen.reserve(n - 1);
  for (const auto& l : links) {
    if (sets.unite(l.a, l.b)) {
      chosen.emplace_back(l.a, l.b);
      if (chosen.size() + 1 == n) break;
    }
  }

  NodeId founder = 0;
  auto rank = [&](std::size_t i) { return std::tuple(lv[i][0], lv[i][1], lv[i][2], freq[i]); };
  for (std::size_t i = 1; i < n; ++i)
    if (rank(i) > rank(founder)) founder = i;

  return orient_tree(m.ids(), n, chosen, founder, [&](NodeId p, NodeId c) { return m.get(p, c); });
}

namespace {

// Chu-Liu/Edmonds in Tarjan's formulation: a meldable heap of incoming arcs
// per super-node, cycle contraction through a union-find that can be rolled
// back to expand the contracted cycles afterwards.
//
// Arc weights are lexicographic triples (virtual, distance, root rank) added
// componentwise. A virtual source feeds every node with (1, 0, rank), so the
// optimum uses exactly one virtual arc, minimizes distance over all roots and
// then prefers the most central root.

struct Weight {
  double virt = 0, dist = 0, root = 0;

  Weight& operator+=(const Weight& o) {
    virt += o.virt;
    dist += o.dist;
    root += o.root;
    return *this;
  }
  Weight operator-() const { return {-virt, -dist, -root}; }
  bool is_zero() const { return virt == 0 && dist == 0 && root == 0; }
  friend auto operator<=>(const Weight&, const Weight&) = default;
};

struct Arc {
  std::size_t from, to;
  Weight w;       // reduced weight
  double rank;    // tie-break among equal weights: centrality of the source
};

bool arc_less(const Arc& x, const Arc& y) {
  return std::tie(x.w, x.rank, x.from) < std::tie(y.w, y.rank, y.from);
}

class ArcHeaps {
 public:
  static constexpr std::size_t kNil = static_cast<std::size_t>(-1);

  explicit ArcHeaps(std::size_t capacity) { nodes_.reserve(capacity); }

  // A sorted run linked along left children is already a leftist heap.
  std::size_t chain(std::vector<Arc>& arcs) {
    std::sort(arcs.begin(), arcs.end(), arc_less);
    const auto first = nodes_.size();
    for (std::size_t i = 0; i < arcs.size(); ++i)
      nodes_.push_back({arcs[i], i + 1 < arcs.size() ? first + i + 1 : kNil, kNil, {}, 1});
    return arcs.empty() ? kNil : first;
  }

  std::size_t meld(std::size_t a, std::size_t b) {
    if (a == kNil) return b;
    if (b == kNil) return a;
    push(a);
    push(b);
    if (arc_less(nodes_[b].key, nodes_[a].key)) std::swap(a, b);
    const auto merged = meld(nodes_[a].right, b);
    auto& na = nodes_[a];
    na.right = merged;
    if (dist(na.left) < dist(na.right)) std::swap(na.left, na.right);
    na.rank = dist(na.right) + 1;
    return a;
  }

  const Arc& top(std::size_t h) {
    push(h);
    return nodes_[h].key;
  }

  std::size_t pop(std::size_t h) {
    push(h);
    return meld(nodes_[h].left, nodes_[h].right);
  }

  void shift(std::size_t h, const Weight& delta) { nodes_[h].delta += delta; }

 private:
  struct Node {
    Arc key;
    std::size_t left, right;
    Weight delta;
    std::size_t rank;  // leftist null-path length
  };

  std::size_t dist(std::size_t h) const { return h == kNil ? 0 : nodes_[h].rank; }

  void push(std::size_t h) {
    auto& nd = nodes_[h];
    if (nd.delta.is_zero()) return;
    nd.key.w += nd.delta;
    if (nd.left != kNil) nodes_[nd.left].delta += nd.delta;
    if (nd.right != kNil) nodes_[nd.right].delta += nd.delta;
    nd.delta = {};
  }

  std::vector<Node> nodes_;
};

class RollbackSets {
 public:
  explicit RollbackSets(std::size_t n) : link_(n, -1) {}

  std::size_t find(std::size_t x) const {
    while (link_[x] >= 0) x = static_cast<std::size_t>(link_[x]);
    return x;
  }
  std::size_t time() const { return history_.size(); }
  void rollback(std::size_t t) {
    while (history_.size() > t) {
      link_[history_.back().first] = history_.back().second;
      history_.pop_back();
    }
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (link_[a] > link_[b]) std::swap(a, b);
    history_.emplace_back(a, link_[a]);
    history_.emplace_back(b, link_[b]);
    link_[a] += link_[b];
    link_[b] = static_cast<long>(a);
    return true;
  }

 private:
  std::vector<long> link_;
  std::vector<std::pair<std::size_t, long>> history_;
};

}  // namespace

Tree run_edmonds(const DistanceMatrix& m) {
  const auto n = m.size();
  if (n == 0) fail(ErrorKind::InvalidInput, "edmonds needs at least one profile");
  if (n == 1) return Tree::single(m.ids()[0]);

  const auto q = harmonic_centrality(m);
  std::vector<std::size_t> by_centrality(n);
  std::iota(by_centrality.begin(), by_centrality.end(), std::size_t{0});
  std::stable_sort(by_centrality.begin(), by_centrality.end(), [&](auto a, auto b) { return q[a] < q[b]; });
  std::vector<double> root_rank(n);
  for (std::size_t r = 0; r < n; ++r) root_rank[by_centrality[r]] = static_cast<double>(r);

  const std::size_t source = n;  // virtual
  const std::size_t total = n + 1;
  ArcHeaps heaps(n * n);
  std::vector<std::size_t> heap(total, ArcHeaps::kNil);
  std::vector<Arc> column;
  column.reserve(n);
  for (std::size_t to = 0; to < n; ++to) {
    column.clear();
    column.push_back({source, to, {1, 0, root_rank[to]}, 0});
    for (std::size_t from = 0; from < n; ++from)
      if (from != to) column.push_back({from, to, {0, m.get(from, to), 0}, q[from]});
    heap[to] = heaps.chain(column);
  }

  RollbackSets sets(total);
  constexpr std::size_t kUnseen = static_cast<std::size_t>(-1);
  std::vector<std::size_t> seen(total, kUnseen), path(total);
  std::vector<Arc> chosen(total), incoming(total, Arc{kUnseen, kUnseen, {}, 0});
  struct Cycle {
    std::size_t node, time;
    std::vector<Arc> arcs;
  };
  std::deque<Cycle> cycles;
  seen[source] = source;

  for (std::size_t s = 0; s < total; ++s) {
    std::size_t u = s, depth = 0;
    while (seen[u] == kUnseen) {
      // Arcs internal to a contracted super-node are dropped.
      while (heap[u] != ArcHeaps::kNil && sets.find(heaps.top(heap[u]).from) == u) heap[u] = heaps.pop(heap[u]);
      if (heap[u] == ArcHeaps::kNil) fail(ErrorKind::InvalidInput, "graph has no spanning arborescence");
      const Arc a = heaps.top(heap[u]);
      heaps.shift(heap[u], -a.w);
      heap[u] = heaps.pop(heap[u]);
      chosen[depth] = a;
      path[depth++] = u;
      seen[u] = s;
      u = sets.find(a.from);
      if (seen[u] == s) {
        std::size_t merged = ArcHeaps::kNil, w;
        const std::size_t end = depth, t = sets.time();
        do {
          w = path[--depth];
          merged = heaps.meld(merged, heap[w]);
        } while (sets.unite(u, w));
        u = sets.find(u);
        heap[u] = merged;
        seen[u] = kUnseen;
        cycles.push_front({u, t, std::vector<Arc>(chosen.begin() + depth, chosen.begin() + end)});
      }
    }
    for (std::size_t i = 0; i < depth; ++i) incoming[sets.find(chosen[i].to)] = chosen[i];
  }

  for (auto& c : cycles) {
    sets.rollback(c.time);
    const Arc in = incoming[c.node];
    for (const auto& a : c.arcs) incoming[sets.find(a.to)] = a;
    incoming[sets.find(in.to)] = in;
  }

  NodeId root = 0;
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (std::size_t v = 0; v < n; ++v) {
    if (incoming[v].from == source)
      root = v;
    else
      edges.push_back({incoming[v].from, v, m.get(incoming[v].from, v)});
  }
  return Tree(m.ids(), n, std::move(edges), root);
}

}  // namespace phylo
