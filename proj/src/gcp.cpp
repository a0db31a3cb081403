#include "phylo/gcp.hpp"

#include <algorithm>
#include <limits>

#include "phylo/error.hpp"

namespace phylo {

std::optional<GcpVariant> gcp_from_name(std::string_view name) {
  if (name == "sl") return GcpVariant::SingleLinkage;
  if (name == "cl") return GcpVariant::CompleteLinkage;
  if (name == "upgma") return GcpVariant::Upgma;
  if (name == "upgmc") return GcpVariant::Upgmc;
  if (name == "wpgma") return GcpVariant::Wpgma;
  if (name == "wpgmc") return GcpVariant::Wpgmc;
  return std::nullopt;
}

std::string_view to_string(GcpVariant variant) noexcept {
  switch (variant) {
    case GcpVariant::SingleLinkage: return "sl";
    case GcpVariant::CompleteLinkage: return "cl";
    case GcpVariant::Upgma: return "upgma";
    case GcpVariant::Upgmc: return "upgmc";
    case GcpVariant::Wpgma: return "wpgma";
    case GcpVariant::Wpgmc: return "wpgmc";
  }
  return "?";
}

double reduce_dissimilarity(GcpVariant variant, double d_ik, double d_jk, double d_ij, std::size_t size_i,
                            std::size_t size_j) noexcept {
  const double si = static_cast<double>(size_i);
  const double sj = static_cast<double>(size_j);
  switch (variant) {
    case GcpVariant::SingleLinkage: return std::min(d_ik, d_jk);
    case GcpVariant::CompleteLinkage: return std::max(d_ik, d_jk);
    case GcpVariant::Upgma: return (si * d_ik + sj * d_jk) / (si + sj);
    case GcpVariant::Upgmc: return (si * d_ik + sj * d_jk) / (si + sj) - si * sj * d_ij / ((si + sj) * (si + sj));
    case GcpVariant::Wpgma: return (d_ik + d_jk) / 2.0;
    case GcpVariant::Wpgmc: return (d_ik + d_jk) / 2.0 - d_ij / 4.0;
  }
  return 0;
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

/// Live clusters, their working dissimilarities, and for each slot the
/// nearest live slot above it.
class ClusterSet {
 public:
  explicit ClusterSet(const DistanceMatrix& m)
      : n_(m.size()), d_(n_ * n_, 0.0), size_(n_, 1), node_(n_), height_(n_, 0.0), nn_(n_, kNone), nnd_(n_, kInf) {
    for (std::size_t i = 0; i < n_; ++i) {
      node_[i] = i;
      live_.push_back(i);
      for (std::size_t j = 0; j < i; ++j) at(i, j) = at(j, i) = m.get(i, j);
    }
    for (auto i : live_) refresh(i);
  }

  std::size_t live_count() const noexcept { return live_.size(); }

  /// Globally closest pair (i < j).
  std::pair<std::size_t, std::size_t> closest() const {
    std::size_t best = kNone;
    for (auto i : live_)
      if (nn_[i] != kNone && (best == kNone || nnd_[i] < nnd_[best])) best = i;
    return {best, nn_[best]};
  }

  double& at(std::size_t i, std::size_t j) noexcept { return d_[i * n_ + j]; }

  /// Merges j into i with the variant's reduction and repairs the caches.
  void merge(std::size_t i, std::size_t j, GcpVariant variant, NodeId new_node, double new_height) {
    const double dij = at(i, j);
    live_.erase(std::find(live_.begin(), live_.end(), j));
    for (auto k : live_) {
      if (k == i) continue;
      at(i, k) = at(k, i) = reduce_dissimilarity(variant, at(i, k), at(j, k), dij, size_[i], size_[j]);
    }
    size_[i] += size_[j];
    node_[i] = new_node;
    height_[i] = new_height;
    nn_[j] = kNone;
    nnd_[j] = kInf;

    refresh(i);
    for (auto r : live_) {
      if (r == i) continue;
      if (nn_[r] == i || nn_[r] == j) {
        refresh(r);
      } else if (r < i) {
        double v = at(r, i);
        if (v < nnd_[r] || (v == nnd_[r] && i < nn_[r])) {
          nn_[r] = i;
          nnd_[r] = v;
        }
      }
    }
  }

  NodeId node(std::size_t slot) const noexcept { return node_[slot]; }
  double height(std::size_t slot) const noexcept { return height_[slot]; }

 private:
  void refresh(std::size_t i) {
    nn_[i] = kNone;
    nnd_[i] = kInf;
    for (auto k : live_) {
      if (k <= i) continue;
      double v = at(i, k);
      if (nn_[i] == kNone || v < nnd_[i]) {
        nn_[i] = k;
        nnd_[i] = v;
      }
    }
  }

  std::size_t n_;
  std::vector<double> d_;
  std::vector<std::size_t> size_;
  std::vector<NodeId> node_;
  std::vector<double> height_;
  std::vector<std::size_t> nn_;
  std::vector<double> nnd_;
  std::vector<std::size_t> live_;  // ascending
};

}  // namespace

Tree run_gcp(const DistanceMatrix& matrix, GcpVariant variant) {
  const auto n = matrix.size();
  if (n == 0) fail(ErrorKind::InvalidInput, "cannot build a tree from an empty matrix");
  if (!matrix.has_symmetric_values())
    fail(ErrorKind::InvalidInput, std::string(to_string(variant)) + " needs a symmetric distance matrix");
  if (n == 1) return Tree::single(matrix.ids()[0]);

  ClusterSet clusters(matrix);
  std::vector<Edge> edges;
  edges.reserve(2 * n - 2);
  NodeId next = n;
  while (clusters.live_count() > 1) {
    auto [i, j] = clusters.closest();
    const double h = clusters.at(i, j) / 2.0;
    edges.push_back({next, clusters.node(i), h - clusters.height(i)});
    edges.push_back({next, clusters.node(j), h - clusters.height(j)});
    clusters.merge(i, j, variant, next, h);
    ++next;
  }
  return Tree(matrix.ids(), next, std::move(edges), next - 1);
}

}  // namespace phylo
