#include "phylo/nj.hpp"

#include <algorithm>
#include <cmath>

#include "phylo/error.hpp"

namespace phylo {

std::optional<NjVariant> nj_from_name(std::string_view name) {
  if (name == "saitounei") return NjVariant::SaitouNei;
  if (name == "studierkeppler") return NjVariant::StudierKeppler;
  if (name == "unj") return NjVariant::Unj;
  return std::nullopt;
}

std::string_view to_string(NjVariant variant) noexcept {
  switch (variant) {
    case NjVariant::SaitouNei: return "saitounei";
    case NjVariant::StudierKeppler: return "studierkeppler";
    case NjVariant::Unj: return "unj";
  }
  return "?";
}

NjState::NjState(const DistanceMatrix& m)
    : n(m.size()), d(n * n, 0.0), size(n, 1), node(n), row_sum(n, 0.0) {
  for (std::size_t i = 0; i < n; ++i) {
    live.push_back(i);
    node[i] = i;
    for (std::size_t j = 0; j < i; ++j) {
      const double v = m.get(i, j);
      at(i, j) = at(j, i) = v;
      row_sum[i] += v;
      row_sum[j] += v;
      pair_sum += v;
    }
  }
}

std::size_t NjState::live_leaves() const noexcept {
  std::size_t total = 0;
  for (auto k : live) total += size[k];
  return total;
}

double NjState::row_sum_drift() const {
  double worst = 0;
  for (auto i : live) {
    double s = 0;
    for (auto k : live) s += at(i, k);
    worst = std::max(worst, std::abs(s - row_sum[i]));
  }
  return worst;
}

double nj_selection(NjVariant variant, const NjState& st, std::size_t i, std::size_t j) {
  const double r = static_cast<double>(st.live.size());
  const double dij = st.at(i, j);
  const double ri = st.row_sum[i];
  const double rj = st.row_sum[j];
  if (variant == NjVariant::SaitouNei) {
    // sum_{k != i,j} (D_ik + D_jk) and sum_{k<l; k,l != i,j} D_kl
    const double to_others = ri + rj - 2.0 * dij;
    const double among_others = st.pair_sum - ri - rj + dij;
    return dij / 2.0 + to_others / (2.0 * (r - 2.0)) + among_others / (r - 2.0);
  }
  return (r - 2.0) * dij - ri - rj;
}

std::pair<double, double> nj_branch_lengths(NjVariant variant, const NjState& st, std::size_t i, std::size_t j) {
  const double dij = st.at(i, j);
  double d_iu;
  if (variant == NjVariant::Unj) {
    double weighted = 0;
    for (auto k : st.live)
      if (k != i && k != j) weighted += static_cast<double>(st.size[k]) * (st.at(i, k) - st.at(j, k));
    const double others = static_cast<double>(st.live_leaves() - st.size[i] - st.size[j]);
    d_iu = dij / 2.0 + weighted / (2.0 * others);
  } else {
    const double r = static_cast<double>(st.live.size());
    // D_ij appears in both row sums and cancels.
    d_iu = dij / 2.0 + (st.row_sum[i] - st.row_sum[j]) / (2.0 * (r - 2.0));
  }
  return {d_iu, dij - d_iu};
}

Tree run_nj(const DistanceMatrix& matrix, NjVariant variant, const NjObserver& observer) {
  const auto n = matrix.size();
  if (n < 2) fail(ErrorKind::InvalidInput, "neighbour joining needs at least two profiles");
  if (!matrix.has_symmetric_values())
    fail(ErrorKind::InvalidInput, std::string(to_string(variant)) + " needs a symmetric distance matrix");

  NjState st(matrix);
  std::vector<Edge> edges;
  edges.reserve(2 * n - 3);
  NodeId next = n;

  while (st.live.size() > 2) {
    if (observer) observer(st);

    // Full scan; ties keep the first pair in (i, j) order.
    std::size_t bi = 0, bj = 0;
    double best = 0;
    bool found = false;
    const auto& live = st.live;
    for (std::size_t a = 0; a < live.size(); ++a) {
      for (std::size_t b = a + 1; b < live.size(); ++b) {
        const double q = nj_selection(variant, st, live[a], live[b]);
        if (!found || q < best) {
          best = q;
          bi = live[a];
          bj = live[b];
          found = true;
        }
      }
    }

    const auto [d_iu, d_ju] = nj_branch_lengths(variant, st, bi, bj);
    edges.push_back({next, st.node[bi], d_iu});
    edges.push_back({next, st.node[bj], d_ju});

    const double lambda = variant == NjVariant::Unj
                              ? static_cast<double>(st.size[bi]) / static_cast<double>(st.size[bi] + st.size[bj])
                              : 0.5;
    const double dij = st.at(bi, bj);
    st.live.erase(std::find(st.live.begin(), st.live.end(), bj));
    st.pair_sum -= st.row_sum[bi] + st.row_sum[bj] - dij;
    double new_row = 0;
    for (auto k : st.live) {
      if (k == bi) continue;
      const double d_uk = lambda * (st.at(bi, k) - d_iu) + (1.0 - lambda) * (st.at(bj, k) - d_ju);
      st.row_sum[k] += d_uk - st.at(bi, k) - st.at(bj, k);
      st.at(bi, k) = st.at(k, bi) = d_uk;
      new_row += d_uk;
    }
    st.row_sum[bi] = new_row;
    st.pair_sum += new_row;
    st.size[bi] += st.size[bj];
    st.node[bi] = next++;
  }

  const auto a = st.live[0];
  const auto b = st.live[1];
  const double last = st.at(a, b);
  if (n == 2) {
    edges.push_back({0, 1, last});
    return Tree(matrix.ids(), 2, std::move(edges), 0);
  }
  const NodeId root = next - 1;
  const auto other = st.node[a] == root ? st.node[b] : st.node[a];
  edges.push_back({root, other, last});
  return Tree(matrix.ids(), next, std::move(edges), root);
}

}  // namespace phylo
