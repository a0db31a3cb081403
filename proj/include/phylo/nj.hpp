#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "phylo/matrix.hpp"
#include "phylo/tree.hpp"

namespace phylo {

enum class NjVariant { SaitouNei, StudierKeppler, Unj };

std::optional<NjVariant> nj_from_name(std::string_view name);
std::string_view to_string(NjVariant variant) noexcept;

/// Working state of a neighbour-joining run.
///
/// `row_sum[i]` is the sum of D(i, k) over live k and is maintained
/// incrementally; `pair_sum` is the sum of D over unordered live pairs.
struct NjState {
  std::size_t n = 0;                // original leaf count; stride of `d`
  std::vector<double> d;            // n x n, symmetric
  std::vector<std::size_t> live;    // ascending slots
  std::vector<std::size_t> size;    // leaves under each slot
  std::vector<NodeId> node;         // tree node currently held by each slot
  std::vector<double> row_sum;
  double pair_sum = 0;

  explicit NjState(const DistanceMatrix& matrix);

  double at(std::size_t i, std::size_t j) const noexcept { return d[i * n + j]; }
  double& at(std::size_t i, std::size_t j) noexcept { return d[i * n + j]; }
  std::size_t live_leaves() const noexcept;

  /// Largest absolute gap between the maintained and recomputed row sums.
  double row_sum_drift() const;
};

/// Pair score minimized by the selection step (i != j, both live).
///
/// Studier-Keppler and UNJ: (r-2) D_ij - sum_k (D_ik + D_jk).
/// Saitou-Nei: the total branch length of the star tree after joining i and j,
/// with every sum running over k, l outside {i, j}. Both rank pairs the same way.
double nj_selection(NjVariant variant, const NjState& state, std::size_t i, std::size_t j);

/// Branch lengths from slots i and j to their new parent.
std::pair<double, double> nj_branch_lengths(NjVariant variant, const NjState& state, std::size_t i, std::size_t j);

using NjObserver = std::function<void(const NjState&)>;

/// Neighbour joining over a symmetric matrix with n >= 2. The result is
/// unrooted (n-2 internal nodes, 2n-3 edges) and rooted for storage at the
/// last internal node created. `observer` sees the state before each join.
Tree run_nj(const DistanceMatrix& matrix, NjVariant variant, const NjObserver& observer = {});

}  // namespace phylo
