#pragma once

#include <cstddef>
#include <vector>

#include "phylo/dataset.hpp"
#include "phylo/matrix.hpp"
#include "phylo/tree.hpp"

namespace phylo {

/// Pairs at exactly zero distance contribute 1/kZeroDistanceEpsilon to the
/// harmonic sum.
inline constexpr double kZeroDistanceEpsilon = 1e-9;

/// lv[m-1] = number of other nodes at distance exactly m, for m = 1..max_level.
std::vector<std::size_t> lv_counts(const DistanceMatrix& matrix, std::size_t node, std::size_t max_level);

/// Q_i = (k-1) / sum_j 1/D(i, j) over the nodes in `subset` (all nodes when
/// empty). A single node scores 0.
std::vector<double> harmonic_centrality(const DistanceMatrix& matrix, const std::vector<std::size_t>& subset = {});

/// Number of dataset profiles whose loci equal each profile's loci.
std::vector<std::size_t> profile_frequencies(const Dataset& dataset);

/// Kruskal over the complete graph with goeBURST tie-breaks up to `levels`
/// (3 for plain goeBURST, the locus count for the full variant). `dataset`
/// supplies occurrence frequencies; without it every frequency is 1.
/// The tree is rooted at the founder and every node is a profile.
Tree run_goeburst(const DistanceMatrix& matrix, std::size_t levels = 3, const Dataset* dataset = nullptr);

/// Minimum arborescence (Chu-Liu/Edmonds) over every choice of root; arcs
/// i->j weigh D(i, j). Among co-optimal roots the one with the smallest
/// harmonic centrality wins, then the smallest index, so symmetric input is
/// always rooted at the most central node.
Tree run_edmonds(const DistanceMatrix& matrix);

}  // namespace phylo
