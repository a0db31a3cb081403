#pragma once

#include <cstddef>
#include <functional>
#include <utility>

#include "phylo/matrix.hpp"
#include "phylo/tree.hpp"

namespace phylo {

/// Decides whether the candidate pair (w, z) reconnecting the two sides of the
/// removed edge (u, v) is taken under the contemporary model. Arguments are
/// matrix indices.
using ContemporaryPredicate =
    std::function<bool(std::size_t u, std::size_t v, std::pair<std::size_t, std::size_t> candidate,
                       const DistanceMatrix& matrix)>;

/// True when the candidate is the removed edge itself, or when
/// D(w, z) <= min(D(w, v), D(u, z)).
bool default_contemporary_predicate(std::size_t u, std::size_t v, std::pair<std::size_t, std::size_t> candidate,
                                    const DistanceMatrix& matrix);

/// Local branch recrafting over a spanning tree whose nodes are all named
/// after matrix ids. Edges are visited shortest first; each is removed and
/// replaced by the best reconnecting edge unless that one is heavier.
/// The result keeps the input root; edge lengths are D(parent, child).
Tree run_lbr(const Tree& tree, const DistanceMatrix& matrix,
             const ContemporaryPredicate& predicate = default_contemporary_predicate);

}  // namespace phylo
