#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "phylo/matrix.hpp"
#include "phylo/tree.hpp"

namespace phylo {

/// Globally-closest-pairs agglomeration. The variants differ only in how the
/// dissimilarity from a merged cluster to the others is reduced.
enum class GcpVariant { SingleLinkage, CompleteLinkage, Upgma, Upgmc, Wpgma, Wpgmc };

std::optional<GcpVariant> gcp_from_name(std::string_view name);
std::string_view to_string(GcpVariant variant) noexcept;

/// Dissimilarity from the merge of clusters i and j to a third cluster k.
double reduce_dissimilarity(GcpVariant variant, double d_ik, double d_jk, double d_ij, std::size_t size_i,
                            std::size_t size_j) noexcept;

/// Builds the rooted dendrogram. Each merge joins the pair with the smallest
/// working dissimilarity (ties: smallest slot pair, where a merged cluster
/// keeps the lower slot of its two parts) at height d_ij / 2; edge lengths are
/// height differences, so leaves sit at height 0.
///
/// Node ids: 0..n-1 are the matrix entries, n.. the merges in creation
/// order; the root is the last merge.
Tree run_gcp(const DistanceMatrix& matrix, GcpVariant variant);

}  // namespace phylo
