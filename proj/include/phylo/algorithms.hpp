#pragma once

#include <cstddef>
#include <span>
#include <string_view>

#include "phylo/dataset.hpp"
#include "phylo/matrix.hpp"
#include "phylo/tree.hpp"

namespace phylo {

struct AlgorithmOptions {
  std::size_t lvs = 3;                // goeburst tie-break depth
  const Dataset* dataset = nullptr;   // goeburst occurrence frequencies
};

/// Names accepted by infer_tree, in registry order.
std::span<const std::string_view> algorithm_names() noexcept;
bool is_algorithm(std::string_view name) noexcept;

/// Runs the named tree-inference algorithm. Unknown names raise InvalidType.
Tree infer_tree(std::string_view name, const DistanceMatrix& matrix, const AlgorithmOptions& options = {});

}  // namespace phylo
