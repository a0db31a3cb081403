#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "phylo/matrix.hpp"

namespace phylo {

enum class Correction { JukesCantor };

std::optional<Correction> correction_from_name(std::string_view name);

/// -3/4 ln(1 - 4/3 h) for a proportion h in [0, 3/4); DomainError otherwise.
double jukes_cantor(double h);

/// Applies the correction to every off-diagonal cell, keeping ids and
/// symmetry. When `count_scale` is set the cells are mismatch counts and are
/// divided by it (the locus count) before correcting.
DistanceMatrix correct(const DistanceMatrix& matrix, Correction correction,
                       std::optional<std::size_t> count_scale = std::nullopt);

}  // namespace phylo
