#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "phylo/dataset.hpp"
#include "phylo/matrix.hpp"

namespace phylo {

enum class Metric { Hamming, GrapeTree, Kimura };
enum class EvalMode { Eager, Lazy };

std::optional<Metric> metric_from_name(std::string_view name);
std::string_view to_string(Metric metric) noexcept;
/// Hamming and Kimura are symmetric; GrapeTree's measure is directional.
Symmetry symmetry_of(Metric metric) noexcept;

/// Number of loci at which the two profiles differ. Missing values compare
/// like any other value.
double hamming(const Profile& a, const Profile& b);

/// Mismatches at loci where `to` is present, over the number of loci where
/// `to` is present. Throws DomainError when `to` is entirely missing.
double grapetree_distance(const Profile& from, const Profile& to, std::string_view missing = "0");

struct NucleotidePairCounts {
  std::size_t transitions = 0;    // A<->G, C<->T
  std::size_t transversions = 0;  // every other difference
  std::size_t compared = 0;       // loci where neither side is missing

  double p() const noexcept { return compared ? double(transitions) / double(compared) : 0.0; }
  double q() const noexcept { return compared ? double(transversions) / double(compared) : 0.0; }
};

NucleotidePairCounts count_substitutions(const Profile& a, const Profile& b, std::string_view missing = "-");

/// Two-parameter distance from transition (p) and transversion (q) fractions.
/// Throws DomainError outside 1-2p-q > 0 and 1-2q > 0.
double kimura_from_fractions(double p, double q);
double kimura_distance(const Profile& a, const Profile& b);

/// Builds the distance matrix of a dataset. Eager mode fills every cell
/// (parallel over rows when OpenMP is enabled); lazy mode defers each cell to
/// its first access.
DistanceMatrix build_matrix(const Dataset& dataset, Metric metric, EvalMode mode = EvalMode::Eager);

/// Single-threaded eager build; the reference the parallel kernel is tested against.
DistanceMatrix build_matrix_serial(const Dataset& dataset, Metric metric);

}  // namespace phylo
