#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace phylo {

enum class Symmetry { Symmetric, Asymmetric };

/// Pairwise dissimilarities over a list of ids.
///
/// Only off-diagonal cells are stored: n(n-1)/2 for symmetric matrices,
/// n(n-1) otherwise. A lazy matrix holds a cell function and evaluates each
/// stored cell on first access; the cache is not synchronized, so a lazy
/// matrix must stay on one thread.
class DistanceMatrix {
 public:
  using CellFunction = std::function<double(std::size_t, std::size_t)>;

  DistanceMatrix() = default;
  /// Eager matrix with every cell zero.
  DistanceMatrix(std::vector<std::string> ids, Symmetry symmetry);

  static DistanceMatrix lazy(std::vector<std::string> ids, Symmetry symmetry, CellFunction cell);

  std::size_t size() const noexcept { return ids_.size(); }
  const std::vector<std::string>& ids() const noexcept { return ids_; }
  Symmetry symmetry() const noexcept { return symmetry_; }
  bool is_symmetric() const noexcept { return symmetry_ == Symmetry::Symmetric; }
  bool is_lazy() const noexcept { return static_cast<bool>(cell_); }

  double get(std::size_t i, std::size_t j) const;
  double operator()(std::size_t i, std::size_t j) const { return get(i, j); }

  /// Stores a value; on a symmetric matrix this also sets (j, i).
  /// Writing the diagonal is only allowed with 0.
  void set(std::size_t i, std::size_t j, double value);

  /// Number of stored cells.
  std::size_t storage_size() const noexcept { return values_.size(); }
  /// Number of times the lazy cell function has been invoked.
  std::size_t evaluations() const noexcept { return evaluations_; }

  /// Evaluates every pending lazy cell; returns an eager copy.
  DistanceMatrix materialized() const;

  /// True when the matrix is flagged symmetric or all pairs agree exactly.
  bool has_symmetric_values() const;

  /// Cell-for-cell equality of ids, symmetry and values (forces lazy cells).
  friend bool operator==(const DistanceMatrix& a, const DistanceMatrix& b);

 private:
  std::size_t slot(std::size_t i, std::size_t j) const noexcept;

  std::vector<std::string> ids_;
  Symmetry symmetry_ = Symmetry::Symmetric;
  mutable std::vector<double> values_;
  mutable std::vector<std::uint8_t> ready_;
  CellFunction cell_;
  mutable std::size_t evaluations_ = 0;
};

/// Square (asymmetric) or lower-triangle (symmetric) PHYLIP-like text.
DistanceMatrix read_matrix(std::string_view text, Symmetry format);
std::string write_matrix(const DistanceMatrix& matrix, Symmetry format);

}  // namespace phylo
