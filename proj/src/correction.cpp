#include "phylo/correction.hpp"

#include <cmath>

#include "phylo/error.hpp"
#include "phylo/text.hpp"

namespace phylo {

std::optional<Correction> correction_from_name(std::string_view name) {
  if (name == "jukescantor") return Correction::JukesCantor;
  return std::nullopt;
}

double jukes_cantor(double h) {
  if (!(h >= 0.0) || !(h < 0.75))
    throw DomainError("jukes-cantor correction needs a proportion in [0, 0.75), got " + text::format_double(h));
  return -0.75 * std::log(1.0 - 4.0 / 3.0 * h);
}

DistanceMatrix correct(const DistanceMatrix& matrix, Correction, std::optional<std::size_t> count_scale) {
  if (count_scale && *count_scale == 0) fail(ErrorKind::InvalidInput, "cannot normalize by a locus count of 0");
  const double scale = count_scale ? static_cast<double>(*count_scale) : 1.0;
  DistanceMatrix out(matrix.ids(), matrix.symmetry());
  const auto n = matrix.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || (matrix.is_symmetric() && j > i)) continue;
      out.set(i, j, jukes_cantor(matrix.get(i, j) / scale));
    }
  return out;
}

}  // namespace phylo
