#include "phylo/matrix.hpp"

#include <cassert>
#include <cmath>
#include <sstream>

#include "phylo/error.hpp"
#include "phylo/text.hpp"

namespace phylo {

namespace {

std::size_t cell_count(std::size_t n, Symmetry s) {
  if (n < 2) return 0;
  return s == Symmetry::Symmetric ? n * (n - 1) / 2 : n * (n - 1);
}

}  // namespace

DistanceMatrix::DistanceMatrix(std::vector<std::string> ids, Symmetry symmetry)
    : ids_(std::move(ids)), symmetry_(symmetry), values_(cell_count(ids_.size(), symmetry), 0.0) {}

DistanceMatrix DistanceMatrix::lazy(std::vector<std::string> ids, Symmetry symmetry, CellFunction cell) {
  DistanceMatrix m(std::move(ids), symmetry);
  m.ready_.assign(m.values_.size(), 0);
  m.cell_ = std::move(cell);
  return m;
}

std::size_t DistanceMatrix::slot(std::size_t i, std::size_t j) const noexcept {
  if (symmetry_ == Symmetry::Symmetric) {
    if (i < j) std::swap(i, j);
    return i * (i - 1) / 2 + j;
  }
  return i * (ids_.size() - 1) + (j < i ? j : j - 1);
}

double DistanceMatrix::get(std::size_t i, std::size_t j) const {
  assert(i < size() && j < size());
  if (i == j) return 0.0;
  auto k = slot(i, j);
  if (cell_ && !ready_[k]) {
    // Symmetric cells are always evaluated in (low, high) order.
    values_[k] = is_symmetric() && i > j ? cell_(j, i) : cell_(i, j);
    ready_[k] = 1;
    ++evaluations_;
  }
  return values_[k];
}

void DistanceMatrix::set(std::size_t i, std::size_t j, double value) {
  assert(i < size() && j < size());
  if (i == j) {
    if (value != 0.0) fail(ErrorKind::InvalidInput, "diagonal distance must be 0");
    return;
  }
  auto k = slot(i, j);
  values_[k] = value;
  if (cell_) ready_[k] = 1;
}

DistanceMatrix DistanceMatrix::materialized() const {
  DistanceMatrix out(ids_, symmetry_);
  const auto n = size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && (symmetry_ == Symmetry::Asymmetric || i > j)) out.values_[slot(i, j)] = get(i, j);
  return out;
}

bool DistanceMatrix::has_symmetric_values() const {
  if (is_symmetric()) return true;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (get(i, j) != get(j, i)) return false;
  return true;
}

bool operator==(const DistanceMatrix& a, const DistanceMatrix& b) {
  if (a.ids_ != b.ids_ || a.symmetry_ != b.symmetry_) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (a.get(i, j) != b.get(i, j)) return false;
  return true;
}

DistanceMatrix read_matrix(std::string_view input, Symmetry format) {
  std::vector<std::vector<std::string_view>> rows;
  for (auto line : text::lines(input)) {
    auto cols = text::fields(line);
    if (!cols.empty()) rows.push_back(std::move(cols));
  }
  if (rows.empty()) fail(ErrorKind::ParseFailure, "empty matrix input");
  if (rows[0].size() != 1 || !text::is_unsigned_integer(rows[0][0]))
    fail(ErrorKind::ParseFailure, "matrix must start with a line holding the profile count");
  const auto n = static_cast<std::size_t>(std::stoull(std::string(rows[0][0])));
  if (rows.size() - 1 != n)
    fail(ErrorKind::ParseFailure,
         "matrix declares " + std::to_string(n) + " profiles but has " + std::to_string(rows.size() - 1) + " rows");

  std::vector<std::string> ids;
  for (std::size_t r = 1; r <= n; ++r) ids.emplace_back(rows[r][0]);
  DistanceMatrix m(ids, format);

  auto number = [](std::string_view tok, std::size_t row) {
    auto v = text::parse_double(tok);
    if (!v || *v < 0)
      fail(ErrorKind::ParseFailure,
           "matrix row " + std::to_string(row) + ": invalid distance '" + std::string(tok) + "'");
    return *v;
  };

  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = rows[i + 1];
    const std::size_t expected = format == Symmetry::Symmetric ? i : n;
    if (row.size() != expected + 1)
      fail(ErrorKind::ParseFailure, "matrix row " + std::to_string(i + 1) + " has " +
                                        std::to_string(row.size() - 1) + " distances, expected " +
                                        std::to_string(expected));
    for (std::size_t j = 0; j < expected; ++j) {
      double v = number(row[j + 1], i + 1);
      if (i == j) {
        if (v != 0) fail(ErrorKind::ParseFailure, "matrix row " + std::to_string(i + 1) + ": non-zero diagonal");
        continue;
      }
      m.set(i, j, v);
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (ids[i] == ids[j]) fail(ErrorKind::ParseFailure, "duplicate matrix id '" + ids[i] + "'");
  return m;
}

std::string write_matrix(const DistanceMatrix& m, Symmetry format) {
  if (format == Symmetry::Symmetric && !m.is_symmetric())
    fail(ErrorKind::InvalidInput, "an asymmetric matrix cannot be written in the symmetric format");
  std::ostringstream out;
  const auto n = m.size();
  out << n << '\n';
  for (std::size_t i = 0; i < n; ++i) {
    out << m.ids()[i];
    const std::size_t cols = format == Symmetry::Symmetric ? i : n;
    for (std::size_t j = 0; j < cols; ++j) out << ' ' << text::format_double(m.get(i, j));
    out << '\n';
  }
  return out.str();
}

}  // namespace phylo
