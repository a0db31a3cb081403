#include "phylo/distance.hpp"

#include <cmath>
#include <exception>
#include <memory>
#include <span>

#include "phylo/error.hpp"

#ifdef PHYLO_HAVE_OPENMP
#include <omp.h>
#endif

namespace phylo {

std::optional<Metric> metric_from_name(std::string_view name) {
  if (name == "hamming") return Metric::Hamming;
  if (name == "grapetree") return Metric::GrapeTree;
  if (name == "kimura") return Metric::Kimura;
  return std::nullopt;
}

std::string_view to_string(Metric metric) noexcept {
  switch (metric) {
    case Metric::Hamming: return "hamming";
    case Metric::GrapeTree: return "grapetree";
    case Metric::Kimura: return "kimura";
  }
  return "?";
}

Symmetry symmetry_of(Metric metric) noexcept {
  return metric == Metric::GrapeTree ? Symmetry::Asymmetric : Symmetry::Symmetric;
}

namespace {

void require_same_length(const Profile& a, const Profile& b) {
  if (a.loci.size() != b.loci.size())
    fail(ErrorKind::InvalidInput, "profiles '" + a.id + "' and '" + b.id + "' have different locus counts");
}

bool is_transition(char a, char b) {
  auto purine = [](char c) { return c == 'A' || c == 'G'; };
  auto pyrimidine = [](char c) { return c == 'C' || c == 'T' || c == 'U'; };
  return (purine(a) && purine(b)) || (pyrimidine(a) && pyrimidine(b));
}

using Codes = std::span<const std::uint32_t>;

double hamming_codes(Codes a, Codes b) noexcept {
  std::size_t d = 0;
  for (std::size_t l = 0; l < a.size(); ++l) d += a[l] != b[l];
  return static_cast<double>(d);
}

double grapetree_codes(Codes from, Codes to, const Dataset& ds, std::size_t j) {
  std::size_t diff = 0, present = 0;
  for (std::size_t l = 0; l < from.size(); ++l) {
    if (to[l] == Dataset::kMissingCode) continue;
    ++present;
    diff += from[l] != to[l];
  }
  if (present == 0) throw DomainError("profile '" + ds[j].id + "' has no present loci");
  return static_cast<double>(diff) / static_cast<double>(present);
}

/// Cell kernel shared by every build path.
double cell(const Dataset& ds, Metric metric, std::size_t i, std::size_t j) {
  switch (metric) {
    case Metric::Hamming: return hamming_codes(ds.codes(i), ds.codes(j));
    case Metric::GrapeTree: return grapetree_codes(ds.codes(i), ds.codes(j), ds, j);
    case Metric::Kimura: return kimura_distance(ds[i], ds[j]);
  }
  return 0;
}

void check_compatible(const Dataset& ds, Metric metric) {
  if (metric == Metric::Kimura && ds.kind() != DatasetKind::Nucleotide)
    fail(ErrorKind::InvalidInput, "the kimura distance needs a nucleotide (FASTA) dataset");
}

}  // namespace

double hamming(const Profile& a, const Profile& b) {
  require_same_length(a, b);
  std::size_t d = 0;
  for (std::size_t l = 0; l < a.loci.size(); ++l) d += a.loci[l] != b.loci[l];
  return static_cast<double>(d);
}

double grapetree_distance(const Profile& from, const Profile& to, std::string_view missing) {
  require_same_length(from, to);
  std::size_t diff = 0, present = 0;
  for (std::size_t l = 0; l < from.loci.size(); ++l) {
    if (to.loci[l] == missing) continue;
    ++present;
    diff += from.loci[l] != to.loci[l];
  }
  if (present == 0) throw DomainError("profile '" + to.id + "' has no present loci");
  return static_cast<double>(diff) / static_cast<double>(present);
}

NucleotidePairCounts count_substitutions(const Profile& a, const Profile& b, std::string_view missing) {
  require_same_length(a, b);
  NucleotidePairCounts c;
  for (std::size_t l = 0; l < a.loci.size(); ++l) {
    const auto& x = a.loci[l];
    const auto& y = b.loci[l];
    if (x == missing || y == missing) continue;
    ++c.compared;
    if (x == y) continue;
    if (x.size() == 1 && y.size() == 1 && is_transition(x[0], y[0])) ++c.transitions;
    else ++c.transversions;
  }
  return c;
}

double kimura_from_fractions(double p, double q) {
  const double a = 1.0 - 2.0 * p - q;
  const double b = 1.0 - 2.0 * q;
  if (!(a > 0.0) || !(b > 0.0))
    throw DomainError("kimura distance undefined for P=" + std::to_string(p) + ", Q=" + std::to_string(q));
  return -0.5 * std::log(a * std::sqrt(b));
}

double kimura_distance(const Profile& a, const Profile& b) {
  auto c = count_substitutions(a, b);
  if (c.compared == 0) throw DomainError("profiles '" + a.id + "' and '" + b.id + "' share no comparable loci");
  return kimura_from_fractions(c.p(), c.q());
}

DistanceMatrix build_matrix_serial(const Dataset& ds, Metric metric) {
  check_compatible(ds, metric);
  const auto sym = symmetry_of(metric);
  DistanceMatrix m(ds.ids(), sym);
  const auto n = ds.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || (sym == Symmetry::Symmetric && j > i)) continue;
      m.set(i, j, sym == Symmetry::Symmetric ? cell(ds, metric, j, i) : cell(ds, metric, i, j));
    }
  return m;
}

namespace {

DistanceMatrix build_eager(const Dataset& ds, Metric metric) {
#ifndef PHYLO_HAVE_OPENMP
  return build_matrix_serial(ds, metric);
#else
  check_compatible(ds, metric);
  const auto sym = symmetry_of(metric);
  DistanceMatrix m(ds.ids(), sym);
  const auto n = static_cast<std::ptrdiff_t>(ds.size());
  std::exception_ptr failure;
  // Each (i, j) maps to its own storage slot, so rows can be filled concurrently.
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t ii = 0; ii < n; ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    try {
      for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j) {
        if (i == j || (sym == Symmetry::Symmetric && j > i)) continue;
        m.set(i, j, sym == Symmetry::Symmetric ? cell(ds, metric, j, i) : cell(ds, metric, i, j));
      }
    } catch (...) {
#pragma omp critical(phylo_build_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return m;
#endif
}

}  // namespace

DistanceMatrix build_matrix(const Dataset& dataset, Metric metric, EvalMode mode) {
  if (mode == EvalMode::Eager) return build_eager(dataset, metric);
  check_compatible(dataset, metric);
  auto ds = std::make_shared<const Dataset>(dataset);
  return DistanceMatrix::lazy(ds->ids(), symmetry_of(metric),
                              [ds, metric](std::size_t i, std::size_t j) { return cell(*ds, metric, i, j); });
}

}  // namespace phylo
