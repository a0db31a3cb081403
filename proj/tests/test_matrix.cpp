#include <doctest.h>

#include "phylo/error.hpp"
#include "phylo/matrix.hpp"
#include "support.hpp"

using namespace phylo;

namespace {
DistanceMatrix fig_matrix() {
  DistanceMatrix m({"1", "2", "3"}, Symmetry::Symmetric);
  m.set(0, 1, 2);
  m.set(0, 2, 2);
  m.set(1, 2, 1);
  return m;
}
}  // namespace

TEST_CASE("storage is triangular for symmetric and off-diagonal for asymmetric") {
  DistanceMatrix s({"a", "b", "c", "d"}, Symmetry::Symmetric);
  DistanceMatrix a({"a", "b", "c", "d"}, Symmetry::Asymmetric);
  CHECK(s.storage_size() == 6);
  CHECK(a.storage_size() == 12);
  s.set(3, 1, 4.5);
  CHECK(s(1, 3) == 4.5);
  a.set(3, 1, 4.5);
  CHECK(a(1, 3) == 0);
  CHECK(a(3, 1) == 4.5);
  CHECK(s(2, 2) == 0);
  CHECK_THROWS_AS(s.set(1, 1, 1.0), Error);
  s.set(1, 1, 0.0);
}

TEST_CASE("lazy cells are evaluated once, on demand") {
  std::size_t calls = 0;
  auto m = DistanceMatrix::lazy({"a", "b", "c"}, Symmetry::Symmetric, [&](std::size_t i, std::size_t j) {
    ++calls;
    return double(i + j);
  });
  CHECK(m.is_lazy());
  CHECK(m.evaluations() == 0);
  CHECK(m(2, 1) == 3);
  CHECK(m(1, 2) == 3);
  CHECK(m.evaluations() == 1);
  auto e = m.materialized();
  CHECK_FALSE(e.is_lazy());
  CHECK(m.evaluations() == 3);
  CHECK(e == m);
  CHECK(calls == 3);
}

TEST_CASE("square and triangle figures parse to the hamming figure matrix") {
  auto sq = read_matrix(data_file("fig_square.txt"), Symmetry::Asymmetric);
  auto tri = read_matrix(data_file("fig_triangle.txt"), Symmetry::Symmetric);
  const auto ref = fig_matrix();
  CHECK(tri == ref);
  CHECK(sq.has_symmetric_values());
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(sq(i, j) == ref(i, j));
  CHECK(sq.ids() == ref.ids());
}

TEST_CASE("matrix writers round-trip") {
  const auto ref = fig_matrix();
  CHECK(write_matrix(ref, Symmetry::Symmetric) == data_file("fig_triangle.txt"));
  CHECK(write_matrix(ref, Symmetry::Asymmetric) == data_file("fig_square.txt"));
  DistanceMatrix a({"x", "y"}, Symmetry::Asymmetric);
  a.set(0, 1, 0.25);
  a.set(1, 0, 1e-7);
  CHECK(read_matrix(write_matrix(a, Symmetry::Asymmetric), Symmetry::Asymmetric) == a);
  CHECK_THROWS_AS(write_matrix(a, Symmetry::Symmetric), Error);
}

TEST_CASE("malformed matrices are parse failures") {
  auto kind = [](std::string_view text, Symmetry f) {
    try {
      read_matrix(text, f);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::IoFailure;
  };
  CHECK(kind("", Symmetry::Symmetric) == ErrorKind::ParseFailure);
  CHECK(kind("x\n", Symmetry::Symmetric) == ErrorKind::ParseFailure);
  CHECK(kind("2\na\nb 1 2\n", Symmetry::Symmetric) == ErrorKind::ParseFailure);
  CHECK(kind("2\na 0 1\n", Symmetry::Asymmetric) == ErrorKind::ParseFailure);
  CHECK(kind("2\na 0 1\nb 1 q\n", Symmetry::Asymmetric) == ErrorKind::ParseFailure);
  CHECK(kind("2\na 1 1\nb 1 0\n", Symmetry::Asymmetric) == ErrorKind::ParseFailure);
  CHECK(kind("2\na\nb -1\n", Symmetry::Symmetric) == ErrorKind::ParseFailure);
}
