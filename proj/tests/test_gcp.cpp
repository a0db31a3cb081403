#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "phylo/error.hpp"
#include "phylo/gcp.hpp"

using namespace phylo;

namespace {
constexpr GcpVariant kAll[] = {GcpVariant::SingleLinkage, GcpVariant::CompleteLinkage, GcpVariant::Upgma,
                               GcpVariant::Upgmc,         GcpVariant::Wpgma,           GcpVariant::Wpgmc};

DistanceMatrix fig_matrix() { return oracle::to_matrix({{0, 2, 2}, {2, 0, 1}, {2, 1, 0}}); }

bool same_edges(const std::vector<Edge>& a, const std::vector<Edge>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].parent != b[i].parent || a[i].child != b[i].child || std::abs(a[i].length - b[i].length) > 1e-9)
      return false;
  return true;
}
}  // namespace

TEST_CASE("reduction formulas") {
  CHECK(reduce_dissimilarity(GcpVariant::Upgma, 2, 4, 9, 1, 3) == 3.5);
  CHECK(reduce_dissimilarity(GcpVariant::Wpgmc, 2, 2, 2, 1, 1) == 1.5);
  CHECK(reduce_dissimilarity(GcpVariant::SingleLinkage, 7, 7, 1, 2, 5) == 7);
  CHECK(reduce_dissimilarity(GcpVariant::SingleLinkage, 3, 7, 1, 1, 1) == 3);
  CHECK(reduce_dissimilarity(GcpVariant::CompleteLinkage, 3, 7, 1, 1, 1) == 7);
  CHECK(reduce_dissimilarity(GcpVariant::Wpgma, 3, 7, 1, 1, 5) == 5);
  // (1*2 + 3*4)/4 - 1*3*2/16
  CHECK(reduce_dissimilarity(GcpVariant::Upgmc, 2, 4, 2, 1, 3) == doctest::Approx(3.5 - 0.375));
}

TEST_CASE("names") {
  CHECK(gcp_from_name("upgmc") == GcpVariant::Upgmc);
  CHECK_FALSE(gcp_from_name("UPGMC"));
  for (auto v : kAll) CHECK(gcp_from_name(to_string(v)) == v);
}

TEST_CASE("hamming figure matrix with upgma and single linkage") {
  const auto upgma = run_gcp(fig_matrix(), GcpVariant::Upgma);
  CHECK(write_newick(upgma) == "(1:1,(2:0.5,3:0.5):0.5);");
  CHECK(upgma.edges()[0] == Edge{3, 1, 0.5});
  CHECK(upgma.edges()[1] == Edge{3, 2, 0.5});
  CHECK(write_newick(run_gcp(fig_matrix(), GcpVariant::SingleLinkage)) == write_newick(upgma));
}

TEST_CASE("single profile and asymmetric input") {
  auto t = run_gcp(oracle::to_matrix({{0}}), GcpVariant::Upgma);
  CHECK(t.edges().empty());
  CHECK(write_newick(t) == "1;");
  DistanceMatrix a({"a", "b"}, Symmetry::Asymmetric);
  a.set(0, 1, 1);
  a.set(1, 0, 2);
  CHECK_THROWS_AS(run_gcp(a, GcpVariant::Upgma), Error);
  a.set(1, 0, 1);
  CHECK_NOTHROW(run_gcp(a, GcpVariant::Upgma));
}

TEST_CASE("ties join the smallest slot pair first") {
  auto t = run_gcp(oracle::to_matrix({{0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}, {1, 1, 1, 0}}), GcpVariant::Upgma);
  CHECK(t.edges()[0] == Edge{4, 0, 0.5});
  CHECK(t.edges()[1] == Edge{4, 1, 0.5});
  CHECK(t.edges()[2] == Edge{5, 4, 0});
  CHECK(t.edges()[3] == Edge{5, 2, 0.5});
}

TEST_CASE("dendrogram shape and ultrametricity") {
  std::mt19937_64 rng(3);
  for (int round = 0; round < 40; ++round) {
    const std::size_t n = 2 + round % 9;
    auto m = oracle::to_matrix(oracle::random_symmetric(n, 20, rng));
    for (auto v : kAll) {
      auto t = run_gcp(m, v);
      CHECK(t.edges().size() == 2 * n - 2);
      CHECK(t.node_count() == 2 * n - 1);
      CHECK(t.root() == 2 * n - 2);
      if (v == GcpVariant::Upgma || v == GcpVariant::Wpgma || v == GcpVariant::SingleLinkage ||
          v == GcpVariant::CompleteLinkage) {
        auto above = t.lengths_above();
        auto par = t.parents();
        double first = -1;
        for (NodeId leaf = 0; leaf < n; ++leaf) {
          double depth = 0;
          for (NodeId x = leaf; x != t.root(); x = par[x]) depth += above[x];
          if (first < 0) first = depth;
          CHECK(depth == doctest::Approx(first).epsilon(1e-12));
        }
      }
    }
  }
}

TEST_CASE("matches the naive reference on random matrices") {
  std::mt19937_64 rng(17);
  for (int round = 0; round < 150; ++round) {
    const std::size_t n = 1 + round % 8;
    const auto g = round % 2 ? oracle::distinct_symmetric(n, rng) : oracle::random_symmetric(n, 6, rng);
    const auto m = oracle::to_matrix(g);
    for (auto v : kAll) CHECK(same_edges(run_gcp(m, v).edges(), oracle::naive_gcp(g, v)));
  }
}

TEST_CASE("single and complete linkage only depend on the order of distances") {
  std::mt19937_64 rng(23);
  for (int round = 0; round < 30; ++round) {
    auto g = oracle::distinct_symmetric(7, rng);
    auto warped = g;
    for (auto& row : warped)
      for (auto& x : row) x = x == 0 ? 0 : std::exp(x / 3.0) + x * x;
    for (auto v : {GcpVariant::SingleLinkage, GcpVariant::CompleteLinkage}) {
      auto a = run_gcp(oracle::to_matrix(g), v).edges();
      auto b = run_gcp(oracle::to_matrix(warped), v).edges();
      REQUIRE(a.size() == b.size());
      for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].parent == b[i].parent);
        CHECK(a[i].child == b[i].child);
      }
    }
  }
}

TEST_CASE("centroid variants accept negative reductions") {
  auto t = run_gcp(oracle::to_matrix({{0, 1, 10}, {1, 0, 1}, {10, 1, 0}}), GcpVariant::Wpgmc);
  CHECK(t.edges().size() == 4);
}
