#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "phylo/error.hpp"
#include "phylo/mst.hpp"

using namespace phylo;

namespace {
DistanceMatrix fig_matrix() { return oracle::to_matrix({{0, 2, 2}, {2, 0, 1}, {2, 1, 0}}); }

std::set<std::pair<std::string, std::string>> undirected(const Tree& t) {
  std::set<std::pair<std::string, std::string>> out;
  for (const auto& e : t.edges()) {
    auto a = t.name(e.parent), b = t.name(e.child);
    out.insert(std::minmax(a, b));
  }
  return out;
}

// Textbook Kruskal with index tie-breaks, for distinct weights only.
std::set<std::pair<std::string, std::string>> plain_kruskal(const oracle::Grid& g) {
  const std::size_t n = g.size();
  std::vector<std::tuple<double, std::size_t, std::size_t>> es;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) es.emplace_back(g[i][j], i, j);
  std::sort(es.begin(), es.end());
  std::vector<std::size_t> comp(n);
  std::iota(comp.begin(), comp.end(), std::size_t{0});
  std::set<std::pair<std::string, std::string>> out;
  for (auto [w, i, j] : es) {
    if (comp[i] == comp[j]) continue;
    const auto old = comp[j];
    for (auto& c : comp)
      if (c == old) c = comp[i];
    out.insert(std::minmax(std::to_string(i + 1), std::to_string(j + 1)));
  }
  return out;
}
}  // namespace

TEST_CASE("lv counts") {
  const auto m = fig_matrix();
  CHECK(lv_counts(m, 1, 3) == std::vector<std::size_t>{1, 1, 0});
  CHECK(lv_counts(m, 0, 1) == std::vector<std::size_t>{0});
  std::mt19937_64 rng(4);
  auto g = oracle::random_symmetric(9, 5, rng);
  for (std::size_t i = 0; i < 9; ++i) {
    auto lv = lv_counts(oracle::to_matrix(g), i, 5);
    CHECK(std::accumulate(lv.begin(), lv.end(), std::size_t{0}) == 8);
  }
}

TEST_CASE("harmonic centrality") {
  DistanceMatrix m({"1", "2"}, Symmetry::Asymmetric);
  m.set(0, 1, 0.2);
  m.set(1, 0, 0.6);
  auto q = harmonic_centrality(m);
  CHECK(q[0] == doctest::Approx(0.2));
  CHECK(q[1] == doctest::Approx(0.6));
  auto z = harmonic_centrality(oracle::to_matrix({{0, 0, 4}, {0, 0, 4}, {4, 4, 0}}));
  CHECK(z[0] < 1e-8);
  CHECK(z[2] == doctest::Approx(4));
  CHECK(harmonic_centrality(fig_matrix(), {1}) == std::vector<double>{0});
  // harmonic mean is bounded below by the smallest distance
  auto f = harmonic_centrality(fig_matrix());
  CHECK(f[1] >= 1);
  CHECK(f[1] == doctest::Approx(2.0 / 1.5));
}

TEST_CASE("goeburst on the hamming figure matrix") {
  auto t = run_goeburst(fig_matrix());
  CHECK(undirected(t) == std::set<std::pair<std::string, std::string>>{{"2", "3"}, {"1", "2"}});
  CHECK(t.name(t.root()) == "2");
  CHECK(write_newick(t) == "(1:2,3:1)2;");
  CHECK(t.total_length() == 3);
}

TEST_CASE("goeburst small cases") {
  CHECK(write_newick(run_goeburst(oracle::to_matrix({{0, 4}, {4, 0}}))) == "(2:4)1;");
  CHECK(write_newick(run_goeburst(oracle::to_matrix({{0}}))) == "1;");
  DistanceMatrix a({"a", "b"}, Symmetry::Asymmetric);
  a.set(0, 1, 1);
  a.set(1, 0, 2);
  CHECK_THROWS_AS(run_goeburst(a), Error);
}

TEST_CASE("goeburst prefers edges between richer endpoints") {
  // 1-2 and 3-4 both at distance 1; node 3 has an extra single-locus variant (5).
  auto g = oracle::Grid{{0, 1, 3, 3, 3}, {1, 0, 3, 3, 3}, {3, 3, 0, 1, 1}, {3, 3, 1, 0, 2}, {3, 3, 1, 2, 0}};
  auto t = run_goeburst(oracle::to_matrix(g));
  CHECK(t.name(t.root()) == "3");
  CHECK(t.total_length() == 6);
}

TEST_CASE("occurrence frequency breaks remaining ties") {
  // 1 and 2 are identical profiles; 3 is one locus away from both.
  Dataset ds({{"1", {"1", "1"}}, {"2", {"1", "1"}}, {"3", {"2", "1"}}, {"4", {"3", "1"}}}, DatasetKind::Categorical);
  CHECK(profile_frequencies(ds) == std::vector<std::size_t>{2, 2, 1, 1});
  auto m = oracle::to_matrix({{0, 0, 1, 1}, {0, 0, 1, 1}, {1, 1, 0, 1}, {1, 1, 1, 0}});
  auto with = run_goeburst(m, 3, &ds);
  CHECK(with.total_length() == 2);
  CHECK(with.name(with.root()) == "3");
}

TEST_CASE("goeburst weight is the minimum spanning weight") {
  std::mt19937_64 rng(12);
  for (int round = 0; round < 60; ++round) {
    const std::size_t n = 2 + round % 6;
    auto g = oracle::random_symmetric(n, 4, rng);
    auto t = run_goeburst(oracle::to_matrix(g));
    CHECK(t.edges().size() == n - 1);
    CHECK(t.total_length() == oracle::brute_mst_weight(g));
    CHECK(write_newick(run_goeburst(oracle::to_matrix(g))) == write_newick(t));
  }
}

TEST_CASE("full-depth goeburst with distinct weights is plain kruskal") {
  std::mt19937_64 rng(19);
  for (int round = 0; round < 30; ++round) {
    auto g = oracle::distinct_symmetric(7, rng);
    CHECK(undirected(run_goeburst(oracle::to_matrix(g), 40)) == plain_kruskal(g));
  }
}

TEST_CASE("edmonds examples") {
  auto t = run_edmonds(fig_matrix());
  CHECK(t.total_length() == 3);
  CHECK(t.name(t.root()) == "2");

  DistanceMatrix m({"1", "2"}, Symmetry::Asymmetric);
  m.set(0, 1, 0.2);
  m.set(1, 0, 0.6);
  auto two = run_edmonds(m);
  CHECK(two.name(two.root()) == "1");
  REQUIRE(two.edges().size() == 1);
  CHECK(two.edges()[0] == Edge{0, 1, 0.2});

  CHECK(write_newick(run_edmonds(oracle::to_matrix({{0}}))) == "1;");
}

TEST_CASE("edmonds weight is the minimum arborescence weight") {
  std::mt19937_64 rng(77);
  for (int round = 0; round < 80; ++round) {
    const std::size_t n = 2 + round % 4;
    const bool symmetric = round % 3 == 0;
    auto g = symmetric ? oracle::random_symmetric(n, 5, rng) : oracle::random_asymmetric(n, 5, rng);
    auto t = run_edmonds(oracle::to_matrix(g, symmetric ? Symmetry::Symmetric : Symmetry::Asymmetric));
    CHECK(t.edges().size() == n - 1);
    CHECK(t.total_length() == oracle::brute_arborescence_weight(g));
  }
}

TEST_CASE("edmonds on symmetric input roots at the most central node") {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 20; ++round) {
    auto g = oracle::random_symmetric(9, 6, rng);
    const auto m = oracle::to_matrix(g);
    auto q = harmonic_centrality(m);
    const auto best = std::min_element(q.begin(), q.end()) - q.begin();
    auto t = run_edmonds(m);
    CHECK(t.root() == static_cast<NodeId>(best));
    CHECK(t.total_length() == run_goeburst(m).total_length());
  }
}
