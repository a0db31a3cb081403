#include <doctest.h>

#include <random>

#include "phylo/correction.hpp"
#include "phylo/distance.hpp"
#include "phylo/error.hpp"
#include "support.hpp"

using namespace phylo;

namespace {
Profile prof(std::string id, std::vector<std::string> loci) { return {std::move(id), std::move(loci)}; }

Dataset random_ml(std::size_t n, std::size_t loci, std::mt19937_64& rng, bool with_missing) {
  std::uniform_int_distribution<int> allele(with_missing ? 0 : 1, 4);
  std::vector<Profile> ps;
  for (std::size_t i = 0; i < n; ++i) {
    Profile p{std::to_string(i + 1), {}};
    for (std::size_t l = 0; l < loci; ++l) p.loci.push_back(std::to_string(allele(rng)));
    ps.push_back(p);
  }
  return Dataset(ps, DatasetKind::Categorical);
}
}  // namespace

TEST_CASE("hamming over the mlst figure") {
  auto m = build_matrix(read_ml(data_file("fig_mlst.tsv")), Metric::Hamming);
  CHECK(m.is_symmetric());
  CHECK(m(0, 1) == 2);
  CHECK(m(0, 2) == 2);
  CHECK(m(1, 2) == 1);
  CHECK(hamming(prof("a", {"1", "0"}), prof("b", {"1", "0"})) == 0);
  CHECK(hamming(prof("a", {"1", "0"}), prof("b", {"1", "3"})) == 1);
}

TEST_CASE("hamming over the snp figure counts 34 differences") {
  auto m = build_matrix(read_snp(data_file("fig_snp.snp")), Metric::Hamming);
  CHECK(m(0, 1) == 34);
}

TEST_CASE("grapetree distance is directional") {
  auto a = prof("a", {"1", "2", "0", "4"});
  auto b = prof("b", {"1", "3", "5", "0"});
  // toward b: loci 0..2 present, one mismatch at locus 1 and one at 2
  CHECK(grapetree_distance(a, b) == doctest::Approx(2.0 / 3.0));
  // toward a: loci 0, 1, 3 present; mismatches at 1 and 3
  CHECK(grapetree_distance(b, a) == doctest::Approx(2.0 / 3.0));
  auto c = prof("c", {"1", "2", "0", "0"});
  CHECK(grapetree_distance(a, c) == 0);
  CHECK(grapetree_distance(c, a) == doctest::Approx(1.0 / 3.0));
  CHECK_THROWS_AS(grapetree_distance(a, prof("z", {"0", "0", "0", "0"})), DomainError);
  auto m = build_matrix(Dataset({a, b, c}, DatasetKind::Categorical), Metric::GrapeTree);
  CHECK_FALSE(m.is_symmetric());
  CHECK(m(2, 0) == doctest::Approx(1.0 / 3.0));
  CHECK(m(0, 2) == 0);
}

TEST_CASE("grapetree equals hamming over L without missing values") {
  std::mt19937_64 rng(11);
  auto ds = random_ml(8, 9, rng, false);
  auto h = build_matrix(ds, Metric::Hamming);
  auto g = build_matrix(ds, Metric::GrapeTree);
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) CHECK(g(i, j) == doctest::Approx(h(i, j) / 9.0));
}

TEST_CASE("hamming is a bounded metric") {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 20; ++round) {
    auto ds = random_ml(7, 6, rng, true);
    auto m = build_matrix(ds, Metric::Hamming);
    for (std::size_t i = 0; i < 7; ++i)
      for (std::size_t j = 0; j < 7; ++j) {
        CHECK(m(i, j) >= 0);
        CHECK(m(i, j) <= 6);
        CHECK(m(i, j) == m(j, i));
        for (std::size_t k = 0; k < 7; ++k) CHECK(m(i, k) <= m(i, j) + m(j, k));
      }
  }
}

TEST_CASE("kimura spot values") {
  CHECK(kimura_from_fractions(0, 0) == 0);
  CHECK(kimura_from_fractions(0.1, 0.05) == doctest::Approx(0.1701811651403470).epsilon(1e-12));
  CHECK_THROWS_AS(kimura_from_fractions(0.5, 0), DomainError);
  CHECK_THROWS_AS(kimura_from_fractions(0.1, 0.5), DomainError);
  auto ds = read_fasta(data_file("fig_fasta.fasta"));
  CHECK(kimura_distance(ds[0], ds[1]) == doctest::Approx(0.008385904414353613).epsilon(1e-12));
}

TEST_CASE("kimura counts transitions and transversions, skipping gaps") {
  auto c = count_substitutions(prof("a", {"A", "C", "G", "T", "-", "A"}), prof("b", {"G", "T", "C", "T", "A", "-"}));
  CHECK(c.transitions == 2);
  CHECK(c.transversions == 1);
  CHECK(c.compared == 4);
  CHECK(kimura_distance(prof("a", {"A", "C"}), prof("b", {"A", "C"})) == 0);
  CHECK_THROWS_AS(kimura_distance(prof("a", {"-"}), prof("b", {"A"})), DomainError);
}

TEST_CASE("kimura increases with transitions") {
  double last = -1;
  for (int k = 0; k < 40; ++k) {
    const double v = kimura_from_fractions(k * 0.01, 0.05);
    CHECK(v > last);
    last = v;
  }
}

TEST_CASE("metric and dataset kind must agree") {
  auto ds = read_ml(data_file("fig_mlst.tsv"));
  try {
    build_matrix(ds, Metric::Kimura);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidInput);
  }
}

TEST_CASE("single profile gives a 1x1 zero matrix") {
  auto m = build_matrix(Dataset({prof("x", {"1"})}, DatasetKind::Categorical), Metric::Hamming);
  CHECK(m.size() == 1);
  CHECK(m(0, 0) == 0);
}

TEST_CASE("lazy, eager and serial builds agree cell for cell") {
  std::mt19937_64 rng(99);
  for (int round = 0; round < 10; ++round) {
    auto ds = random_ml(12, 5, rng, true);
    for (auto metric : {Metric::Hamming, Metric::GrapeTree}) {
      auto eager = build_matrix(ds, metric, EvalMode::Eager);
      auto lazy = build_matrix(ds, metric, EvalMode::Lazy);
      auto serial = build_matrix_serial(ds, metric);
      CHECK(lazy.is_lazy());
      CHECK(lazy.evaluations() == 0);
      CHECK(eager == serial);
      CHECK(lazy == eager);
    }
  }
  auto fasta = read_fasta(data_file("fig_fasta.fasta"));
  CHECK(build_matrix(fasta, Metric::Kimura, EvalMode::Lazy) == build_matrix_serial(fasta, Metric::Kimura));
}

TEST_CASE("parallel build reports domain errors") {
  Dataset ds({prof("a", {"-", "-"}), prof("b", {"A", "C"}), prof("c", {"A", "G"})}, DatasetKind::Nucleotide);
  CHECK_THROWS_AS(build_matrix(ds, Metric::Kimura, EvalMode::Eager), DomainError);
  CHECK_THROWS_AS(build_matrix_serial(ds, Metric::Kimura), DomainError);
}

TEST_CASE("jukes-cantor spot values") {
  CHECK(jukes_cantor(0) == 0);
  CHECK(jukes_cantor(0.5) == doctest::Approx(0.8239592165010823).epsilon(1e-12));
  CHECK(jukes_cantor(0.25) == doctest::Approx(0.3040988310811233).epsilon(1e-12));
  CHECK_THROWS_AS(jukes_cantor(0.75), DomainError);
  CHECK_THROWS_AS(jukes_cantor(-0.1), DomainError);
}

TEST_CASE("jukes-cantor is monotone and never shrinks") {
  double last = -1;
  for (int k = 0; k < 74; ++k) {
    const double h = k * 0.01;
    const double v = jukes_cantor(h);
    CHECK(v > last);
    CHECK(v >= h);
    last = v;
  }
}

TEST_CASE("correcting a matrix") {
  DistanceMatrix m({"a", "b", "c"}, Symmetry::Symmetric);
  m.set(0, 1, 1);
  m.set(0, 2, 2);
  m.set(1, 2, 0);
  auto c = correct(m, Correction::JukesCantor, 4);
  CHECK(c.is_symmetric());
  CHECK(c(0, 1) == doctest::Approx(0.3040988310811233));
  CHECK(c(2, 0) == doctest::Approx(0.8239592165010823));
  CHECK(c(1, 2) == 0);
  CHECK_THROWS_AS(correct(m, Correction::JukesCantor), DomainError);

  DistanceMatrix a({"a", "b"}, Symmetry::Asymmetric);
  a.set(0, 1, 0.5);
  a.set(1, 0, 0.25);
  auto ca = correct(a, Correction::JukesCantor);
  CHECK_FALSE(ca.is_symmetric());
  CHECK(ca(0, 1) == doctest::Approx(0.8239592165010823));
  CHECK(ca(1, 0) == doctest::Approx(0.3040988310811233));
  CHECK(correction_from_name("jukescantor") == Correction::JukesCantor);
  CHECK_FALSE(correction_from_name("kimura"));
}
