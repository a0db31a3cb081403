#include <doctest.h>

#include "phylo/dataset.hpp"
#include "phylo/error.hpp"
#include "support.hpp"

using namespace phylo;

namespace {
ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::IoFailure;
}
}  // namespace

TEST_CASE("fasta figure: two sequences of 120 sites") {
  auto ds = read_fasta(data_file("fig_fasta.fasta"));
  REQUIRE(ds.size() == 2);
  CHECK(ds.locus_count() == 120);
  CHECK(ds.kind() == DatasetKind::Nucleotide);
  CHECK(ds[0].id == "Sequence 1");
  CHECK(ds[1].loci[3] == "C");
  CHECK(ds.missing() == "-");
}

TEST_CASE("snp figure: two profiles of 58 sites") {
  auto ds = read_snp(data_file("fig_snp.snp"));
  REQUIRE(ds.size() == 2);
  CHECK(ds.locus_count() == 58);
  CHECK(ds.kind() == DatasetKind::Binary);
  CHECK(ds[1].id == "2");
  CHECK(ds[0].loci[1] == "1");
}

TEST_CASE("mlst figure has a header, mlva figure does not") {
  auto mlst = read_ml(data_file("fig_mlst.tsv"));
  CHECK(mlst.size() == 3);
  CHECK(mlst.locus_count() == 2);
  CHECK(mlst[2].id == "3");
  CHECK(mlst[2].loci == std::vector<std::string>{"3", "2"});

  auto mlva = read_ml(data_file("fig_mlva.tsv"));
  CHECK(mlva.size() == 3);
  CHECK(mlva.locus_count() == 2);
  CHECK(mlva[0].id == "15");
  CHECK(mlva[2].loci == std::vector<std::string>{"23", "42"});
}

TEST_CASE("interned codes agree with token equality") {
  auto ds = read_ml("ST\ta\tb\n1\t5\t0\n2\t5\t7\n");
  CHECK(ds.codes(0)[0] == ds.codes(1)[0]);
  CHECK(ds.codes(0)[1] == Dataset::kMissingCode);
  CHECK(ds.codes(1)[1] != Dataset::kMissingCode);
}

TEST_CASE("malformed datasets are parse failures") {
  CHECK(kind_of([] { read_fasta(""); }) == ErrorKind::ParseFailure);
  CHECK(kind_of([] { read_fasta(">a\nACGT\n>b\n"); }) == ErrorKind::ParseFailure);
  CHECK(kind_of([] { read_fasta("ACGT\n>a\nACGT\n"); }) == ErrorKind::ParseFailure);
  CHECK(kind_of([] { read_fasta(">a\nACGT\n>b\nACG\n"); }) == ErrorKind::ParseFailure);
  CHECK(kind_of([] { read_snp("1 0102\n"); }) == ErrorKind::ParseFailure);
  CHECK(kind_of([] { read_snp("1 01\n1 10\n"); }) == ErrorKind::ParseFailure);
  CHECK(kind_of([] { read_ml("1\t2\t3\n2\t3\n"); }) == ErrorKind::ParseFailure);
  CHECK(kind_of([] { Dataset({}, DatasetKind::Categorical); }) == ErrorKind::ParseFailure);
}
