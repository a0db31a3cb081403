#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "phylo/dataset.hpp"
#include "phylo/distance.hpp"

namespace phylo {

struct BenchConfig {
  std::string algorithm;             // a workflow algorithm name or "goeburstfull"
  std::vector<std::size_t> sizes;    // profile counts
  std::size_t warmups = 10;
  std::size_t iterations = 20;
  EvalMode mode = EvalMode::Eager;
  std::uint64_t seed = 1;
  std::size_t loci = 7;
  std::size_t alphabet = 10;
};

struct BenchRecord {
  std::string algorithm;
  std::size_t n = 0;
  EvalMode mode = EvalMode::Eager;
  double time_ms = 0;   // mean wall-clock time per iteration
  double mem_mb = 0;    // peak resident set during the measurement; 0 when unavailable
  std::string newick;   // canonical tree of the last iteration
};

/// Uniform random alleles 1..alphabet at each locus; ids are "P1".."Pn".
Dataset synthetic_dataset(std::size_t n, std::size_t loci, std::size_t alphabet, std::uint64_t seed);

bool is_bench_algorithm(std::string_view name) noexcept;

/// Times the algorithm over Hamming distances of a synthetic dataset per size.
/// Eager mode builds the matrix before timing; lazy mode hands the algorithm a
/// fresh lazy matrix each iteration, so cell evaluation is timed.
std::vector<BenchRecord> run_bench(const BenchConfig& config);

/// Least-squares slope of log(time) against log(n) over records above the
/// 5 ms noise floor. Falls back to every record when fewer than two sizes
/// clear the floor. Needs at least three distinct sizes.
double fit_exponent(const std::vector<BenchRecord>& records, double floor_ms = 5.0);

std::string_view bench_csv_header() noexcept;
std::string to_csv(const BenchRecord& record);

}  // namespace phylo
