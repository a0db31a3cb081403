#include "phylo/bench.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "phylo/algorithms.hpp"
#include "phylo/error.hpp"
#include "phylo/text.hpp"

namespace phylo {

Dataset synthetic_dataset(std::size_t n, std::size_t loci, std::size_t alphabet, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> allele(1, std::max<std::size_t>(alphabet, 1));
  std::vector<Profile> profiles;
  profiles.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Profile p{"P" + std::to_string(i + 1), {}};
    p.loci.reserve(loci);
    for (std::size_t l = 0; l < loci; ++l) p.loci.push_back(std::to_string(allele(rng)));
    profiles.push_back(std::move(p));
  }
  return Dataset(std::move(profiles), DatasetKind::Categorical);
}

bool is_bench_algorithm(std::string_view name) noexcept { return name == "goeburstfull" || is_algorithm(name); }

namespace {

// Linux only: "5" resets the peak counter, VmHWM reads it back.
void reset_peak_memory() {
  std::ofstream f("/proc/self/clear_refs");
  if (f) f << "5";
}

double peak_memory_mb() {
  std::ifstream f("/proc/self/status");
  std::string line;
  while (std::getline(f, line)) {
    if (line.rfind("VmHWM:", 0) == 0) {
      std::istringstream s(line.substr(6));
      double kb = 0;
      s >> kb;
      return kb / 1024.0;
    }
  }
  return 0;
}

}  // namespace

std::vector<BenchRecord> run_bench(const BenchConfig& cfg) {
  if (!is_bench_algorithm(cfg.algorithm)) fail(ErrorKind::InvalidType, "unknown algorithm '" + cfg.algorithm + "'");
  if (cfg.iterations == 0) fail(ErrorKind::InvalidInput, "iterations must be at least 1");
  const bool full = cfg.algorithm == "goeburstfull";
  const std::string name = full ? "goeburst" : cfg.algorithm;

  std::vector<BenchRecord> records;
  for (auto n : cfg.sizes) {
    const auto ds = synthetic_dataset(n, cfg.loci, cfg.alphabet, cfg.seed);
    AlgorithmOptions opts;
    opts.lvs = full ? cfg.loci : 3;
    opts.dataset = &ds;
    const auto eager = cfg.mode == EvalMode::Eager ? build_matrix(ds, Metric::Hamming, EvalMode::Eager) : DistanceMatrix{};

    BenchRecord rec{cfg.algorithm, n, cfg.mode, 0, 0, {}};
    Tree last;
    reset_peak_memory();
    std::chrono::steady_clock::duration total{};
    for (std::size_t it = 0; it < cfg.warmups + cfg.iterations; ++it) {
      const auto lazy = cfg.mode == EvalMode::Lazy ? build_matrix(ds, Metric::Hamming, EvalMode::Lazy) : DistanceMatrix{};
      const auto& m = cfg.mode == EvalMode::Lazy ? lazy : eager;
      const auto start = std::chrono::steady_clock::now();
      last = infer_tree(name, m, opts);
      const auto stop = std::chrono::steady_clock::now();
      if (it >= cfg.warmups) total += stop - start;
    }
    rec.time_ms = std::chrono::duration<double, std::milli>(total).count() / static_cast<double>(cfg.iterations);
    rec.mem_mb = peak_memory_mb();
    rec.newick = write_newick(last);
    records.push_back(std::move(rec));
  }
  return records;
}

double fit_exponent(const std::vector<BenchRecord>& records, double floor_ms) {
  auto fit = [](const std::vector<const BenchRecord*>& rs) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto* r : rs) {
      const double x = std::log(static_cast<double>(r->n));
      const double y = std::log(r->time_ms);
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    const double k = static_cast<double>(rs.size());
    return (k * sxy - sx * sy) / (k * sxx - sx * sx);
  };
  auto distinct = [](const std::vector<const BenchRecord*>& rs) {
    std::set<std::size_t> ns;
    for (const auto* r : rs) ns.insert(r->n);
    return ns.size();
  };

  std::vector<const BenchRecord*> all, above;
  for (const auto& r : records) {
    if (r.n == 0 || !(r.time_ms > 0)) continue;
    all.push_back(&r);
    if (r.time_ms > floor_ms) above.push_back(&r);
  }
  if (distinct(all) < 3) fail(ErrorKind::InvalidInput, "exponent fit needs at least three distinct sizes");
  return fit(distinct(above) >= 2 ? above : all);
}

std::string_view bench_csv_header() noexcept { return "algorithm,n,mode,time_ms,mem_mb"; }

std::string to_csv(const BenchRecord& r) {
  std::ostringstream s;
  s << r.algorithm << ',' << r.n << ',' << (r.mode == EvalMode::Eager ? "eager" : "lazy") << ','
    << text::format_double(r.time_ms) << ',' << text::format_double(r.mem_mb);
  return s.str();
}

}  // namespace phylo
