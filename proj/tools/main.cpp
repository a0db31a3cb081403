#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "phylo/bench.hpp"
#include "phylo/error.hpp"
#include "phylo/log.hpp"
#include "phylo/text.hpp"
#include "phylo/workflow.hpp"

namespace {

int run_bench_command(int argc, char** argv) {
  phylo::BenchConfig cfg;
  std::string mode = "eager";
  CLI::App app{"Times a tree-inference algorithm over synthetic profiles", "phylo bench"};
  app.add_option("-a,--algorithm", cfg.algorithm, "algorithm name, or goeburstfull")->required();
  app.add_option("-n,--sizes", cfg.sizes, "profile counts")->required()->delimiter(',');
  app.add_option("--warmups", cfg.warmups, "unmeasured runs per size")->capture_default_str();
  app.add_option("--iterations", cfg.iterations, "measured runs per size")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--mode", mode, "eager or lazy")->capture_default_str()->check(CLI::IsMember({"eager", "lazy"}));
  app.add_option("--seed", cfg.seed, "synthetic data seed")->capture_default_str();
  app.add_option("--loci", cfg.loci, "loci per profile")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--alphabet", cfg.alphabet, "alleles per locus")->capture_default_str()->check(CLI::PositiveNumber);
  bool fit = false;
  app.add_flag("--fit", fit, "print the fitted log-log exponent after the table");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  cfg.algorithm = phylo::text::lower(cfg.algorithm);
  cfg.mode = mode == "lazy" ? phylo::EvalMode::Lazy : phylo::EvalMode::Eager;
  try {
    const auto records = phylo::run_bench(cfg);
    std::cout << phylo::bench_csv_header() << '\n';
    for (const auto& r : records) std::cout << phylo::to_csv(r) << '\n';
    if (fit) std::cerr << "exponent " << phylo::fit_exponent(records) << '\n';
    return 0;
  } catch (const phylo::Error& e) {
    phylo::log::error(e.what());
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1 && phylo::text::lower(argv[1]) == "bench") return run_bench_command(argc - 1, argv + 1);
  return phylo::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout);
}
