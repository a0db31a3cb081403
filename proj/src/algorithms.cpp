#include "phylo/algorithms.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "phylo/error.hpp"
#include "phylo/gcp.hpp"
#include "phylo/mst.hpp"
#include "phylo/nj.hpp"

namespace phylo {

namespace {
constexpr std::array<std::string_view, 11> kNames{
    "sl", "cl", "upgma", "upgmc", "wpgma", "wpgmc", "saitounei", "studierkeppler", "unj", "goeburst", "edmonds",
};
}  // namespace

std::span<const std::string_view> algorithm_names() noexcept { return kNames; }

bool is_algorithm(std::string_view name) noexcept {
  return std::find(kNames.begin(), kNames.end(), name) != kNames.end();
}

Tree infer_tree(std::string_view name, const DistanceMatrix& matrix, const AlgorithmOptions& options) {
  if (auto v = gcp_from_name(name)) return run_gcp(matrix, *v);
  if (auto v = nj_from_name(name)) return run_nj(matrix, *v);
  if (name == "goeburst") return run_goeburst(matrix, options.lvs, options.dataset);
  if (name == "edmonds") return run_edmonds(matrix);
  fail(ErrorKind::InvalidType, "unknown algorithm '" + std::string(name) + "'");
}

}  // namespace phylo
