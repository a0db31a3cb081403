#include "phylo/workflow.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

#include "phylo/algorithms.hpp"
#include "phylo/correction.hpp"
#include "phylo/distance.hpp"
#include "phylo/error.hpp"
#include "phylo/lbr.hpp"
#include "phylo/log.hpp"
#include "phylo/text.hpp"

namespace phylo {

namespace {

struct StageInfo {
  CommandKind kind;
  std::string_view name;
  std::vector<std::string_view> types;
  std::vector<std::string_view> options;
};

const std::vector<StageInfo>& registry() {
  static const std::vector<StageInfo> stages = [] {
    std::vector<std::string_view> algorithms(algorithm_names().begin(), algorithm_names().end());
    return std::vector<StageInfo>{
        {CommandKind::Distance, "distance", {"hamming", "grapetree", "kimura"}, {"dataset", "out", "mode"}},
        {CommandKind::Correction, "correction", {"jukescantor"}, {"matrix", "out"}},
        {CommandKind::Algorithm, "algorithm", algorithms, {"matrix", "out", "lvs"}},
        {CommandKind::Optimization, "optimization", {"lbr"}, {"tree", "matrix", "out"}},
    };
  }();
  return stages;
}

const StageInfo& stage(CommandKind kind) {
  return registry()[static_cast<std::size_t>(kind)];
}

std::string_view long_option(std::string_view alias) {
  if (alias == "o") return "out";
  if (alias == "d") return "dataset";
  if (alias == "m") return "matrix";
  if (alias == "t") return "tree";
  if (alias == "l") return "lvs";
  return {};
}

void add_option(CommandSpec& spec, std::string_view token) {
  const auto eq = token.find('=');
  std::string_view name;
  if (token.starts_with("--")) {
    name = token.substr(2, eq == std::string_view::npos ? std::string_view::npos : eq - 2);
  } else if (token.starts_with("-")) {
    name = long_option(text::lower(token.substr(1, eq == std::string_view::npos ? std::string_view::npos : eq - 1)));
  }
  const auto folded = text::lower(name);
  const auto& allowed = stage(spec.kind).options;
  if (folded.empty() || std::find(allowed.begin(), allowed.end(), folded) == allowed.end()) {
    log::warning("ignoring unknown option '" + std::string(token) + "' for " + std::string(stage(spec.kind).name));
    return;
  }
  if (eq == std::string_view::npos || eq + 1 == token.size()) {
    log::warning("ignoring option '" + std::string(token) + "' without a value");
    return;
  }
  if (!spec.options.emplace(folded, std::string(token.substr(eq + 1))).second)
    log::warning("ignoring duplicate option '" + std::string(token) + "'");
}

CommandSpec parse_segment(const std::vector<std::string>& seg) {
  if (seg.empty()) fail(ErrorKind::NoCommand, "empty command between ':' separators");
  const auto name = text::lower(seg[0]);
  const auto kind = command_from_name(name);
  if (!kind) fail(ErrorKind::InvalidCommand, "unknown command '" + seg[0] + "'");
  if (seg.size() < 2 || seg[1].starts_with("-")) fail(ErrorKind::MissingType, "command '" + name + "' has no type");
  CommandSpec spec{*kind, text::lower(seg[1]), {}};
  const auto& types = stage(*kind).types;
  if (std::find(types.begin(), types.end(), spec.type) == types.end())
    fail(ErrorKind::InvalidType, "unknown " + name + " type '" + seg[1] + "'");
  for (std::size_t i = 2; i < seg.size(); ++i) {
    if (!seg[i].starts_with("-")) {
      log::warning("ignoring stray argument '" + seg[i] + "'");
      continue;
    }
    add_option(spec, seg[i]);
  }
  return spec;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::IoFailure, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << content) || !out.flush()) fail(ErrorKind::IoFailure, "cannot write '" + path + "'");
}

const std::string* option(const CommandSpec& c, const std::string& name) {
  auto it = c.options.find(name);
  return it == c.options.end() ? nullptr : &it->second;
}

Dataset load_dataset(const FileRef& ref) {
  const auto content = read_file(ref.path);
  if (ref.format == "fasta") return read_fasta(content);
  if (ref.format == "snp") return read_snp(content);
  if (ref.format == "ml") return read_ml(content);
  fail(ErrorKind::InvalidType, "unknown dataset format '" + ref.format + "'");
}

Symmetry matrix_format(const std::string& format) {
  if (format == "symmetric") return Symmetry::Symmetric;
  if (format == "asymmetric") return Symmetry::Asymmetric;
  fail(ErrorKind::InvalidType, "unknown matrix format '" + format + "'");
}

Tree load_tree(const FileRef& ref) {
  if (ref.format != "newick" && ref.format != "nexus")
    fail(ErrorKind::InvalidType, "unknown tree format '" + ref.format + "'");
  const auto content = read_file(ref.path);
  return ref.format == "newick" ? read_newick(content) : read_nexus(content);
}

void emit_matrix(const CommandSpec& c, const DistanceMatrix& m) {
  if (const auto* out = option(c, "out")) {
    const auto ref = FileRef::parse(*out);
    const auto format = matrix_format(ref.format);
    write_file(ref.path, write_matrix(m, format));
  }
}

void emit_tree(const CommandSpec& c, const Tree& t) {
  if (const auto* out = option(c, "out")) {
    const auto ref = FileRef::parse(*out);
    if (ref.format == "newick")
      write_file(ref.path, write_newick(t) + "\n");
    else if (ref.format == "nexus")
      write_file(ref.path, write_nexus(t));
    else
      fail(ErrorKind::InvalidType, "unknown tree format '" + ref.format + "'");
  }
}

std::optional<std::size_t> positive_count(const std::string& s) {
  std::size_t k = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), k);
  if (ec != std::errc{} || end != s.data() + s.size() || k == 0) return std::nullopt;
  return k;
}

// Resolves the matrix input: an explicit file wins over the context value.
DistanceMatrix& matrix_input(const CommandSpec& c, WorkflowContext& ctx) {
  if (const auto* ref = option(c, "matrix")) {
    const auto file = FileRef::parse(*ref);
    ctx.matrix = read_matrix(read_file(file.path), matrix_format(file.format));
    ctx.count_scale.reset();
  }
  if (!ctx.matrix) fail(ErrorKind::MissingInput, c.type + " needs a distance matrix (--matrix)");
  return *ctx.matrix;
}

void run_distance(const CommandSpec& c, WorkflowContext& ctx) {
  if (const auto* ref = option(c, "dataset")) ctx.dataset = load_dataset(FileRef::parse(*ref));
  if (!ctx.dataset) fail(ErrorKind::MissingInput, c.type + " needs a dataset (--dataset)");
  auto mode = EvalMode::Lazy;
  if (const auto* m = option(c, "mode")) {
    const auto v = text::lower(*m);
    if (v == "eager")
      mode = EvalMode::Eager;
    else if (v != "lazy")
      log::warning("ignoring unknown mode '" + *m + "'; using lazy");
  }
  const auto metric = *metric_from_name(c.type);
  ctx.matrix = build_matrix(*ctx.dataset, metric, mode);
  ctx.count_scale.reset();
  if (metric == Metric::Hamming) ctx.count_scale = ctx.dataset->locus_count();
  log::info("distance matrix over " + std::to_string(ctx.dataset->size()) + " profiles");
  emit_matrix(c, *ctx.matrix);
}

void run_correction(const CommandSpec& c, WorkflowContext& ctx) {
  auto& m = matrix_input(c, ctx);
  ctx.matrix = correct(m, *correction_from_name(c.type), ctx.count_scale);
  ctx.count_scale.reset();
  log::info("applied " + c.type);
  emit_matrix(c, *ctx.matrix);
}

void run_algorithm(const CommandSpec& c, WorkflowContext& ctx) {
  const auto& m = matrix_input(c, ctx);
  AlgorithmOptions opts;
  if (const auto* lvs = option(c, "lvs")) {
    if (c.type != "goeburst")
      log::warning("option lvs is unused by " + c.type);
    else if (auto k = positive_count(*lvs))
      opts.lvs = *k;
    else
      log::warning("ignoring invalid lvs '" + *lvs + "'");
  }
  if (ctx.dataset && ctx.dataset->size() == m.size()) opts.dataset = &*ctx.dataset;
  ctx.tree = infer_tree(c.type, m, opts);
  log::info("inferred tree with " + c.type);
  emit_tree(c, *ctx.tree);
}

void run_optimization(const CommandSpec& c, WorkflowContext& ctx) {
  if (const auto* ref = option(c, "tree")) ctx.tree = load_tree(FileRef::parse(*ref));
  if (!ctx.tree) fail(ErrorKind::MissingInput, c.type + " needs a tree (--tree)");
  const auto& m = matrix_input(c, ctx);
  ctx.tree = run_lbr(*ctx.tree, m);
  log::info("optimized tree with " + c.type);
  emit_tree(c, *ctx.tree);
}

}  // namespace

std::optional<CommandKind> command_from_name(std::string_view name) {
  for (const auto& s : registry())
    if (s.name == name) return s.kind;
  return std::nullopt;
}

std::string_view to_string(CommandKind kind) noexcept { return stage(kind).name; }

FileRef FileRef::parse(std::string_view value) {
  const auto colon = value.find(':');
  if (colon == std::string_view::npos || colon == 0 || colon + 1 == value.size())
    fail(ErrorKind::ParseFailure, "expected format:path, got '" + std::string(value) + "'");
  return {text::lower(value.substr(0, colon)), std::string(value.substr(colon + 1))};
}

std::vector<CommandSpec> parse_arguments(const std::vector<std::string>& argv) {
  if (argv.empty()) fail(ErrorKind::NoCommand, "no command given");
  if (text::lower(argv[0]) == "help") return {};

  std::vector<std::vector<std::string>> segments(1);
  for (const auto& a : argv) {
    if (a == ":")
      segments.emplace_back();
    else
      segments.back().push_back(a);
  }
  std::vector<CommandSpec> commands;
  for (const auto& seg : segments) {
    auto spec = parse_segment(seg);
    if (spec.kind != CommandKind::Optimization &&
        std::any_of(commands.begin(), commands.end(), [&](const CommandSpec& c) { return c.kind == spec.kind; }))
      fail(ErrorKind::RepeatedCommand, "command '" + std::string(to_string(spec.kind)) + "' given twice");
    commands.push_back(std::move(spec));
  }
  return commands;
}

void validate_commands(const std::vector<CommandSpec>& commands) {
  auto has = [&](CommandKind k) {
    return std::any_of(commands.begin(), commands.end(), [&](const CommandSpec& c) { return c.kind == k; });
  };
  if (has(CommandKind::Optimization) && !has(CommandKind::Algorithm) &&
      (has(CommandKind::Distance) || has(CommandKind::Correction)))
    fail(ErrorKind::InvalidCommand, "optimization after distance or correction needs an algorithm");
}

WorkflowContext run_workflow(const std::vector<CommandSpec>& commands) {
  validate_commands(commands);
  WorkflowContext ctx;
  // stable_sort keeps optimizations in argv order.
  auto ordered = commands;
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const CommandSpec& a, const CommandSpec& b) { return a.kind < b.kind; });
  for (const auto& c : ordered) {
    switch (c.kind) {
      case CommandKind::Distance: run_distance(c, ctx); break;
      case CommandKind::Correction: run_correction(c, ctx); break;
      case CommandKind::Algorithm: run_algorithm(c, ctx); break;
      case CommandKind::Optimization: run_optimization(c, ctx); break;
    }
  }
  return ctx;
}

std::string usage() {
  std::ostringstream s;
  s << "usage: phylo <command> <type> [--option=value]... [: <command> <type> ...]\n"
       "       phylo bench --algorithm=<type> --sizes=<n,...> [options]\n\n"
       "Commands run in the order distance, correction, algorithm, optimization.\n"
       "File options take format:path.\n\n";
  for (const auto& st : registry()) {
    s << "  " << st.name << "\n    types:";
    for (auto t : st.types) s << ' ' << t;
    s << "\n    options:";
    for (auto o : st.options) s << " --" << o;
    s << '\n';
  }
  s << "\nFormats: dataset fasta|snp|ml, matrix symmetric|asymmetric, tree newick|nexus.\n"
       "Aliases: -o out, -d dataset, -m matrix, -t tree, -l lvs.\n"
       "Distance --mode=lazy|eager (default lazy).\n"
       "Log level: "
    << log::kLevelEnv << "=info|warning|error|exception|off\n";
  return s.str();
}

int run_cli(const std::vector<std::string>& argv, std::ostream& out) {
  try {
    const auto commands = parse_arguments(argv);
    if (commands.empty()) {
      out << usage();
      return 0;
    }
    run_workflow(commands);
    return 0;
  } catch (const Error& e) {
    log::error(std::string(to_string(e.kind())) + ": " + e.what());
    return 1;
  } catch (const std::exception& e) {
    log::exception(std::string("internal failure: ") + e.what());
    return 2;
  }
}

}  // namespace phylo
