#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "phylo/dataset.hpp"
#include "phylo/matrix.hpp"
#include "phylo/tree.hpp"

namespace phylo {

/// Workflow stages, in execution order.
enum class CommandKind { Distance, Correction, Algorithm, Optimization };

std::optional<CommandKind> command_from_name(std::string_view name);
std::string_view to_string(CommandKind kind) noexcept;

struct CommandSpec {
  CommandKind kind;
  std::string type;                            // lowercase
  std::map<std::string, std::string> options;  // long option name -> raw value

  friend bool operator==(const CommandSpec&, const CommandSpec&) = default;
};

/// `format:path`; the format is case-folded, the path kept verbatim.
struct FileRef {
  std::string format;
  std::string path;

  static FileRef parse(std::string_view value);
};

struct WorkflowContext {
  std::optional<Dataset> dataset;
  std::optional<DistanceMatrix> matrix;
  std::optional<Tree> tree;
  /// Set while the context matrix holds raw mismatch counts over this many
  /// loci (a hamming stage output); the Jukes-Cantor stage divides by it.
  std::optional<std::size_t> count_scale;
};

/// Splits argv on standalone ":" and validates command and type names.
/// Unknown, duplicate or malformed options are dropped with a warning.
/// Returns an empty list when the first argument is "help".
std::vector<CommandSpec> parse_arguments(const std::vector<std::string>& argv);

/// Rejects an optimization without an algorithm when a distance or
/// correction stage is also requested (InvalidCommand).
void validate_commands(const std::vector<CommandSpec>& commands);

/// Executes the stages in workflow order and returns the final context.
WorkflowContext run_workflow(const std::vector<CommandSpec>& commands);

/// Parses, runs and maps failures to exit statuses: 0 on success, 1 for user
/// errors, 2 for internal failures. `out` receives the help text.
int run_cli(const std::vector<std::string>& argv, std::ostream& out);

std::string usage();

}  // namespace phylo
