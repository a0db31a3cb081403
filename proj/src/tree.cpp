#include "phylo/tree.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "phylo/error.hpp"
#include "phylo/text.hpp"

namespace phylo {

Tree::Tree(std::vector<std::string> names, std::size_t node_count, std::vector<Edge> edges, NodeId root,
           std::optional<double> root_length)
    : names_(std::move(names)),
      node_count_(node_count),
      edges_(std::move(edges)),
      root_(root),
      root_length_(root_length) {
  if (names_.size() > node_count_) fail(ErrorKind::InvalidInput, "more names than nodes");
  if (node_count_ == 0) fail(ErrorKind::InvalidInput, "tree has no nodes");
  if (root_ >= node_count_) fail(ErrorKind::InvalidInput, "root is not a node of the tree");
  if (edges_.size() + 1 != node_count_) fail(ErrorKind::InvalidInput, "tree must have exactly one edge less than nodes");
  std::vector<char> has_parent(node_count_, 0);
  for (const auto& e : edges_) {
    if (e.parent >= node_count_ || e.child >= node_count_) fail(ErrorKind::InvalidInput, "edge references unknown node");
    if (e.parent == e.child) fail(ErrorKind::InvalidInput, "edge parent equals child");
    if (e.child == root_ || has_parent[e.child]) fail(ErrorKind::InvalidInput, "node has more than one parent");
    has_parent[e.child] = 1;
  }
  // n-1 edges, unique parents and no edge into the root: reachability from the
  // root is all that is left to rule out a detached cycle.
  auto kids = children();
  std::vector<NodeId> stack{root_};
  std::size_t reached = 0;
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    ++reached;
    for (NodeId c : kids[v]) stack.push_back(c);
  }
  if (reached != node_count_) fail(ErrorKind::InvalidInput, "tree is not connected");
}

Tree Tree::single(std::string name) { return Tree({std::move(name)}, 1, {}, 0); }

std::vector<std::vector<NodeId>> Tree::children() const {
  std::vector<std::vector<NodeId>> out(node_count_);
  for (const auto& e : edges_) out[e.parent].push_back(e.child);
  return out;
}

std::vector<NodeId> Tree::parents() const {
  std::vector<NodeId> out(node_count_);
  std::iota(out.begin(), out.end(), NodeId{0});
  for (const auto& e : edges_) out[e.child] = e.parent;
  return out;
}

std::vector<double> Tree::lengths_above() const {
  std::vector<double> out(node_count_, 0.0);
  for (const auto& e : edges_) out[e.child] = e.length;
  return out;
}

double Tree::total_length() const noexcept {
  double s = 0;
  for (const auto& e : edges_) s += e.length;
  return s;
}

// ---------------------------------------------------------------------------
// Newick

namespace {

struct RawNode {
  std::optional<std::string> name;
  std::vector<std::size_t> kids;
  double length = 0;
};

class NewickParser {
 public:
  explicit NewickParser(std::string_view s) : s_(s) {}

  Tree parse() {
    skip_ws();
    if (pos_ == s_.size()) error("empty Newick input");
    std::size_t top = subtree();
    std::optional<double> stem;
    skip_ws();
    if (peek() == ':') stem = length();
    skip_ws();
    if (peek() == ';') ++pos_;
    skip_ws();
    if (pos_ != s_.size()) error("unexpected trailing input");
    return build(top, stem);
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorKind::ParseFailure, "Newick: " + what + " at offset " + std::to_string(pos_));
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  static bool structural(char c) { return c == '(' || c == ')' || c == ',' || c == ':' || c == ';'; }

  std::string name() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && !structural(s_[pos_])) ++pos_;
    return std::string(text::trim(s_.substr(start, pos_ - start)));
  }

  double length() {
    ++pos_;  // ':'
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && !structural(s_[pos_]) && !std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    auto v = text::parse_double(s_.substr(start, pos_ - start));
    if (!v) error("malformed branch length '" + std::string(s_.substr(start, pos_ - start)) + "'");
    return *v;
  }

  std::size_t subtree() {
    skip_ws();
    std::size_t id = nodes_.size();
    nodes_.emplace_back();
    if (peek() == '(') {
      ++pos_;
      skip_ws();
      if (peek() == ')') error("empty branch set");
      while (true) {
        std::size_t kid = subtree();
        skip_ws();
        if (peek() == ':') nodes_[kid].length = length();
        nodes_[id].kids.push_back(kid);
        skip_ws();
        if (peek() == ',') {
          ++pos_;
          continue;
        }
        if (peek() == ')') {
          ++pos_;
          break;
        }
        error(pos_ == s_.size() ? "unbalanced parentheses" : "expected ',' or ')'");
      }
      auto n = name();
      if (!n.empty()) nodes_[id].name = std::move(n);
    } else {
      if (peek() == ')') error("unbalanced parentheses");
      nodes_[id].name = name();
    }
    return id;
  }

  Tree build(std::size_t top, std::optional<double> stem) {
    // Named nodes first (in order of appearance), then unnamed internals.
    std::vector<NodeId> id(nodes_.size());
    std::vector<std::string> names;
    for (std::size_t k = 0; k < nodes_.size(); ++k)
      if (nodes_[k].name) {
        id[k] = names.size();
        names.push_back(*nodes_[k].name);
      }
    NodeId next = names.size();
    for (std::size_t k = 0; k < nodes_.size(); ++k)
      if (!nodes_[k].name) id[k] = next++;
    std::vector<Edge> edges;
    for (std::size_t k = 0; k < nodes_.size(); ++k)
      for (auto kid : nodes_[k].kids) edges.push_back({id[k], id[kid], nodes_[kid].length});
    return Tree(std::move(names), nodes_.size(), std::move(edges), id[top], stem);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::vector<RawNode> nodes_;
};

void append_length(std::string& out, double length) {
  if (length == 0) return;
  out += ':';
  out += text::format_double(length);
}

}  // namespace

Tree read_newick(std::string_view input) { return NewickParser(input).parse(); }

std::string write_newick(const Tree& tree) {
  const auto kids = tree.children();
  const auto above = tree.lengths_above();
  const auto n = tree.node_count();
  std::vector<std::string> repr(n);
  std::vector<std::string> min_name(n);

  // Post-order without recursion; deep paths are common in spanning trees.
  std::vector<std::pair<NodeId, bool>> stack{{tree.root(), false}};
  while (!stack.empty()) {
    auto [v, expanded] = stack.back();
    stack.pop_back();
    if (!expanded) {
      stack.push_back({v, true});
      for (NodeId c : kids[v]) stack.push_back({c, false});
      continue;
    }
    std::string own = tree.is_named(v) ? tree.name(v) : std::string();
    if (kids[v].empty()) {
      repr[v] = own;
      min_name[v] = own;
      continue;
    }
    std::vector<NodeId> order(kids[v]);
    std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
      if (min_name[a] != min_name[b]) return min_name[a] < min_name[b];
      return repr[a] < repr[b];
    });
    std::string s = "(";
    bool first = true;
    std::string smallest = tree.is_named(v) ? own : min_name[order.front()];
    for (NodeId c : order) {
      if (!first) s += ',';
      first = false;
      s += repr[c];
      append_length(s, above[c]);
      smallest = std::min(smallest, min_name[c]);
      std::string().swap(repr[c]);
    }
    s += ')';
    s += own;
    repr[v] = std::move(s);
    min_name[v] = std::move(smallest);
  }
  std::string out = std::move(repr[tree.root()]);
  if (auto stem = tree.root_length()) {
    out += ':';
    out += text::format_double(*stem);
  }
  out += ';';
  return out;
}

// ---------------------------------------------------------------------------
// Nexus

namespace {

bool istarts_with(std::string_view s, std::string_view prefix) {
  if (s.size() < prefix.size()) return false;
  for (std::size_t i = 0; i < prefix.size(); ++i)
    if (std::tolower(static_cast<unsigned char>(s[i])) != std::tolower(static_cast<unsigned char>(prefix[i])))
      return false;
  return true;
}

std::string_view strip_comment_prefix(std::string_view s) {
  s = text::trim(s);
  while (!s.empty() && s.front() == '[') {
    auto close = s.find(']');
    if (close == std::string_view::npos) break;
    s = text::trim(s.substr(close + 1));
  }
  return s;
}

std::string nexus_label(const std::string& name) {
  bool plain = !name.empty();
  for (char c : name)
    if (std::isspace(static_cast<unsigned char>(c)) || std::string_view("()[]{}/\\,;:=*'\"`+-<>").find(c) != std::string_view::npos)
      plain = false;
  if (plain) return name;
  std::string out = "'";
  for (char c : name) {
    if (c == '\'') out += '\'';
    out += c;
  }
  return out + "'";
}

}  // namespace

Tree read_nexus(std::string_view input) {
  const std::string low = text::lower(input);
  std::size_t at = 0;
  while (true) {
    auto begin = low.find("begin", at);
    if (begin == std::string::npos) fail(ErrorKind::ParseFailure, "Nexus: no TREES block");
    std::size_t p = begin + 5;
    while (p < low.size() && std::isspace(static_cast<unsigned char>(low[p]))) ++p;
    at = p;
    if (low.compare(p, 5, "trees") != 0) continue;
    p += 5;
    while (p < low.size() && std::isspace(static_cast<unsigned char>(low[p]))) ++p;
    if (p >= low.size() || low[p] != ';') continue;
    ++p;
    // Statements up to END; each ends with ';'.
    while (p < low.size()) {
      auto semi = low.find(';', p);
      if (semi == std::string::npos) break;
      auto stmt = strip_comment_prefix(input.substr(p, semi - p));
      p = semi + 1;
      if (istarts_with(stmt, "end") || istarts_with(stmt, "endblock")) break;
      if (istarts_with(stmt, "tree") && stmt.size() > 4 && std::isspace(static_cast<unsigned char>(stmt[4]))) {
        auto eq = stmt.find('=');
        if (eq == std::string_view::npos) fail(ErrorKind::ParseFailure, "Nexus: Tree statement without '='");
        return read_newick(strip_comment_prefix(stmt.substr(eq + 1)));
      }
    }
    fail(ErrorKind::ParseFailure, "Nexus: TREES block has no Tree statement");
  }
}

std::string write_nexus(const Tree& tree) {
  std::ostringstream out;
  out << "#NEXUS\n\nBEGIN TAXA;\n    Dimensions NTax=" << tree.named_count() << ";\n    TaxLabels";
  for (const auto& n : tree.names()) out << ' ' << nexus_label(n);
  out << ";\nEND;\n\nBEGIN TREES;\n    Tree tree=" << write_newick(tree) << "\nEND;\n";
  return out.str();
}

}  // namespace phylo
