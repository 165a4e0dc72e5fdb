#include "gcat/combinatorics.hpp"

#include <cctype>
#include <functional>
#include <sstream>

#include "gcat/error.hpp"

namespace gcat {
namespace {

void check_n(int n, std::optional<VertexId> root, const Graph& g, const EnumerationLimits& limits,
             const char* what) {
  if (n < 0) throw Error(ErrorCode::domain, "n must be non-negative");
  if (n > limits.max_n) {
    throw Error(ErrorCode::resource_guard,
                std::string(what) + " enumeration limited to n <= " + std::to_string(limits.max_n));
  }
  if (root && (*root < 1 || *root > g.num_vertices())) {
    throw Error(ErrorCode::domain, "root vertex out of range");
  }
}

class Budget {
 public:
  Budget(std::size_t limit, const char* what) : limit_(limit), what_(what) {}
  void charge(std::size_t count) {
    used_ += count;
    if (used_ > limit_) {
      throw Error(ErrorCode::resource_guard,
                  std::string(what_) + " enumeration exceeded budget of " + std::to_string(limit_));
    }
  }

 private:
  std::size_t limit_;
  std::size_t used_ = 0;
  const char* what_;
};

std::size_t count_edges(const TreeNode& node) {
  std::size_t total = node.children.size();
  for (const auto& c : node.children) total += count_edges(c);
  return total;
}

bool valid_subtree(const TreeNode& node, const Graph& g) {
  for (const auto& c : node.children) {
    if (c.edge >= g.num_edges()) return false;
    if (g.target(c.edge) != node.vertex || g.source(c.edge) != c.vertex) return false;
    if (!valid_subtree(c, g)) return false;
  }
  return true;
}

void preorder(const TreeNode& node, DyckPath& out) {
  for (const auto& c : node.children) {
    out.push_back(DyckStep::up(c.edge));
    preorder(c, out);
    out.push_back(DyckStep::down(c.edge));
  }
}

}  // namespace

std::optional<VertexId> dyck_root(const DyckPath& path, const Graph& g) {
  if (path.empty()) return std::nullopt;
  std::vector<EdgeId> open;
  const DyckStep* prev = nullptr;
  for (const DyckStep& step : path) {
    if (step.edge >= g.num_edges()) return std::nullopt;
    if (step.direction == Step::Up) {
      if (prev) {
        const bool ok = prev->direction == Step::Up ? g.target(step.edge) == g.source(prev->edge)
                                                    : g.target(prev->edge) == g.target(step.edge);
        if (!ok) return std::nullopt;
      }
      open.push_back(step.edge);
    } else {
      if (open.empty() || open.back() != step.edge) return std::nullopt;
      open.pop_back();
    }
    prev = &step;
  }
  if (!open.empty()) return std::nullopt;
  return g.target(path.back().edge);
}

DyckPath word_to_dyck(const Word& w, const Graph& g) {
  if (w.empty() || !is_catalan_word(w, g)) {
    throw Error(ErrorCode::domain, "word is not a G-Catalan word");
  }
  DyckPath path;
  path.reserve(w.size());
  for (const Symbol& x : w) {
    path.push_back(x.kind == SymbolKind::Star ? DyckStep::up(x.edge) : DyckStep::down(x.edge));
  }
  return path;
}

Word dyck_to_word(const DyckPath& path, const Graph& g) {
  if (!dyck_root(path, g)) throw Error(ErrorCode::domain, "path is not a G-Dyck path");
  Word w;
  w.reserve(path.size());
  for (const DyckStep& s : path) {
    w.push_back(s.direction == Step::Up ? Symbol::star(s.edge) : Symbol::plain(s.edge));
  }
  return w;
}

std::vector<DyckPath> enumerate_dyck(const Graph& g, int n, std::optional<VertexId> root,
                                     const EnumerationLimits& limits) {
  check_n(n, root, g, limits, "Dyck path");
  std::vector<DyckPath> out;
  if (n == 0) {
    const int copies = root ? 1 : g.num_vertices();
    out.assign(copies, DyckPath{});
    return out;
  }
  Budget budget(limits.max_objects, "Dyck path");
  const std::size_t length = 2 * static_cast<std::size_t>(n);
  DyckPath path;
  std::vector<EdgeId> open;
  path.reserve(length);

  std::vector<EdgeId> all_edges(g.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e) all_edges[e] = e;

  std::function<void()> extend = [&]() {
    if (path.size() == length) {
      budget.charge(1);
      out.push_back(path);
      return;
    }
    const std::size_t remaining = length - path.size();
    if (open.size() + 2 <= remaining) {
      // Top-level up-steps all end at the root vertex.
      const std::vector<EdgeId>* candidates = &all_edges;
      if (path.empty()) {
        if (root) candidates = &g.incoming(*root);
      } else if (path.back().direction == Step::Up) {
        candidates = &g.incoming(g.source(path.back().edge));
      } else {
        candidates = &g.incoming(g.target(path.back().edge));
      }
      for (EdgeId e : *candidates) {
        path.push_back(DyckStep::up(e));
        open.push_back(e);
        extend();
        open.pop_back();
        path.pop_back();
      }
    }
    if (!open.empty()) {
      const EdgeId e = open.back();
      path.push_back(DyckStep::down(e));
      open.pop_back();
      extend();
      open.push_back(e);
      path.pop_back();
    }
  };
  extend();
  return out;
}

std::size_t RootedTree::edge_count() const { return count_edges(root); }

bool is_valid_tree(const RootedTree& t, const Graph& g) {
  if (t.root.vertex < 1 || t.root.vertex > g.num_vertices()) return false;
  return valid_subtree(t.root, g);
}

RootedTree dyck_to_tree(const DyckPath& path, const Graph& g, VertexId root) {
  if (root < 1 || root > g.num_vertices()) throw Error(ErrorCode::domain, "root vertex out of range");
  if (!path.empty()) {
    const auto r = dyck_root(path, g);
    if (!r) throw Error(ErrorCode::domain, "path is not a G-Dyck path");
    if (*r != root) throw Error(ErrorCode::domain, "path is rooted at a different vertex");
  }
  RootedTree tree;
  tree.root.vertex = root;
  std::vector<TreeNode*> stack{&tree.root};
  for (const DyckStep& s : path) {
    if (s.direction == Step::Up) {
      auto& children = stack.back()->children;
      children.push_back(TreeNode{g.source(s.edge), s.edge, {}});
      stack.push_back(&children.back());
    } else {
      stack.pop_back();
    }
  }
  return tree;
}

RootedTree dyck_to_tree(const DyckPath& path, const Graph& g) {
  const auto r = dyck_root(path, g);
  if (!r) throw Error(ErrorCode::domain, "path is not a nonempty G-Dyck path");
  return dyck_to_tree(path, g, *r);
}

DyckPath tree_to_dyck(const RootedTree& t, const Graph& g) {
  if (!is_valid_tree(t, g)) throw Error(ErrorCode::domain, "tree is not a G-rooted tree");
  DyckPath path;
  preorder(t.root, path);
  return path;
}

std::vector<RootedTree> enumerate_trees(const Graph& g, int n, std::optional<VertexId> root,
                                        const EnumerationLimits& limits) {
  check_n(n, root, g, limits, "tree");
  Budget budget(limits.max_objects, "tree");
  const int nv = g.num_vertices();
  using ChildList = std::vector<TreeNode>;
  // forests[m][w-1]: ordered child lists below a node at w with m edges in total
  std::vector<std::vector<std::vector<ChildList>>> forests(n + 1,
                                                           std::vector<std::vector<ChildList>>(nv));
  for (int w = 0; w < nv; ++w) forests[0][w].push_back({});
  for (int m = 1; m <= n; ++m) {
    for (VertexId w = 1; w <= nv; ++w) {
      auto& out = forests[m][w - 1];
      for (EdgeId e : g.incoming(w)) {
        const VertexId child = g.source(e);
        for (int k = 0; k < m; ++k) {
          const auto& below = forests[k][child - 1];
          const auto& rest = forests[m - 1 - k][w - 1];
          budget.charge(below.size() * rest.size());
          for (const auto& grandchildren : below) {
            for (const auto& siblings : rest) {
              ChildList list;
              list.reserve(siblings.size() + 1);
              list.push_back(TreeNode{child, e, grandchildren});
              list.insert(list.end(), siblings.begin(), siblings.end());
              out.push_back(std::move(list));
            }
          }
        }
      }
    }
  }
  std::vector<RootedTree> trees;
  for (VertexId w = 1; w <= nv; ++w) {
    if (root && *root != w) continue;
    for (auto& children : forests[n][w - 1]) {
      trees.push_back(RootedTree{TreeNode{w, 0, std::move(children)}});
    }
  }
  return trees;
}

mpz_class count_trees(const Graph& g, int n, std::optional<VertexId> root) {
  if (n < 0) throw Error(ErrorCode::domain, "n must be non-negative");
  if (root && (*root < 1 || *root > g.num_vertices())) {
    throw Error(ErrorCode::domain, "root vertex out of range");
  }
  const int nv = g.num_vertices();
  // trees[m][w-1] = number of trees with m edges rooted at w. A node's child
  // list is a sequence of c >= 1 branches; branch[w][j] counts one branch of
  // j edges (its edge plus a subtree of j-1 edges) and power[w][c][j] counts
  // sequences of c branches with j edges in total.
  std::vector<std::vector<mpz_class>> trees(n + 1, std::vector<mpz_class>(nv));
  std::vector<std::vector<mpz_class>> branch(nv, std::vector<mpz_class>(n + 1));
  std::vector<std::vector<std::vector<mpz_class>>> power(
      nv, std::vector<std::vector<mpz_class>>(n + 1, std::vector<mpz_class>(n + 1)));
  for (int w = 0; w < nv; ++w) trees[0][w] = 1;
  for (int m = 1; m <= n; ++m) {
    for (VertexId w = 1; w <= nv; ++w) {
      mpz_class b = 0;
      for (EdgeId e : g.incoming(w)) b += trees[m - 1][g.source(e) - 1];
      branch[w - 1][m] = b;
    }
    for (int w = 0; w < nv; ++w) {
      auto& pw = power[w];
      pw[1][m] = branch[w][m];
      for (int c = 2; c <= m; ++c) {
        mpz_class s = 0;
        for (int j = 1; j <= m - c + 1; ++j) s += branch[w][j] * pw[c - 1][m - j];
        pw[c][m] = s;
      }
      mpz_class total = 0;
      for (int c = 1; c <= m; ++c) total += pw[c][m];
      trees[m][w] = total;
    }
  }
  if (root) return trees[n][*root - 1];
  mpz_class total = 0;
  for (const auto& t : trees[n]) total += t;
  return total;
}

std::string format_dyck(const DyckPath& path, const Graph& g) {
  std::string out;
  for (const DyckStep& s : path) {
    if (!out.empty()) out += ' ';
    out += s.direction == Step::Up ? "U:" : "D:";
    out += g.edge_name(s.edge);
  }
  return out;
}

DyckPath parse_dyck(std::string_view text, const Graph& g) {
  std::istringstream in{std::string(text)};
  DyckPath path;
  std::string token;
  while (in >> token) {
    if (token.size() < 3 || token[1] != ':' || (token[0] != 'U' && token[0] != 'D')) {
      throw Error(ErrorCode::parse, "malformed Dyck step \"" + token + "\"");
    }
    const auto e = g.find_edge(std::string_view(token).substr(2));
    if (!e) throw Error(ErrorCode::parse, "unknown edge in Dyck step \"" + token + "\"");
    path.push_back(token[0] == 'U' ? DyckStep::up(*e) : DyckStep::down(*e));
  }
  return path;
}

namespace {

void format_node(const TreeNode& node, const Graph& g, std::string& out) {
  out += 'v' + std::to_string(node.vertex);
  if (node.children.empty()) return;
  out += '(';
  bool first = true;
  for (const auto& c : node.children) {
    if (!first) out += ", ";
    first = false;
    out += g.edge_name(c.edge);
    out += '(';
    format_node(c, g, out);
    out += ')';
  }
  out += ')';
}

class TreeParser {
 public:
  TreeParser(std::string_view text, const Graph& g) : text_(text), g_(g) {}

  RootedTree parse() {
    RootedTree t;
    t.root = node();
    skip_space();
    if (pos_ != text_.size()) fail("trailing characters");
    return t;
  }

 private:
  TreeNode node() {
    skip_space();
    expect('v');
    TreeNode n;
    n.vertex = number();
    skip_space();
    if (peek() == '(') {
      ++pos_;
      while (true) {
        n.children.push_back(child());
        skip_space();
        if (peek() == ',') {
          ++pos_;
          continue;
        }
        expect(')');
        break;
      }
    }
    return n;
  }

  TreeNode child() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != '(' && !std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    const auto name = text_.substr(start, pos_ - start);
    const auto e = g_.find_edge(name);
    if (!e) fail("unknown edge \"" + std::string(name) + "\"");
    skip_space();
    expect('(');
    TreeNode n = node();
    n.edge = *e;
    skip_space();
    expect(')');
    return n;
  }

  int number() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected vertex number");
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::parse, "tree text at offset " + std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  const Graph& g_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string format_tree(const RootedTree& t, const Graph& g) {
  std::string out;
  format_node(t.root, g, out);
  return out;
}

RootedTree parse_tree(std::string_view text, const Graph& g) { return TreeParser(text, g).parse(); }

}  // namespace gcat
