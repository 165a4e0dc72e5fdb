#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "gcat/graph.hpp"
#include "gcat/words.hpp"

namespace gcat {

enum class Step : std::uint8_t { Up, Down };

struct DyckStep {
  Step direction = Step::Up;
  EdgeId edge = 0;

  static DyckStep up(EdgeId e) { return {Step::Up, e}; }
  static DyckStep down(EdgeId e) { return {Step::Down, e}; }

  bool operator==(const DyckStep&) const = default;
};

using DyckPath = std::vector<DyckStep>;

// Checks the labelling rules of a G-Dyck path:
//   Up(e) right after Up(f) needs t(e) = s(f);
//   Up(e) right after Down(f) needs t(f) = t(e);
//   the partner of Up(e) is Down(e).
// Returns t(r(path)), the target of the last edge, for a valid nonempty path.
std::optional<VertexId> dyck_root(const DyckPath& path, const Graph& g);

// S_e* <-> Up(e), S_e <-> Down(e). Both throw Error(domain) when the input is
// not a member of B_n^G / D_n^G for n >= 1.
DyckPath word_to_dyck(const Word& w, const Graph& g);
Word dyck_to_word(const DyckPath& path, const Graph& g);

// D_n^G (or D_n^G(root)) generated step by step from the labelling rules.
// n = 0 yields one empty path per vertex.
std::vector<DyckPath> enumerate_dyck(const Graph& g, int n, std::optional<VertexId> root = {},
                                     const EnumerationLimits& limits = {});

// Plane tree whose node at vertex w has children reached through edges g with
// t(g) = w; the child node sits at s(g). Sibling order is significant.
struct TreeNode {
  VertexId vertex = 0;
  EdgeId edge = 0;  // label of the edge to the parent; unused at the root
  std::vector<TreeNode> children;

  bool operator==(const TreeNode&) const = default;
};

struct RootedTree {
  TreeNode root;

  VertexId root_vertex() const { return root.vertex; }
  std::size_t edge_count() const;
  bool operator==(const RootedTree&) const = default;
};

bool is_valid_tree(const RootedTree& t, const Graph& g);

// Depth-first bijection: Up(e) opens a child edge labelled e, its partner
// Down(e) closes it. The root vertex is t(r(path)).
RootedTree dyck_to_tree(const DyckPath& path, const Graph& g);
DyckPath tree_to_dyck(const RootedTree& t, const Graph& g);

// The empty path has no root edge, so the tree root must be supplied.
RootedTree dyck_to_tree(const DyckPath& path, const Graph& g, VertexId root);

// T_n^G (or T_n^G(root)) built directly as ordered forests.
std::vector<RootedTree> enumerate_trees(const Graph& g, int n, std::optional<VertexId> root = {},
                                        const EnumerationLimits& limits = {});

// |T_n^G| (or |T_n^G(root)|) by memoized recursion over ordered child lists:
// first child edge, its subtree size, then the remaining siblings.
mpz_class count_trees(const Graph& g, int n, std::optional<VertexId> root = {});

// "U:e1 D:e1 ..."
std::string format_dyck(const DyckPath& path, const Graph& g);
DyckPath parse_dyck(std::string_view text, const Graph& g);

// "v1(e1(v1), e3(v2(e2(v1))))"
std::string format_tree(const RootedTree& t, const Graph& g);
RootedTree parse_tree(std::string_view text, const Graph& g);

}  // namespace gcat
