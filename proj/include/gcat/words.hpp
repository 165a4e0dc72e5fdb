#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gcat/graph.hpp"

namespace gcat {

enum class SymbolKind : std::uint8_t { Star, Plain };

// Star(e) is the adjoint S_e*, Plain(e) is S_e.
struct Symbol {
  SymbolKind kind = SymbolKind::Plain;
  EdgeId edge = 0;

  static Symbol star(EdgeId e) { return {SymbolKind::Star, e}; }
  static Symbol plain(EdgeId e) { return {SymbolKind::Plain, e}; }

  auto operator<=>(const Symbol&) const = default;
};

using Word = std::vector<Symbol>;
using EdgePath = std::vector<EdgeId>;

// Reduced form of a word product in the Cuntz-Krieger algebra of A^G.
// Term(mu, v, nu) stands for S_mu P_v S_nu*, where S_nu = S_{nu_1}...S_{nu_k}.
// mu and nu are admissible paths ending at v; Term((), v, ()) is P_v.
struct NormalForm {
  enum class Kind : std::uint8_t { Zero, Identity, Term };

  Kind kind = Kind::Zero;
  EdgePath mu;
  VertexId vertex = 0;
  EdgePath nu;

  static NormalForm zero() { return {}; }
  static NormalForm identity() { return {Kind::Identity, {}, 0, {}}; }
  static NormalForm term(EdgePath mu, VertexId v, EdgePath nu) {
    return {Kind::Term, std::move(mu), v, std::move(nu)};
  }
  static NormalForm projection(VertexId v) { return term({}, v, {}); }

  bool is_zero() const { return kind == Kind::Zero; }
  bool is_projection() const { return kind == Kind::Term && mu.empty() && nu.empty(); }

  bool operator==(const NormalForm&) const = default;
};

// Left-to-right evaluation of the word product.
NormalForm reduce(const Word& w, const Graph& g);

// Product a*b of two reduced elements, computed directly on normal forms.
NormalForm multiply(const NormalForm& a, const NormalForm& b, const Graph& g);

// Every prefix has at least as many Star as Plain symbols; totals agree.
bool has_dyck_shape(const Word& w);

// v(X) when w is a G-Catalan word (balanced shape reducing to a projection
// P_v). The empty word reduces to the identity and is never a member.
// Throws Error(domain) on odd length.
std::optional<VertexId> is_catalan_word(const Word& w, const Graph& g);

struct EnumerationLimits {
  int max_n = 6;
  std::size_t max_objects = 2'000'000;
};

// Lists B_n^G, or B_n^G(root) when a root is given, built from the unique
// decomposition X = (S_f*, Y, S_f, Z) with Y in B_k(s(f)), Z in B_{n-k}(t(f)).
// n = 0 yields one empty word per vertex. Ordered by first edge, then split
// index k, then recursively. Throws Error(resource_guard) past the limits.
std::vector<Word> enumerate_words(const Graph& g, int n, std::optional<VertexId> root = {},
                                  const EnumerationLimits& limits = {});

// "e3* e1* e1 e3" using edge names (labels or ids).
std::string format_word(const Word& w, const Graph& g);
Word parse_word(std::string_view text, const Graph& g);

std::string format_normal_form(const NormalForm& nf, const Graph& g);

}  // namespace gcat
