#include "gcat/words.hpp"

#include <algorithm>
#include <sstream>

#include "gcat/error.hpp"

namespace gcat {
namespace {

// One right multiplication of a normal form by a generator.
void apply(NormalForm& state, Symbol x, const Graph& g) {
  const EdgeId e = x.edge;
  switch (state.kind) {
    case NormalForm::Kind::Zero:
      return;
    case NormalForm::Kind::Identity:
      if (x.kind == SymbolKind::Plain) {
        state = NormalForm::term({e}, g.target(e), {});
      } else {
        state = NormalForm::term({}, g.target(e), {e});
      }
      return;
    case NormalForm::Kind::Term:
      break;
  }
  if (x.kind == SymbolKind::Plain) {
    if (state.nu.empty()) {
      // S_mu P_v S_e: nonzero iff s(e) = v.
      if (g.source(e) != state.vertex) {
        state = NormalForm::zero();
        return;
      }
      state.mu.push_back(e);
      state.vertex = g.target(e);
    } else {
      // S_{nu_1}* S_e = delta(nu_1, e) P_{t(e)}.
      if (state.nu.front() != e) {
        state = NormalForm::zero();
        return;
      }
      state.nu.erase(state.nu.begin());
    }
  } else {
    if (state.nu.empty()) {
      // P_v S_e* = (S_e P_v)*: nonzero iff t(e) = v.
      if (g.target(e) != state.vertex) {
        state = NormalForm::zero();
        return;
      }
      state.nu.push_back(e);
    } else {
      // S_nu* S_e* = (S_e S_nu)*: nonzero iff t(e) = s(nu_1).
      if (g.target(e) != g.source(state.nu.front())) {
        state = NormalForm::zero();
        return;
      }
      state.nu.insert(state.nu.begin(), e);
    }
  }
}

bool is_prefix(const EdgePath& p, const EdgePath& q) {
  return p.size() <= q.size() && std::equal(p.begin(), p.end(), q.begin());
}

EdgePath concat(EdgePath a, const EdgePath& b, std::size_t from) {
  a.insert(a.end(), b.begin() + static_cast<std::ptrdiff_t>(from), b.end());
  return a;
}

}  // namespace

NormalForm reduce(const Word& w, const Graph& g) {
  NormalForm state = NormalForm::identity();
  for (const Symbol& x : w) {
    apply(state, x, g);
    if (state.is_zero()) break;
  }
  return state;
}

NormalForm multiply(const NormalForm& a, const NormalForm& b, const Graph& g) {
  if (a.is_zero() || b.is_zero()) return NormalForm::zero();
  if (a.kind == NormalForm::Kind::Identity) return b;
  if (b.kind == NormalForm::Kind::Identity) return a;

  // S_mu1 P_v1 (S_alpha* S_beta) P_v2 S_nu2* with alpha = nu1, beta = mu2.
  const EdgePath& alpha = a.nu;
  const EdgePath& beta = b.mu;
  if (is_prefix(alpha, beta)) {
    if (alpha.size() == beta.size()) {
      if (alpha.empty() && a.vertex != b.vertex) return NormalForm::zero();
      return NormalForm::term(a.mu, a.vertex, b.nu);
    }
    const EdgeId first = beta[alpha.size()];
    if (alpha.empty() && g.source(first) != a.vertex) return NormalForm::zero();
    return NormalForm::term(concat(a.mu, beta, alpha.size()), b.vertex, b.nu);
  }
  if (is_prefix(beta, alpha)) {
    const EdgeId first = alpha[beta.size()];
    if (beta.empty() && g.source(first) != b.vertex) return NormalForm::zero();
    return NormalForm::term(a.mu, a.vertex, concat(b.nu, alpha, beta.size()));
  }
  return NormalForm::zero();
}

bool has_dyck_shape(const Word& w) {
  long height = 0;
  for (const Symbol& x : w) {
    height += x.kind == SymbolKind::Star ? 1 : -1;
    if (height < 0) return false;
  }
  return height == 0;
}

std::optional<VertexId> is_catalan_word(const Word& w, const Graph& g) {
  if (w.size() % 2 != 0) {
    throw Error(ErrorCode::domain, "Catalan membership needs an even-length word");
  }
  if (!has_dyck_shape(w)) return std::nullopt;
  const NormalForm nf = reduce(w, g);
  if (!nf.is_projection()) return std::nullopt;
  return nf.vertex;
}

std::vector<Word> enumerate_words(const Graph& g, int n, std::optional<VertexId> root,
                                  const EnumerationLimits& limits) {
  if (n < 0) throw Error(ErrorCode::domain, "n must be non-negative");
  if (n > limits.max_n) {
    throw Error(ErrorCode::resource_guard,
                "word enumeration limited to n <= " + std::to_string(limits.max_n));
  }
  if (root && (*root < 1 || *root > g.num_vertices())) {
    throw Error(ErrorCode::domain, "root vertex out of range");
  }
  const int nv = g.num_vertices();
  std::size_t produced = 0;
  auto charge = [&](std::size_t count) {
    produced += count;
    if (produced > limits.max_objects) {
      throw Error(ErrorCode::resource_guard,
                  "word enumeration exceeded budget of " + std::to_string(limits.max_objects));
    }
  };

  // by_root[k][u-1] = B_k(u)
  std::vector<std::vector<std::vector<Word>>> by_root(n + 1, std::vector<std::vector<Word>>(nv));
  for (int u = 0; u < nv; ++u) by_root[0][u].push_back(Word{});
  for (int m = 0; m < n; ++m) {
    for (VertexId u = 1; u <= nv; ++u) {
      auto& out = by_root[m + 1][u - 1];
      for (EdgeId f : g.incoming(u)) {
        for (int k = 0; k <= m; ++k) {
          const auto& inner = by_root[k][g.source(f) - 1];
          const auto& tail = by_root[m - k][u - 1];
          charge(inner.size() * tail.size());
          for (const Word& y : inner) {
            for (const Word& z : tail) {
              Word x;
              x.reserve(2 * (m + 1));
              x.push_back(Symbol::star(f));
              x.insert(x.end(), y.begin(), y.end());
              x.push_back(Symbol::plain(f));
              x.insert(x.end(), z.begin(), z.end());
              out.push_back(std::move(x));
            }
          }
        }
      }
    }
  }
  if (root) return std::move(by_root[n][*root - 1]);
  std::vector<Word> all;
  for (auto& words : by_root[n]) {
    std::move(words.begin(), words.end(), std::back_inserter(all));
  }
  return all;
}

std::string format_word(const Word& w, const Graph& g) {
  std::string out;
  for (const Symbol& x : w) {
    if (!out.empty()) out += ' ';
    out += g.edge_name(x.edge);
    if (x.kind == SymbolKind::Star) out += '*';
  }
  return out;
}

Word parse_word(std::string_view text, const Graph& g) {
  std::istringstream in{std::string(text)};
  Word w;
  std::string token;
  while (in >> token) {
    Symbol x = Symbol::plain(0);
    if (token.back() == '*') {
      x.kind = SymbolKind::Star;
      token.pop_back();
    }
    const auto e = g.find_edge(token);
    if (!e) throw Error(ErrorCode::parse, "unknown edge \"" + token + "\" in word");
    x.edge = *e;
    w.push_back(x);
  }
  return w;
}

std::string format_normal_form(const NormalForm& nf, const Graph& g) {
  switch (nf.kind) {
    case NormalForm::Kind::Zero: return "0";
    case NormalForm::Kind::Identity: return "1";
    case NormalForm::Kind::Term: break;
  }
  auto path = [&](const EdgePath& p) {
    std::string s;
    for (EdgeId e : p) {
      if (!s.empty()) s += ' ';
      s += g.edge_name(e);
    }
    return s;
  };
  std::string out;
  if (!nf.mu.empty()) out += "S(" + path(nf.mu) + ") ";
  out += "P_v" + std::to_string(nf.vertex);
  if (!nf.nu.empty()) out += " S*(" + path(nf.nu) + ")";
  return out;
}

}  // namespace gcat
