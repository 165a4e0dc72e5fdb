#include "oracles.hpp"

#include <functional>

namespace oracle {
namespace {

enum class Kind { Star, Plain, Proj };

struct Token {
  Kind kind;
  std::size_t id;  // edge id, or vertex for Proj
};

}  // namespace

int rewrite_to_projection(const gcat::Word& w, const Graph& g) {
  std::vector<Token> toks;
  for (const auto& x : w) {
    toks.push_back({x.kind == gcat::SymbolKind::Star ? Kind::Star : Kind::Plain, x.edge});
  }
  auto s = [&](std::size_t e) { return static_cast<std::size_t>(g.source(e)); };
  auto t = [&](std::size_t e) { return static_cast<std::size_t>(g.target(e)); };
  bool changed = true;
  while (changed && toks.size() > 1) {
    changed = false;
    for (std::size_t k = 0; k + 1 < toks.size(); ++k) {
      const Token a = toks[k];
      const Token b = toks[k + 1];
      std::optional<Token> merged;
      bool zero = false;
      if (a.kind == Kind::Star && b.kind == Kind::Plain) {
        if (a.id != b.id) zero = true;
        else merged = Token{Kind::Proj, t(a.id)};
      } else if (a.kind == Kind::Proj && b.kind == Kind::Proj) {
        if (a.id != b.id) zero = true;
        else merged = a;
      } else if (a.kind == Kind::Plain && b.kind == Kind::Proj) {
        if (t(a.id) != b.id) zero = true;
        else merged = a;
      } else if (a.kind == Kind::Proj && b.kind == Kind::Plain) {
        if (s(b.id) != a.id) zero = true;
        else merged = b;
      } else if (a.kind == Kind::Proj && b.kind == Kind::Star) {
        if (t(b.id) != a.id) zero = true;
        else merged = b;
      } else if (a.kind == Kind::Star && b.kind == Kind::Proj) {
        if (s(a.id) != b.id) zero = true;
        else merged = a;
      } else if (a.kind == Kind::Plain && b.kind == Kind::Plain) {
        zero = t(a.id) != s(b.id);
      } else if (a.kind == Kind::Star && b.kind == Kind::Star) {
        zero = t(b.id) != s(a.id);
      } else {  // Plain then Star: S_a S_b* needs t(a) = t(b)
        zero = t(a.id) != t(b.id);
      }
      if (zero) return 0;
      if (merged) {
        toks[k] = *merged;
        toks.erase(toks.begin() + static_cast<std::ptrdiff_t>(k) + 1);
        changed = true;
        break;
      }
    }
  }
  if (toks.size() == 1 && toks[0].kind == Kind::Proj) return static_cast<int>(toks[0].id);
  return -1;
}

std::map<VertexId, std::vector<gcat::Word>> brute_force_catalan_words(const Graph& g, int n) {
  std::map<VertexId, std::vector<gcat::Word>> out;
  gcat::Word w;
  const std::size_t ne = g.num_edges();
  std::function<void(int, int)> grow = [&](int opened, int closed) {
    if (closed == n) {
      const int v = rewrite_to_projection(w, g);
      if (v > 0) out[v].push_back(w);
      return;
    }
    for (std::size_t e = 0; e < ne; ++e) {
      if (opened < n) {
        w.push_back(gcat::Symbol::star(e));
        grow(opened + 1, closed);
        w.pop_back();
      }
      if (closed < opened) {
        w.push_back(gcat::Symbol::plain(e));
        grow(opened, closed + 1);
        w.pop_back();
      }
    }
  };
  grow(0, 0);
  return out;
}

mpz_class binom(long n, long k) {
  if (k < 0 || k > n) return 0;
  mpz_class r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

std::vector<mpz_class> catalan_by_recurrence(int nmax) {
  std::vector<mpz_class> c(nmax + 1, 0);
  c[0] = 1;
  for (int n = 0; n < nmax; ++n) {
    for (int k = 0; k <= n; ++k) c[n + 1] += c[k] * c[n - k];
  }
  return c;
}

std::vector<std::vector<mpz_class>> naive_vertex_counts(const Graph& g, int nmax) {
  const int nv = g.num_vertices();
  std::vector<std::vector<mpz_class>> c(nmax + 1, std::vector<mpz_class>(nv, 0));
  for (int i = 0; i < nv; ++i) c[0][i] = 1;
  for (int n = 0; n < nmax; ++n) {
    for (int i = 0; i < nv; ++i) {
      for (int k = 0; k <= n; ++k) {
        // every edge into v_{i+1} contributes c_k(source)
        mpz_class in = 0;
        for (const auto& e : g.edges()) {
          if (e.target == i + 1) in += c[k][e.source - 1];
        }
        c[n + 1][i] += c[n - k][i] * in;
      }
    }
  }
  return c;
}

Graph random_valid_graph(std::mt19937_64& rng, int max_vertices, int max_edges) {
  while (true) {
    const int n = 1 + static_cast<int>(rng() % max_vertices);
    const int m = n + static_cast<int>(rng() % (max_edges - n + 1));
    std::vector<gcat::EdgeSpec> edges;
    for (int k = 0; k < m; ++k) {
      edges.push_back({1 + static_cast<int>(rng() % n), 1 + static_cast<int>(rng() % n), std::nullopt});
    }
    try {
      return Graph::create(n, std::move(edges));
    } catch (const std::exception&) {
    }
  }
}

Graph random_twin_graph(std::mt19937_64& rng) {
  while (true) {
    const int n = 2 + static_cast<int>(rng() % 3);
    std::vector<gcat::EdgeSpec> edges;
    // shared incoming multiset for v1 and v2
    const int shared = 1 + static_cast<int>(rng() % 3);
    for (int k = 0; k < shared; ++k) {
      const int src = 1 + static_cast<int>(rng() % n);
      edges.push_back({src, 1, std::nullopt});
      edges.push_back({src, 2, std::nullopt});
    }
    for (int v = 3; v <= n; ++v) {
      const int in = 1 + static_cast<int>(rng() % 2);
      for (int k = 0; k < in; ++k) edges.push_back({1 + static_cast<int>(rng() % n), v, std::nullopt});
    }
    try {
      return Graph::create(n, std::move(edges));
    } catch (const std::exception&) {
    }
  }
}

bool reachability_irreducible(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (const auto& e : g.edges()) r[e.source - 1][e.target - 1] = true;
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (r[i][k] && r[k][j]) r[i][j] = true;
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (!r[i][j]) return false;
    }
  }
  return true;
}

bool primitive_by_powers(const Graph& g) {
  const std::size_t m = g.num_edges();
  const auto a = gcat::edge_matrix(g);
  std::vector<std::vector<bool>> p(m, std::vector<bool>(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) p[i][j] = a(i, j) != 0;
  }
  for (std::size_t k = 1; k <= m * m; ++k) {
    bool all = true;
    for (std::size_t i = 0; i < m && all; ++i) {
      for (std::size_t j = 0; j < m && all; ++j) all = p[i][j];
    }
    if (all) return true;
    std::vector<std::vector<bool>> q(m, std::vector<bool>(m, false));
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t l = 0; l < m; ++l) {
        if (!p[i][l]) continue;
        for (std::size_t j = 0; j < m; ++j) {
          if (a(l, j)) q[i][j] = true;
        }
      }
    }
    p = std::move(q);
  }
  return false;
}

}  // namespace oracle
