#include "gcat/fock.hpp"

#include "gcat/error.hpp"

namespace gcat {

std::size_t FockBasis::dimension() const { return offset(depth() + 1); }

std::size_t FockBasis::offset(int k) const {
  std::size_t off = 0;
  for (int j = 0; j < k; ++j) off += level_words.at(j).size();
  return off;
}

FockBasis build_fock_basis(const Graph& g, int depth, std::size_t cap) {
  if (depth < 0) throw Error(ErrorCode::domain, "Fock depth must be non-negative");
  FockBasis b;
  b.num_vertices = g.num_vertices();
  std::size_t total = static_cast<std::size_t>(b.num_vertices);
  auto guard = [&](std::size_t more) {
    total += more;
    if (total > cap) {
      throw Error(ErrorCode::resource_guard, "Fock basis exceeded cap of " + std::to_string(cap));
    }
  };
  guard(0);
  b.level_words.push_back(std::vector<EdgePath>(b.num_vertices));
  b.tail.emplace_back();
  if (depth >= 1) {
    std::vector<EdgePath> words;
    std::vector<std::size_t> tails;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      words.push_back({e});
      tails.push_back(static_cast<std::size_t>(g.target(e) - 1));
    }
    guard(words.size());
    b.level_words.push_back(std::move(words));
    b.tail.push_back(std::move(tails));
  }
  for (int k = 2; k <= depth; ++k) {
    const auto& prev = b.level_words[k - 1];
    // Words below each source vertex, so e . u needs only t(e) = s(u_1).
    std::vector<std::vector<std::size_t>> starting_at(g.num_vertices() + 1);
    for (std::size_t p = 0; p < prev.size(); ++p) starting_at[g.source(prev[p].front())].push_back(p);
    std::vector<EdgePath> words;
    std::vector<std::size_t> tails;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      const auto& tails_for_e = starting_at[g.target(e)];
      guard(tails_for_e.size());
      for (std::size_t p : tails_for_e) {
        EdgePath w;
        w.reserve(k);
        w.push_back(e);
        w.insert(w.end(), prev[p].begin(), prev[p].end());
        words.push_back(std::move(w));
        tails.push_back(p);
      }
    }
    b.level_words.push_back(std::move(words));
    b.tail.push_back(std::move(tails));
  }
  return b;
}

mpz_class fock_moment(const Graph& g, int n, std::optional<VertexId> vacuum, std::optional<int> depth,
                      std::size_t cap) {
  if (n < 0) throw Error(ErrorCode::domain, "n must be non-negative");
  if (vacuum && (*vacuum < 1 || *vacuum > g.num_vertices())) {
    throw Error(ErrorCode::domain, "vacuum vertex out of range");
  }
  const int top = depth.value_or(n);
  if (top < n) throw Error(ErrorCode::domain, "Fock depth must be at least n");
  const FockBasis b = build_fock_basis(g, top, cap);

  std::vector<std::vector<mpz_class>> x(top + 1);
  for (int k = 0; k <= top; ++k) x[k].assign(b.level_size(k), 0);
  for (VertexId v = 1; v <= g.num_vertices(); ++v) {
    if (!vacuum || *vacuum == v) x[0][v - 1] = 1;
  }
  for (int step = 0; step < 2 * n; ++step) {
    std::vector<std::vector<mpz_class>> y(top + 1);
    for (int k = 0; k <= top; ++k) y[k].assign(b.level_size(k), 0);
    for (int k = 1; k <= top; ++k) {
      const auto& tail = b.tail[k];
      for (std::size_t p = 0; p < tail.size(); ++p) {
        // creation: level k-1 -> k
        y[k][p] += x[k - 1][tail[p]];
        // annihilation: level k -> k-1
        y[k - 1][tail[p]] += x[k][p];
      }
    }
    x = std::move(y);
  }
  mpz_class result = 0;
  for (VertexId v = 1; v <= g.num_vertices(); ++v) {
    if (!vacuum || *vacuum == v) result += x[0][v - 1];
  }
  return result;
}

Matrix<int> fock_operator_matrix(const Graph& g, const FockBasis& b, EdgeId e, bool adjoint) {
  if (e >= g.num_edges()) throw Error(ErrorCode::domain, "edge id out of range");
  const std::size_t dim = b.dimension();
  Matrix<int> m(dim, dim, 0);
  for (int k = 1; k <= b.depth(); ++k) {
    for (std::size_t p = 0; p < b.level_size(k); ++p) {
      if (b.level_words[k][p].front() != e) continue;
      const std::size_t row = b.offset(k) + p;
      const std::size_t col = b.offset(k - 1) + b.tail[k][p];
      // T_e sends the tail to the word; T_e* sends the word back to its tail.
      if (adjoint) {
        m(col, row) = 1;
      } else {
        m(row, col) = 1;
      }
    }
  }
  return m;
}

}  // namespace gcat
