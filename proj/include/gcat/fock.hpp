#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "gcat/graph.hpp"
#include "gcat/words.hpp"

namespace gcat {

// Truncated sub-Fock space of the edge shift. Level 0 holds one vacuum per
// vertex (position v-1 for v); level k >= 1 holds the admissible edge words
// (f_1..f_k), t(f_m) = s(f_{m+1}), in lexicographic order of edge ids.
// tail[k][p] is the level k-1 position of word p with f_1 removed; for k = 1
// it is the vacuum of t(f_1).
struct FockBasis {
  int num_vertices = 0;
  std::vector<std::vector<EdgePath>> level_words;
  std::vector<std::vector<std::size_t>> tail;

  int depth() const { return static_cast<int>(level_words.size()) - 1; }
  std::size_t level_size(int k) const { return level_words.at(k).size(); }
  std::size_t dimension() const;
  // Position in the flattened basis (levels concatenated).
  std::size_t offset(int k) const;
};

// Throws Error(resource_guard) once the basis would exceed cap vectors.
FockBasis build_fock_basis(const Graph& g, int depth, std::size_t cap = 5'000'000);

// <(T + T*)^{2n} Omega, Omega> with T = sum_e T_e and T_e the creation
// operator prepending e. Omega is the sum of the vertex vacua, or only the
// given one. depth defaults to n, which already holds every walk that returns.
mpz_class fock_moment(const Graph& g, int n, std::optional<VertexId> vacuum = std::nullopt,
                      std::optional<int> depth = std::nullopt, std::size_t cap = 5'000'000);

// Dense matrix of T_e (or T_e* when adjoint is set) on the flattened basis.
// Creation out of the top level is truncated away.
Matrix<int> fock_operator_matrix(const Graph& g, const FockBasis& b, EdgeId e, bool adjoint);

}  // namespace gcat
