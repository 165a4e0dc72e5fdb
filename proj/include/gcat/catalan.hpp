#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "gcat/graph.hpp"

namespace gcat {

// counts[n][i] = c_n(v_{i+1}); totals[n] = sum over vertices.
struct CatalanTable {
  std::vector<std::vector<mpz_class>> counts;
  std::vector<mpz_class> totals;

  int nmax() const { return static_cast<int>(totals.size()) - 1; }
  int num_vertices() const { return counts.empty() ? 0 : static_cast<int>(counts[0].size()); }
  const mpz_class& at(int n, VertexId v) const { return counts.at(n).at(v - 1); }
};

// c_{n+1}(i) = sum_k c_{n-k}(i) * sum_j A_G(j,i) c_k(j), c_0(i) = 1.
CatalanTable catalan_table(const Graph& g, int nmax);

// c_n[e] for n = 0..nmax; equals c_n(s(e)).
std::vector<mpz_class> catalan_edge(const Graph& g, int nmax, EdgeId e);

// Edge-indexed recurrence c_{n+1}[e] = sum_k c_{n-k}[e] sum_f A^G(f,e) c_k[f].
// Row n holds c_n[e] for every edge.
std::vector<std::vector<mpz_class>> edge_catalan_table(const Graph& g, int nmax);

mpz_class classical_catalan(int n);
mpz_class binomial(unsigned long n, unsigned long k);

// Columns n, c_n(v1..vN), c_n^G as decimal strings.
std::string table_to_csv(const CatalanTable& t);
std::string table_to_json(const CatalanTable& t);

}  // namespace gcat
