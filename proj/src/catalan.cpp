#include "gcat/catalan.hpp"

#include <json.hpp>

#include "gcat/error.hpp"

namespace gcat {

CatalanTable catalan_table(const Graph& g, int nmax) {
  if (nmax < 0) throw Error(ErrorCode::domain, "nmax must be non-negative");
  const int nv = g.num_vertices();
  const VertexMatrix a = vertex_matrix(g);
  // Incoming multiplicities per vertex, skipping zero entries.
  std::vector<std::vector<std::pair<int, long>>> in(nv);
  for (int i = 0; i < nv; ++i) {
    for (int j = 0; j < nv; ++j) {
      if (a(j, i) != 0) in[i].emplace_back(j, static_cast<long>(a(j, i)));
    }
  }

  CatalanTable t;
  t.counts.assign(nmax + 1, std::vector<mpz_class>(nv));
  t.totals.assign(nmax + 1, 0);
  for (int i = 0; i < nv; ++i) t.counts[0][i] = 1;

  // inflow[k][i] = sum_j A_G(j,i) c_k(j)
  std::vector<std::vector<mpz_class>> inflow;
  inflow.reserve(nmax + 1);
  mpz_class term;
  for (int n = 0; n < nmax; ++n) {
    std::vector<mpz_class> row(nv);
    for (int i = 0; i < nv; ++i) {
      for (auto [j, m] : in[i]) {
        mpz_mul_si(term.get_mpz_t(), t.counts[n][j].get_mpz_t(), m);
        row[i] += term;
      }
    }
    inflow.push_back(std::move(row));
    for (int i = 0; i < nv; ++i) {
      mpz_class& out = t.counts[n + 1][i];
      for (int k = 0; k <= n; ++k) {
        mpz_addmul(out.get_mpz_t(), t.counts[n - k][i].get_mpz_t(), inflow[k][i].get_mpz_t());
      }
    }
  }
  for (int n = 0; n <= nmax; ++n) {
    for (const auto& c : t.counts[n]) t.totals[n] += c;
  }
  return t;
}

std::vector<mpz_class> catalan_edge(const Graph& g, int nmax, EdgeId e) {
  if (e >= g.num_edges()) throw Error(ErrorCode::domain, "edge id out of range");
  const CatalanTable t = catalan_table(g, nmax);
  std::vector<mpz_class> out;
  out.reserve(nmax + 1);
  for (int n = 0; n <= nmax; ++n) out.push_back(t.at(n, g.source(e)));
  return out;
}

std::vector<std::vector<mpz_class>> edge_catalan_table(const Graph& g, int nmax) {
  if (nmax < 0) throw Error(ErrorCode::domain, "nmax must be non-negative");
  const std::size_t ne = g.num_edges();
  const EdgeMatrix a = edge_matrix(g);
  std::vector<std::vector<mpz_class>> c(nmax + 1, std::vector<mpz_class>(ne));
  std::vector<std::vector<mpz_class>> inflow;
  for (std::size_t e = 0; e < ne; ++e) c[0][e] = 1;
  for (int n = 0; n < nmax; ++n) {
    std::vector<mpz_class> row(ne);
    for (std::size_t e = 0; e < ne; ++e) {
      for (std::size_t f = 0; f < ne; ++f) {
        if (a(f, e)) row[e] += c[n][f];
      }
    }
    inflow.push_back(std::move(row));
    for (std::size_t e = 0; e < ne; ++e) {
      for (int k = 0; k <= n; ++k) c[n + 1][e] += c[n - k][e] * inflow[k][e];
    }
  }
  return c;
}

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

mpz_class classical_catalan(int n) {
  if (n < 0) throw Error(ErrorCode::domain, "n must be non-negative");
  mpz_class r = binomial(2 * static_cast<unsigned long>(n), n);
  mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), n + 1);
  return r;
}

std::string table_to_csv(const CatalanTable& t) {
  std::string out = "n";
  for (int i = 1; i <= t.num_vertices(); ++i) out += ",c_n(v" + std::to_string(i) + ")";
  out += ",total\n";
  for (int n = 0; n <= t.nmax(); ++n) {
    out += std::to_string(n);
    for (const auto& c : t.counts[n]) out += "," + c.get_str();
    out += "," + t.totals[n].get_str() + "\n";
  }
  return out;
}

std::string table_to_json(const CatalanTable& t) {
  nlohmann::ordered_json doc;
  doc["nmax"] = t.nmax();
  doc["vertices"] = t.num_vertices();
  auto rows = nlohmann::ordered_json::array();
  for (int n = 0; n <= t.nmax(); ++n) {
    nlohmann::ordered_json row;
    row["n"] = n;
    auto per = nlohmann::ordered_json::array();
    for (const auto& c : t.counts[n]) per.push_back(c.get_str());
    row["per_vertex"] = std::move(per);
    row["total"] = t.totals[n].get_str();
    rows.push_back(std::move(row));
  }
  doc["rows"] = std::move(rows);
  return doc.dump(2) + "\n";
}

}  // namespace gcat
