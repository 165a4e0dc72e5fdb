#include "gcat/kms.hpp"

#include <cmath>

#include <json.hpp>

#include "gcat/error.hpp"

namespace gcat {

KMSData perron_frobenius(const Graph& g, double tol, int max_iterations) {
  if (!is_irreducible(g) || !is_aperiodic(g)) {
    throw Error(ErrorCode::domain, "aperiodicity required: edge matrix must be irreducible and aperiodic");
  }
  const std::size_t ne = g.num_edges();
  // (A^G t)_e = sum of t_f over edges f leaving t(e)
  auto apply = [&](const std::vector<double>& t) {
    std::vector<double> at_vertex(g.num_vertices() + 1, 0.0);
    for (std::size_t f = 0; f < ne; ++f) at_vertex[g.source(f)] += t[f];
    std::vector<double> out(ne);
    for (std::size_t e = 0; e < ne; ++e) out[e] = at_vertex[g.target(e)];
    return out;
  };

  KMSData d;
  std::vector<double> t(ne, 1.0 / static_cast<double>(ne));
  for (int it = 1; it <= max_iterations; ++it) {
    std::vector<double> next = apply(t);
    double sum = 0.0;
    for (double v : next) sum += v;
    // With sum t = 1 the Rayleigh-type ratio is the sum of A^G t.
    const double r = sum;
    double residual = 0.0;
    for (std::size_t e = 0; e < ne; ++e) residual = std::max(residual, std::abs(next[e] - r * t[e]));
    for (double& v : next) v /= sum;
    t = std::move(next);
    if (residual <= tol) {
      d.r_G = r;
      d.iterations = it;
      break;
    }
    if (it == max_iterations) throw Error(ErrorCode::non_convergence, "power iteration did not converge");
  }
  const std::vector<double> at = apply(t);
  double sum = 0.0;
  for (double v : at) sum += v;
  d.r_G = sum;
  d.residual = 0.0;
  for (std::size_t e = 0; e < ne; ++e) d.residual = std::max(d.residual, std::abs(at[e] - d.r_G * t[e]));
  d.edge_vector = t;
  d.vertex_weights.resize(g.num_vertices());
  for (VertexId v = 1; v <= g.num_vertices(); ++v) {
    d.vertex_weights[v - 1] = d.r_G * t[g.incoming(v).front()];
  }
  return d;
}

double vertex_weight_spread(const Graph& g, const KMSData& d) {
  double spread = 0.0;
  for (VertexId v = 1; v <= g.num_vertices(); ++v) {
    for (EdgeId e : g.incoming(v)) {
      for (EdgeId f : g.incoming(v)) {
        spread = std::max(spread, d.r_G * std::abs(d.edge_vector[e] - d.edge_vector[f]));
      }
    }
  }
  return spread;
}

KMSCatalan kms_catalan(const Graph& g, const CatalanTable& table, int nmax, const KMSData& d,
                       const std::optional<std::vector<EdgeId>>& choice) {
  if (nmax < 0 || nmax > table.nmax()) throw Error(ErrorCode::domain, "table does not cover nmax");
  const int nv = g.num_vertices();
  std::vector<double> weight(nv);
  for (VertexId v = 1; v <= nv; ++v) {
    EdgeId e = g.incoming(v).front();
    if (choice) {
      if (static_cast<int>(choice->size()) != nv) throw Error(ErrorCode::domain, "need one edge per vertex");
      e = (*choice)[v - 1];
      if (e >= g.num_edges() || g.target(e) != v) {
        throw Error(ErrorCode::domain, "chosen edge does not end at vertex " + std::to_string(v));
      }
    }
    weight[v - 1] = d.r_G * d.edge_vector[e];
  }
  KMSCatalan out;
  out.per_vertex.assign(nmax + 1, std::vector<double>(nv));
  out.totals.assign(nmax + 1, 0.0);
  for (int n = 0; n <= nmax; ++n) {
    for (int i = 0; i < nv; ++i) {
      const double c = table.counts[n][i].get_d() * weight[i];
      out.per_vertex[n][i] = c;
      out.totals[n] += c;
    }
  }
  return out;
}

std::string kms_to_json(const KMSData& d, const KMSCatalan& c) {
  nlohmann::ordered_json doc;
  doc["r_G"] = d.r_G;
  doc["edge_vector"] = d.edge_vector;
  doc["vertex_weights"] = d.vertex_weights;
  doc["residual"] = d.residual;
  doc["iterations"] = d.iterations;
  doc["weighted_per_vertex"] = c.per_vertex;
  doc["weighted_totals"] = c.totals;
  return doc.dump(2) + "\n";
}

}  // namespace gcat
