#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gcat/catalan.hpp"
#include "gcat/graph.hpp"

namespace gcat {

// Perron data of the edge matrix: A^G t = r_G t, t > 0, sum t_e = 1.
// vertex_weights[i] = r_G t_e for an edge e into v_{i+1}.
struct KMSData {
  double r_G = 0.0;
  std::vector<double> edge_vector;
  std::vector<double> vertex_weights;
  double residual = 0.0;  // max |A^G t - r_G t|
  int iterations = 0;
};

// Power iteration on A^G. Throws Error(domain) "aperiodicity required" for
// reducible or periodic graphs and Error(non_convergence) past max_iterations.
KMSData perron_frobenius(const Graph& g, double tol = 1e-13, int max_iterations = 1000000);

// Largest difference r_G (t_e - t_f) over edges e, f sharing a target.
double vertex_weight_spread(const Graph& g, const KMSData& d);

struct KMSCatalan {
  std::vector<std::vector<double>> per_vertex;  // [n][i] = c_n(v_{i+1}) r_G t_{e_i}
  std::vector<double> totals;
};

// Weighted Catalan numbers for n = 0..nmax (table depth must cover nmax).
// choice[i], when given, names the incoming edge e_i used for v_{i+1};
// otherwise the lowest-id incoming edge is used.
KMSCatalan kms_catalan(const Graph& g, const CatalanTable& table, int nmax, const KMSData& d,
                       const std::optional<std::vector<EdgeId>>& choice = std::nullopt);

std::string kms_to_json(const KMSData& d, const KMSCatalan& c);

}  // namespace gcat
