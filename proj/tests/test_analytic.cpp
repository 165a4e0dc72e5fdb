#include <doctest.h>

#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>

#include "gcat/contour.hpp"
#include "gcat/error.hpp"
#include "gcat/fixtures.hpp"
#include "gcat/kms.hpp"
#include "gcat/radius.hpp"
#include "gcat/series.hpp"
#include "oracles.hpp"

using namespace gcat;

namespace {

std::vector<Graph> random_irreducibles(int count, std::uint64_t first_seed = 1) {
  std::vector<Graph> gs;
  for (std::uint64_t s = first_seed; s < first_seed + count; ++s) gs.push_back(random_irreducible(s));
  return gs;
}

double golden() { return (1.0 + std::sqrt(5.0)) / 2.0; }

}  // namespace

TEST_CASE("Newton radius on the standard families") {
  const RadiusResult g3 = radius_newton(golden_mean_graph());
  CHECK(std::abs(g3.x0 - 4.0 / 27.0) < 1e-12);
  CHECK(std::abs(g3.t[0] - 1.0 / 3.0) < 1e-10);
  CHECK(std::abs(g3.t[1] - 2.0 / 9.0) < 1e-10);
  CHECK(std::abs(g3.s[0] - 2.0 / 3.0) < 1e-8);
  CHECK(std::abs(g3.s[1] - 1.0 / 3.0) < 1e-8);
  CHECK(g3.condition_c_ok);
  for (double r : g3.residuals) CHECK(std::abs(r) <= 1e-8);
  for (int n = 1; n <= 3; ++n) {
    const RadiusResult a = radius_newton(single_vertex_loops(n));
    CHECK(std::abs(a.x0 - 0.25 / n) < 1e-12);
    CHECK(std::abs(a.t[0] - 0.5 / n) < 1e-10);
  }
  for (int n = 2; n <= 3; ++n) {
    const RadiusResult a = radius_newton(complete_graph(n));
    CHECK(std::abs(a.x0 - 0.25 / n) < 1e-12);
    for (double t : a.t) CHECK(std::abs(t - 0.5 / n) < 1e-10);
  }
}

TEST_CASE("continuation finds the same fold") {
  CHECK(std::abs(radius_continuation(golden_mean_graph()).x0 - 4.0 / 27.0) < 1e-9);
  CHECK(std::abs(radius_continuation(single_vertex_loops(1)).x0 - 0.25) < 1e-9);
  for (const Graph& g : random_irreducibles(20)) {
    const RadiusResult a = radius_newton(g);
    const RadiusResult b = radius_continuation(g);
    CHECK(std::abs(a.x0 - b.x0) <= 1e-6);
    CHECK(a.condition_c_ok);
    const double bound = 1.0 / (4.0 * static_cast<double>(column_sum_norm(vertex_matrix(g))));
    CHECK(a.x0 >= bound - 1e-12);
    for (double t : a.t) CHECK(t > 0.0);
  }
}

TEST_CASE("Newton from an explicit start and from a bad start") {
  NewtonOptions o;
  o.t_init = std::vector<double>{0.3, 0.2};
  o.x_init = 0.14;
  CHECK(std::abs(radius_newton(golden_mean_graph(), o).x0 - 4.0 / 27.0) < 1e-12);
  NewtonOptions bad;
  bad.t_init = std::vector<double>{1e-9, 1e-9};
  bad.x_init = 5.0;
  bad.max_iterations = 5;
  CHECK_THROWS_AS(radius_newton(golden_mean_graph(), bad), Error);
  const Graph split = Graph::create(2, {{1, 1, std::nullopt}, {2, 2, std::nullopt}});
  CHECK_THROWS_AS(radius_newton(split), Error);
  CHECK_THROWS_AS(radius_continuation(split), Error);
}

TEST_CASE("ratio estimates approach the radius") {
  const Graph g = golden_mean_graph();
  const double x0 = 4.0 / 27.0;
  double previous = 1.0;
  for (int depth : {51, 101, 201}) {
    const double r = radius_ratio(catalan_table(g, depth));
    const double err = std::abs(r - x0);
    CHECK(err < previous);
    previous = err;
  }
  CHECK(std::abs(radius_ratio(catalan_table(g, 201)) - x0) / x0 < 0.02);
  CHECK(std::abs(radius_ratio(catalan_table(single_vertex_loops(1), 201)) - 0.25) / 0.25 < 0.02);
  CHECK(std::abs(radius_ratio(catalan_table(g, 201), true) - x0) < std::abs(radius_ratio(catalan_table(g, 201)) - x0));
  CHECK_THROWS_AS(radius_ratio(catalan_table(g, 20)), Error);
}

TEST_CASE("condition C examples") {
  CHECK(check_condition_C(golden_mean_graph(), {1.0 / 3.0, 2.0 / 9.0}, 4.0 / 27.0));
  CHECK(check_condition_C(single_vertex_loops(3), {1.0 / 6.0}, 1.0 / 12.0));
  CHECK(check_condition_C(complete_graph(3), {1.0 / 6.0, 1.0 / 6.0, 1.0 / 6.0}, 1.0 / 12.0));
  // not an eigenvalue at all
  CHECK_FALSE(check_condition_C(golden_mean_graph(), {1.0 / 3.0, 2.0 / 9.0}, 0.3));
  // double eigenvalue: two disjoint loops with equal weights
  const Graph two_loops = Graph::create(2, {{1, 1, std::nullopt}, {2, 2, std::nullopt}});
  CHECK_FALSE(check_condition_C(two_loops, {0.5, 0.5}, 0.25));
}

TEST_CASE("fixed point w(z)") {
  const Graph g = golden_mean_graph();
  const auto w0 = solve_w(g, 0.0);
  for (const auto& v : w0) CHECK(std::abs(v) == 0.0);
  const auto w = solve_w(g, 0.05, 1e-15);
  const auto gf = series_from_table(catalan_table(g, 120));
  for (int i = 0; i < 2; ++i) {
    CHECK(std::abs(w[i].real() - (gf.per_vertex[i].evaluate(0.05) - 1.0)) < 1e-10);
    CHECK(std::abs(w[i].imag()) < 1e-15);
  }
  const Complex z(0.03, 0.04);
  const auto a = solve_w(g, z, 1e-15);
  const auto b = solve_w(g, std::conj(z), 1e-15);
  for (int i = 0; i < 2; ++i) CHECK(std::abs(a[i] - std::conj(b[i])) < 1e-14);
  CHECK_THROWS_AS(solve_w(g, 0.5), Error);
}

TEST_CASE("contour coefficient examples") {
  const Graph g = golden_mean_graph();
  for (VertexId j = 1; j <= 2; ++j) {
    CHECK(std::abs(contour_coefficient(g, 2, 1, j) - 7.0) < 1e-6);
    CHECK(std::abs(contour_coefficient(g, 2, 2, j) - 3.0) < 1e-6);
  }
  CHECK(std::abs(contour_coefficient(single_vertex_loops(2), 3, 1, 1) - 40.0) < 1e-6);
  CHECK(std::abs(cauchy_coefficient(g, 5, 1) - 728.0) / 728.0 < 1e-6);
  ContourOptions far;
  far.rho = 0.2;
  CHECK_THROWS_AS(contour_coefficient(g, 2, 1, 1, far), Error);
  far.rho = -0.1;
  CHECK_THROWS_AS(contour_coefficient(g, 2, 1, 1, far), Error);
  CHECK_THROWS_AS(contour_coefficient(g, 0, 1, 1), Error);
}

TEST_CASE("contour coefficients round to the DP on random graphs") {
  for (const Graph& g : random_irreducibles(6, 300)) {
    const CatalanTable t = catalan_table(g, 6);
    for (int n = 1; n <= 6; ++n) {
      for (VertexId i = 1; i <= g.num_vertices(); ++i) {
        const double exact = t.at(n, i).get_d();
        for (VertexId j = 1; j <= g.num_vertices(); ++j) {
          const double c = contour_coefficient(g, n, i, j);
          CHECK(std::abs(c - exact) / exact < 1e-6);
        }
      }
    }
  }
}

TEST_CASE("Perron data of G3 and loop graphs") {
  const KMSData d = perron_frobenius(golden_mean_graph());
  const double b = golden();
  CHECK(std::abs(d.r_G - b) < 1e-12);
  CHECK(std::abs(d.edge_vector[0] - std::pow(b, -2)) < 1e-12);
  CHECK(std::abs(d.edge_vector[1] - std::pow(b, -3)) < 1e-12);
  CHECK(std::abs(d.edge_vector[2] - std::pow(b, -2)) < 1e-12);
  CHECK(std::abs(d.vertex_weights[0] - 1.0 / b) < 1e-12);
  CHECK(std::abs(d.vertex_weights[1] - std::pow(b, -2)) < 1e-12);
  for (int n = 1; n <= 3; ++n) {
    const KMSData l = perron_frobenius(single_vertex_loops(n));
    CHECK(std::abs(l.r_G - n) < 1e-12);
    for (double t : l.edge_vector) CHECK(std::abs(t - 1.0 / n) < 1e-12);
  }
  CHECK_THROWS_WITH_AS(perron_frobenius(two_cycle()), doctest::Contains("aperiodicity required"), Error);
}

TEST_CASE("Perron root against a dense eigensolver") {
  std::mt19937_64 rng(61);
  int checked = 0;
  while (checked < 40) {
    const Graph g = oracle::random_valid_graph(rng, 4, 7);
    if (!is_irreducible(g) || !is_aperiodic(g)) continue;
    ++checked;
    const EdgeMatrix a = edge_matrix(g);
    Eigen::MatrixXd m(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    }
    const auto ev = Eigen::EigenSolver<Eigen::MatrixXd>(m).eigenvalues();
    double best = 0.0;
    for (Eigen::Index k = 0; k < ev.size(); ++k) best = std::max(best, std::abs(ev(k)));
    const KMSData d = perron_frobenius(g);
    CHECK(std::abs(d.r_G - best) < 1e-9);
    CHECK(d.residual <= 1e-12);
    double sum = 0.0;
    for (double t : d.edge_vector) {
      CHECK(t > 0.0);
      sum += t;
    }
    CHECK(std::abs(sum - 1.0) < 1e-12);
    double weights = 0.0;
    for (double w : d.vertex_weights) weights += w;
    CHECK(std::abs(weights - 1.0) < 1e-10);
    CHECK(vertex_weight_spread(g, d) < 1e-10);
  }
}

TEST_CASE("weighted Catalan numbers of G3") {
  const Graph g = golden_mean_graph();
  const CatalanTable t = catalan_table(g, 10);
  const KMSData d = perron_frobenius(g);
  const KMSCatalan c = kms_catalan(g, t, 10, d);
  CHECK(std::abs(c.totals[0] - 1.0) < 1e-12);
  for (int n = 1; n <= 10; ++n) {
    const double expected =
        (n * std::sqrt(5.0) + 1.0) / ((n + 1.0) * (2.0 * n + 1.0)) * oracle::binom(3 * n, n).get_d();
    CHECK(std::abs(c.totals[n] - expected) / expected < 1e-9);
  }
  // e3 instead of e1 for v1
  const KMSCatalan other = kms_catalan(g, t, 10, d, std::vector<EdgeId>{2, 1});
  for (int n = 0; n <= 10; ++n) CHECK(std::abs(other.totals[n] - c.totals[n]) <= 1e-12 * c.totals[n]);
  CHECK_THROWS_AS(kms_catalan(g, t, 10, d, std::vector<EdgeId>{1, 1}), Error);
}

TEST_CASE("weighted recurrence and normalization on aperiodic graphs") {
  std::vector<Graph> graphs{single_vertex_loops(2), complete_graph(3)};
  for (const Graph& g : random_irreducibles(20)) {
    if (is_aperiodic(g)) graphs.push_back(g);
  }
  for (const Graph& g : graphs) {
    const CatalanTable t = catalan_table(g, 12);
    const KMSData d = perron_frobenius(g);
    const KMSCatalan c = kms_catalan(g, t, 12, d);
    CHECK(std::abs(c.totals[0] - 1.0) < 1e-12);
    const VertexMatrix a = vertex_matrix(g);
    for (int n = 0; n < 12; ++n) {
      for (int i = 0; i < g.num_vertices(); ++i) {
        double rhs = 0.0;
        for (int k = 0; k <= n; ++k) {
          for (int j = 0; j < g.num_vertices(); ++j) {
            rhs += t.counts[k][j].get_d() * static_cast<double>(a(j, i)) * c.per_vertex[n - k][i];
          }
        }
        CHECK(std::abs(c.per_vertex[n + 1][i] - rhs) <= 1e-9 * rhs);
      }
    }
  }
  const KMSCatalan loops = kms_catalan(single_vertex_loops(3), catalan_table(single_vertex_loops(3), 8), 8,
                                       perron_frobenius(single_vertex_loops(3)));
  const CatalanTable lt = catalan_table(single_vertex_loops(3), 8);
  for (int n = 0; n <= 8; ++n) CHECK(std::abs(loops.totals[n] - lt.totals[n].get_d()) <= 1e-12 * loops.totals[n]);
}
