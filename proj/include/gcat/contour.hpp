#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "gcat/graph.hpp"

namespace gcat {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

// Principal branch of w = z F(w), F_i(w) = (w_i + 1) sum_j A_G(j,i) (w_j + 1),
// by fixed-point iteration from w = 0. Throws Error(non_convergence) when the
// iteration diverges or stalls above tol.
ComplexVector solve_w(const Graph& g, Complex z, double tol = 1e-10, int max_iterations = 100000);

struct ContourOptions {
  std::optional<double> rho;      // default: half the ratio estimate of R_G
  std::optional<int> samples;     // default: 64 (n + 1)
  double fixed_point_tol = 1e-15;
  double max_condition = 1e12;    // reject w' solves worse than this
};

// c_n(v_i) = (1 / (2 pi sqrt(-1) n)) contour integral of
// F_j(w)^n / w_j^n * w_i'(z) dz over |z| = rho, by the trapezoid rule.
// The value does not depend on j. Throws Error(domain) for rho outside
// (0, R_G) and Error(non_convergence) when the w' system is ill-conditioned.
double contour_coefficient(const Graph& g, int n, VertexId i, VertexId j,
                           const ContourOptions& opts = {});

// (1 / 2 pi sqrt(-1)) contour integral of f_i(z) / z^(n+1) dz on the same circle.
double cauchy_coefficient(const Graph& g, int n, VertexId i, const ContourOptions& opts = {});

// Default radius: 0.5 * c_63 / c_64.
double default_contour_radius(const Graph& g);

}  // namespace gcat
