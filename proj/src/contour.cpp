#include "gcat/contour.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/Dense>

#include "gcat/catalan.hpp"
#include "gcat/error.hpp"
#include "gcat/radius.hpp"

namespace gcat {
namespace {

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

struct Incoming {
  // in[i] lists (j, A_G(j,i)) with nonzero multiplicity
  std::vector<std::vector<std::pair<int, double>>> in;
};

Incoming incoming_weights(const Graph& g) {
  const VertexMatrix a = vertex_matrix(g);
  Incoming w;
  w.in.resize(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.rows(); ++j) {
      if (a(j, i) != 0) w.in[i].emplace_back(static_cast<int>(j), static_cast<double>(a(j, i)));
    }
  }
  return w;
}

// s_i = sum_j A_G(j,i) (w_j + 1)
CVector inflow(const Incoming& a, const CVector& w) {
  CVector s = CVector::Zero(w.size());
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    for (auto [j, m] : a.in[i]) s(i) += m * (w(j) + 1.0);
  }
  return s;
}

CVector solve_fixed_point(const Incoming& a, Complex z, double tol, int max_iterations) {
  const Eigen::Index n = static_cast<Eigen::Index>(a.in.size());
  CVector w = CVector::Zero(n);
  for (int it = 0; it < max_iterations; ++it) {
    const CVector next = z * (w.array() + 1.0).matrix().cwiseProduct(inflow(a, w));
    const double change = (next - w).lpNorm<Eigen::Infinity>();
    w = next;
    if (!w.allFinite() || w.lpNorm<Eigen::Infinity>() > 1e12) {
      throw Error(ErrorCode::non_convergence, "fixed-point iteration for w diverged; |z| too large");
    }
    if (change <= tol * (1.0 + w.lpNorm<Eigen::Infinity>())) return w;
  }
  throw Error(ErrorCode::non_convergence, "fixed-point iteration for w did not settle");
}

void check_args(const Graph& g, int n, VertexId i) {
  if (n < 1) throw Error(ErrorCode::domain, "contour coefficient needs n >= 1");
  if (i < 1 || i > g.num_vertices()) throw Error(ErrorCode::domain, "vertex out of range");
}

double upper_radius(const Graph& g) {
  try {
    NewtonOptions o;
    o.series_depth = 64;
    return radius_newton(g, o).x0;
  } catch (const Error&) {
    return radius_ratio(catalan_table(g, 64), true);
  }
}

struct Circle {
  double rho;
  int samples;
};

Circle circle_for(const Graph& g, int n, const ContourOptions& opts) {
  Circle c{opts.rho.value_or(default_contour_radius(g)), opts.samples.value_or(64 * (n + 1))};
  if (c.samples < 1) throw Error(ErrorCode::domain, "sample count must be positive");
  if (!(c.rho > 0.0) || c.rho >= upper_radius(g)) {
    throw Error(ErrorCode::domain, "rho must lie strictly between 0 and the radius of convergence");
  }
  return c;
}

Complex sample_point(const Circle& c, int k) {
  const double theta = 2.0 * std::numbers::pi * k / c.samples;
  return std::polar(c.rho, theta);
}

}  // namespace

ComplexVector solve_w(const Graph& g, Complex z, double tol, int max_iterations) {
  const CVector w = solve_fixed_point(incoming_weights(g), z, tol, max_iterations);
  return {w.data(), w.data() + w.size()};
}

double default_contour_radius(const Graph& g) { return 0.5 * radius_ratio(catalan_table(g, 64)); }

double contour_coefficient(const Graph& g, int n, VertexId i, VertexId j, const ContourOptions& opts) {
  check_args(g, n, i);
  check_args(g, n, j);
  const Circle c = circle_for(g, n, opts);
  const Incoming a = incoming_weights(g);
  const Eigen::Index nv = g.num_vertices();
  const CMatrix id = CMatrix::Identity(nv, nv);

  Complex sum = 0.0;
  for (int k = 0; k < c.samples; ++k) {
    const Complex z = sample_point(c, k);
    const CVector w = solve_fixed_point(a, z, opts.fixed_point_tol, 100000);
    const CVector s = inflow(a, w);
    const CVector f = (w.array() + 1.0).matrix().cwiseProduct(s);
    // J_F(r,q) = delta_rq s_r + (w_r + 1) A_G(q,r)
    CMatrix jf = s.asDiagonal();
    for (Eigen::Index r = 0; r < nv; ++r) {
      for (auto [q, m] : a.in[r]) jf(r, q) += (w(r) + 1.0) * m;
    }
    const CMatrix lhs = id - z * jf;
    Eigen::JacobiSVD<CMatrix> svd(lhs);
    const auto& sv = svd.singularValues();
    if (sv(nv - 1) == 0.0 || sv(0) / sv(nv - 1) > opts.max_condition) {
      throw Error(ErrorCode::non_convergence, "derivative system for w' is ill-conditioned near R_G");
    }
    const CVector dw = lhs.partialPivLu().solve(f);
    const Complex ratio = f(j - 1) / w(j - 1);
    sum += std::pow(ratio, n) * dw(i - 1) * z;
  }
  return (sum / (static_cast<double>(n) * c.samples)).real();
}

double cauchy_coefficient(const Graph& g, int n, VertexId i, const ContourOptions& opts) {
  check_args(g, n, i);
  const Circle c = circle_for(g, n, opts);
  const Incoming a = incoming_weights(g);
  Complex sum = 0.0;
  for (int k = 0; k < c.samples; ++k) {
    const Complex z = sample_point(c, k);
    const CVector w = solve_fixed_point(a, z, opts.fixed_point_tol, 100000);
    sum += (1.0 + w(i - 1)) * std::pow(z, -n);
  }
  return (sum / static_cast<double>(c.samples)).real();
}

}  // namespace gcat
