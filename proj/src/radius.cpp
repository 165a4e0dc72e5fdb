#include "gcat/radius.hpp"

#include <cmath>

#include <Eigen/Dense>
#include <json.hpp>

#include "gcat/error.hpp"

namespace gcat {
namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

MatrixXd dense_vertex_matrix(const Graph& g) {
  const VertexMatrix a = vertex_matrix(g);
  MatrixXd m(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = static_cast<double>(a(i, j));
  }
  return m;
}

VectorXd to_eigen(const std::vector<double>& v) { return Eigen::Map<const VectorXd>(v.data(), v.size()); }
std::vector<double> to_std(const VectorXd& v) { return {v.data(), v.data() + v.size()}; }

// (tAt)(i,j) - x delta_ij with (tAt)(i,j) = t_i A(i,j) t_j
MatrixXd shifted(const MatrixXd& a, const VectorXd& t, double x) {
  MatrixXd m = t.asDiagonal() * a * t.asDiagonal();
  m.diagonal().array() -= x;
  return m;
}

double determinant(const MatrixXd& m) {
  switch (m.rows()) {
    case 1: return m(0, 0);
    case 2: return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    case 3:
      return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
             m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
             m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
    default: return m.partialPivLu().determinant();
  }
}

// x - t_i + t_i sum_j A(j,i) t_j
VectorXd branch_residual(const MatrixXd& a, const VectorXd& t, double x) {
  const VectorXd inflow = a.transpose() * t;
  return (x - t.array() + t.array() * inflow.array()).matrix();
}

VectorXd newton_system(const MatrixXd& a, const VectorXd& z) {
  const Eigen::Index n = a.rows();
  const VectorXd t = z.head(n);
  const double x = z(n);
  VectorXd f(n + 1);
  f.head(n) = branch_residual(a, t, x);
  f(n) = determinant(shifted(a, t, x));
  return f;
}

// x_hat f_i(x_hat) from the truncated series; terms are formed in log space
// because c_n x^n can exceed the double range at depth 200.
VectorXd series_initializer(const CatalanTable& table, double x) {
  const int nv = table.num_vertices();
  VectorXd t(nv);
  const double log_x = std::log(x);
  for (int i = 0; i < nv; ++i) {
    double sum = 0.0;
    for (int n = 0; n <= table.nmax(); ++n) {
      long exp = 0;
      const double mant = mpz_get_d_2exp(&exp, table.counts[n][i].get_mpz_t());
      sum += std::exp(std::log(mant) + static_cast<double>(exp) * std::log(2.0) + n * log_x);
    }
    t(i) = x * sum;
  }
  return t;
}

void fill_diagnostics(RadiusResult& r, const Graph& g, const MatrixXd& a, double tol) {
  const VectorXd t = to_eigen(r.t);
  r.s = unit_sum_eigenvector(g, r.t, r.x0);
  const VectorXd b = branch_residual(a, t, r.x0);
  r.residuals = to_std(b);
  r.residuals.push_back(determinant(shifted(a, t, r.x0)));
  double half = 0.0;
  for (std::size_t i = 0; i < r.t.size(); ++i) half += r.t[i] * r.s[i];
  r.residuals.push_back(r.x0 - 0.5 * half);
  r.condition_c_ok = check_condition_C(g, r.t, r.x0);
  r.tol = tol;
}

}  // namespace

std::string_view to_string(RadiusMethod m) {
  switch (m) {
    case RadiusMethod::newton: return "newton";
    case RadiusMethod::continuation: return "continuation";
    case RadiusMethod::ratio: return "ratio";
  }
  return "?";
}

double augmented_determinant(const Graph& g, const std::vector<double>& t, double x) {
  return determinant(shifted(dense_vertex_matrix(g), to_eigen(t), x));
}

std::vector<double> unit_sum_eigenvector(const Graph& g, const std::vector<double>& t, double x) {
  const MatrixXd m = shifted(dense_vertex_matrix(g), to_eigen(t), x);
  Eigen::JacobiSVD<MatrixXd> svd(m, Eigen::ComputeFullV);
  VectorXd v = svd.matrixV().col(m.cols() - 1);
  const double sum = v.sum();
  if (std::abs(sum) > 1e-300) v /= sum;
  return to_std(v);
}

bool check_condition_C(const Graph& g, const std::vector<double>& t, double x, double tol) {
  const MatrixXd m = shifted(dense_vertex_matrix(g), to_eigen(t), x);
  Eigen::JacobiSVD<MatrixXd> svd(m, Eigen::ComputeFullV);
  const VectorXd& sigma = svd.singularValues();
  const double cutoff = tol * std::max(1.0, sigma(0));
  int nullity = 0;
  for (Eigen::Index k = 0; k < sigma.size(); ++k) {
    if (sigma(k) <= cutoff) ++nullity;
  }
  if (nullity != 1) return false;
  const VectorXd v = svd.matrixV().col(m.cols() - 1);
  return std::abs(v.sum()) >= std::sqrt(tol);
}

RadiusResult radius_newton(const Graph& g, const NewtonOptions& opts) {
  if (!is_irreducible(g)) throw Error(ErrorCode::domain, "radius needs an irreducible graph");
  const MatrixXd a = dense_vertex_matrix(g);
  const Eigen::Index nv = a.rows();

  VectorXd z(nv + 1);
  if (opts.t_init && opts.x_init) {
    if (static_cast<Eigen::Index>(opts.t_init->size()) != nv) {
      throw Error(ErrorCode::domain, "initial t has the wrong length");
    }
    z.head(nv) = to_eigen(*opts.t_init);
    z(nv) = *opts.x_init;
  } else {
    const CatalanTable table = catalan_table(g, std::max(opts.series_depth, 32));
    double x = opts.x_init.value_or(radius_ratio(table, true));
    if (!(x > 0.0)) x = radius_ratio(table, false);
    z.head(nv) = opts.t_init ? to_eigen(*opts.t_init) : series_initializer(table, x);
    z(nv) = x;
  }

  VectorXd f = newton_system(a, z);
  int iter = 0;
  for (; iter < opts.max_iterations; ++iter) {
    if (f.lpNorm<Eigen::Infinity>() <= 1e-15) break;
    MatrixXd jac(nv + 1, nv + 1);
    for (Eigen::Index k = 0; k <= nv; ++k) {
      const double h = 6e-6 * std::max(std::abs(z(k)), 1e-4);
      VectorXd zp = z, zm = z;
      zp(k) += h;
      zm(k) -= h;
      jac.col(k) = (newton_system(a, zp) - newton_system(a, zm)) / (2 * h);
    }
    const VectorXd dz = jac.fullPivLu().solve(-f);
    if (!dz.allFinite()) throw Error(ErrorCode::non_convergence, "singular Newton system");

    // Backtrack until the iterate stays in the positive cone and the residual drops.
    double lambda = 1.0;
    bool accepted = false;
    bool stayed_positive = false;
    while (lambda >= 1.0 / 1024) {
      const VectorXd trial = z + lambda * dz;
      if ((trial.array() > 0.0).all()) {
        stayed_positive = true;
        const VectorXd ft = newton_system(a, trial);
        if (ft.norm() < (1.0 - 1e-4 * lambda) * f.norm() || lambda == 1.0 / 1024) {
          z = trial;
          f = ft;
          accepted = true;
          break;
        }
      }
      lambda /= 2;
    }
    if (!stayed_positive) {
      throw Error(ErrorCode::domain, "Newton iterate left the positive cone");
    }
    if (!accepted) throw Error(ErrorCode::non_convergence, "Newton line search failed");
    if (lambda == 1.0 && dz.lpNorm<Eigen::Infinity>() <= 1e-15 * (1.0 + z.lpNorm<Eigen::Infinity>())) {
      ++iter;
      break;
    }
  }
  if (f.lpNorm<Eigen::Infinity>() > opts.tol) {
    throw Error(ErrorCode::non_convergence,
                "Newton did not converge in " + std::to_string(opts.max_iterations) + " iterations");
  }

  RadiusResult r;
  r.method = RadiusMethod::newton;
  r.x0 = z(nv);
  r.t = to_std(z.head(nv));
  r.iterations = iter;
  fill_diagnostics(r, g, a, opts.tol);
  if (r.condition_c_ok && std::abs(r.residuals.back()) > opts.tol) {
    throw Error(ErrorCode::non_convergence, "x0 differs from (1/2) sum t_i s_i");
  }
  return r;
}

RadiusResult radius_continuation(const Graph& g, const ContinuationOptions& opts) {
  if (!is_irreducible(g)) throw Error(ErrorCode::domain, "radius needs an irreducible graph");
  const MatrixXd a = dense_vertex_matrix(g);
  const Eigen::Index nv = a.rows();
  const Eigen::Index dim = nv + 1;

  auto residual = [&](const VectorXd& y) -> VectorXd {
    return -branch_residual(a, y.head(nv), y(nv));
  };
  // [d/dt H | d/dx H] with H = t - t (A^T t) - x 1
  auto jacobian = [&](const VectorXd& y) -> MatrixXd {
    const VectorXd t = y.head(nv);
    const VectorXd inflow = a.transpose() * t;
    MatrixXd j(nv, dim);
    for (Eigen::Index i = 0; i < nv; ++i) {
      for (Eigen::Index k = 0; k < nv; ++k) j(i, k) = -a(k, i) * t(i);
      j(i, i) += 1.0 - inflow(i);
      j(i, nv) = -1.0;
    }
    return j;
  };
  auto bordered = [&](const VectorXd& y, const VectorXd& tau) {
    MatrixXd b(dim, dim);
    b.topRows(nv) = jacobian(y);
    b.row(nv) = tau.transpose();
    return b;
  };
  // Corrects the predictor y + h tau onto the curve within the normal plane.
  auto step = [&](const VectorXd& y, const VectorXd& tau, double h,
                  VectorXd& out, VectorXd& tangent) -> bool {
    const VectorXd pred = y + h * tau;
    VectorXd p = pred;
    bool converged = false;
    for (int it = 0; it < 20; ++it) {
      VectorXd rhs(dim);
      rhs.head(nv) = residual(p);
      rhs(nv) = tau.dot(p - pred);
      const VectorXd dp = bordered(p, tau).partialPivLu().solve(-rhs);
      if (!dp.allFinite()) return false;
      p += dp;
      if (dp.lpNorm<Eigen::Infinity>() <= 1e-14 * (1.0 + p.lpNorm<Eigen::Infinity>())) {
        converged = true;
        break;
      }
    }
    if (!converged || residual(p).lpNorm<Eigen::Infinity>() > 1e-12) return false;
    if ((p - pred).norm() > h) return false;
    VectorXd e = VectorXd::Zero(dim);
    e(nv) = 1.0;
    tangent = bordered(p, tau).partialPivLu().solve(e);
    if (!tangent.allFinite()) return false;
    tangent.normalize();
    out = p;
    return true;
  };

  VectorXd y = VectorXd::Zero(dim);
  VectorXd tau = VectorXd::Ones(dim) / std::sqrt(static_cast<double>(dim));
  double h = opts.initial_step;
  int steps = 0;
  while (true) {
    if (++steps > opts.max_steps) {
      throw Error(ErrorCode::non_convergence, "continuation exceeded the step limit");
    }
    VectorXd next, next_tau;
    if (!step(y, tau, h, next, next_tau)) {
      h /= 2;
      if (h < opts.min_step) {
        throw Error(ErrorCode::non_convergence, "continuation step underflow before fold detection");
      }
      continue;
    }
    if (next_tau(nv) < 0.0) {
      // dx/ds changed sign inside (0, h]: bisect on the step length.
      double lo = 0.0, hi = h;
      VectorXd fold = next;
      while (hi - lo > 1e-13) {
        const double mid = 0.5 * (lo + hi);
        VectorXd p, pt;
        if (!step(y, tau, mid, p, pt)) break;
        fold = p;
        if (pt(nv) > 0.0) {
          lo = mid;
        } else {
          hi = mid;
        }
      }
      RadiusResult r;
      r.method = RadiusMethod::continuation;
      r.x0 = fold(nv);
      r.t = to_std(fold.head(nv));
      r.iterations = steps;
      fill_diagnostics(r, g, a, opts.tol);
      return r;
    }
    y = next;
    tau = next_tau;
    h = std::min(1.5 * h, opts.max_step);
  }
}

double radius_ratio(const CatalanTable& t, bool richardson) {
  if (t.nmax() < 32) throw Error(ErrorCode::domain, "ratio estimate needs table depth >= 32");
  auto ratio = [&](int n) { return mpq_class(t.totals[n], t.totals[n + 1]).get_d(); };
  const int n = t.nmax() - 1;
  const double rn = ratio(n);
  if (!richardson) return rn;
  const int m = n / 2;
  const double rm = ratio(m);
  return (n * rn - m * rm) / (n - m);
}

std::string radius_to_json(const RadiusResult& r) {
  nlohmann::ordered_json doc;
  doc["method"] = std::string(to_string(r.method));
  doc["x0"] = r.x0;
  doc["t"] = r.t;
  doc["s"] = r.s;
  doc["residuals"] = r.residuals;
  doc["condition_c_ok"] = r.condition_c_ok;
  doc["iterations"] = r.iterations;
  doc["tol"] = r.tol;
  return doc.dump(2) + "\n";
}

}  // namespace gcat
