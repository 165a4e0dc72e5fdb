#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gcat/catalan.hpp"
#include "gcat/graph.hpp"

namespace gcat {

enum class RadiusMethod { newton, continuation, ratio };

std::string_view to_string(RadiusMethod m);

// x0 = R_G with t_i = x0 f_i(x0) and s the unit-sum eigenvector of tA_Gt at x0.
// residuals holds the N branch equations, then det(tA_Gt - x0 I), then
// x0 - (1/2) sum t_i s_i. The ratio method fills only x0.
struct RadiusResult {
  double x0 = 0.0;
  std::vector<double> t;
  std::vector<double> s;
  std::vector<double> residuals;
  bool condition_c_ok = false;
  RadiusMethod method = RadiusMethod::newton;
  int iterations = 0;
  double tol = 0.0;
};

struct NewtonOptions {
  std::optional<std::vector<double>> t_init;
  std::optional<double> x_init;
  double tol = 1e-8;
  int max_iterations = 200;
  int series_depth = 200;  // table depth behind the default initializer
};

// Damped Newton on {x = t_i - t_i sum_j A_G(j,i) t_j, det(tA_Gt - x I) = 0}
// with a central-difference Jacobian.
RadiusResult radius_newton(const Graph& g, const NewtonOptions& opts = {});

struct ContinuationOptions {
  double initial_step = 0.01;
  double max_step = 0.05;
  double min_step = 1e-12;
  double tol = 1e-8;
  int max_steps = 100000;
};

// Pseudo-arclength continuation of t - t (A_G^T t) = x 1 from the origin.
// The fold, where dx/ds changes sign, is x0.
RadiusResult radius_continuation(const Graph& g, const ContinuationOptions& opts = {});

// c_{n}/c_{n+1} at the deepest n of the table. With richardson set, the
// estimates at n and n/2 are combined to cancel the O(1/n) term.
// Throws Error(domain) when the table depth is below 32.
double radius_ratio(const CatalanTable& t, bool richardson = false);

// det(tA_Gt - x I)
double augmented_determinant(const Graph& g, const std::vector<double>& t, double x);

// True when x is a numerically simple eigenvalue of tA_Gt whose eigenvector
// has coordinate sum bounded away from zero.
bool check_condition_C(const Graph& g, const std::vector<double>& t, double x, double tol = 1e-8);

// Unit-sum null vector of tA_Gt - x I (smallest right singular vector).
std::vector<double> unit_sum_eigenvector(const Graph& g, const std::vector<double>& t, double x);

std::string radius_to_json(const RadiusResult& r);

}  // namespace gcat
