#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "gcat/catalan.hpp"
#include "gcat/graph.hpp"

namespace gcat {

// Truncated power series sum_{k <= order} a_k x^k over the rationals.
class PowerSeries {
 public:
  explicit PowerSeries(int order = 0);
  PowerSeries(std::vector<mpq_class> coeffs);

  static PowerSeries constant(const mpq_class& c, int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const mpq_class& operator[](int k) const { return coeffs_.at(k); }
  mpq_class& operator[](int k) { return coeffs_.at(k); }
  const std::vector<mpq_class>& coeffs() const { return coeffs_; }

  // Operands must share the truncation order.
  PowerSeries operator+(const PowerSeries& o) const;
  PowerSeries operator-(const PowerSeries& o) const;
  PowerSeries operator*(const PowerSeries& o) const;
  PowerSeries operator*(const mpq_class& c) const;

  PowerSeries mul_x() const;
  PowerSeries truncate(int order) const;
  bool is_zero() const;

  // Newton iteration in the series ring. inverse needs a_0 != 0; sqrt needs
  // a_0 to be the square of a positive rational and returns the root with
  // positive constant term.
  PowerSeries inverse() const;
  PowerSeries sqrt() const;

  double evaluate(double x) const;

  bool operator==(const PowerSeries&) const = default;

 private:
  std::vector<mpq_class> coeffs_;
};

// JSON list of "p/q" strings.
std::string series_to_json(const PowerSeries& s);
PowerSeries series_from_json(const std::string& text);

struct GeneratingFunctions {
  std::vector<PowerSeries> per_vertex;
  PowerSeries total;
};

GeneratingFunctions series_from_table(const CatalanTable& t);

// r_i = f_i - 1 - x f_i sum_j A_G(j,i) f_j, truncated.
// Throws Error(domain) when the orders differ or the count is not N.
std::vector<PowerSeries> functional_equation_residual(const std::vector<PowerSeries>& f,
                                                      const Graph& g);

// Builds f_i one coefficient at a time from f_i(0) = 1 and the functional
// equations alone, without the convolution table.
std::vector<PowerSeries> solve_functional_equation(const Graph& g, int order);

enum class ClosedForm { G1, G2 };

// Compares the DP series of the N-loop graph (G1) or the complete graph (G2)
// with the expansion of (1 - sqrt(1 - 4Nx)) / (2Nx); for G2 the total is N
// times that function.
bool closed_form_check(ClosedForm kind, int n_param, int order);

// Expansion of (1 - sqrt(1 - 4Nx)) / (2Nx) to the given order.
PowerSeries colored_catalan_series(int n_param, int order);

}  // namespace gcat
