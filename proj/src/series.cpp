#include "gcat/series.hpp"

#include <json.hpp>

#include "gcat/error.hpp"
#include "gcat/fixtures.hpp"

namespace gcat {
namespace {

void same_order(const PowerSeries& a, const PowerSeries& b) {
  if (a.order() != b.order()) {
    throw Error(ErrorCode::domain, "series truncation orders differ: " + std::to_string(a.order()) +
                                       " vs " + std::to_string(b.order()));
  }
}

bool is_square(const mpz_class& z) { return z >= 0 && mpz_perfect_square_p(z.get_mpz_t()); }

}  // namespace

PowerSeries::PowerSeries(int order) {
  if (order < 0) throw Error(ErrorCode::domain, "series order must be non-negative");
  coeffs_.assign(order + 1, 0);
}

PowerSeries::PowerSeries(std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw Error(ErrorCode::domain, "series needs at least one coefficient");
}

PowerSeries PowerSeries::constant(const mpq_class& c, int order) {
  PowerSeries s(order);
  s.coeffs_[0] = c;
  return s;
}

PowerSeries PowerSeries::operator+(const PowerSeries& o) const {
  same_order(*this, o);
  PowerSeries r = *this;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) r.coeffs_[k] += o.coeffs_[k];
  return r;
}

PowerSeries PowerSeries::operator-(const PowerSeries& o) const {
  same_order(*this, o);
  PowerSeries r = *this;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) r.coeffs_[k] -= o.coeffs_[k];
  return r;
}

PowerSeries PowerSeries::operator*(const PowerSeries& o) const {
  same_order(*this, o);
  const int m = order();
  PowerSeries r(m);
  for (int i = 0; i <= m; ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (int j = 0; i + j <= m; ++j) r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return r;
}

PowerSeries PowerSeries::operator*(const mpq_class& c) const {
  PowerSeries r = *this;
  for (auto& a : r.coeffs_) a *= c;
  return r;
}

PowerSeries PowerSeries::mul_x() const {
  PowerSeries r(order());
  for (int k = order(); k >= 1; --k) r.coeffs_[k] = coeffs_[k - 1];
  return r;
}

PowerSeries PowerSeries::truncate(int new_order) const {
  PowerSeries r(new_order);
  for (int k = 0; k <= new_order && k <= order(); ++k) r.coeffs_[k] = coeffs_[k];
  return r;
}

bool PowerSeries::is_zero() const {
  for (const auto& a : coeffs_) {
    if (sgn(a) != 0) return false;
  }
  return true;
}

PowerSeries PowerSeries::inverse() const {
  if (sgn(coeffs_[0]) == 0) throw Error(ErrorCode::domain, "series inverse needs a nonzero constant term");
  const int m = order();
  PowerSeries b = constant(1 / coeffs_[0], 0);
  // Each pass doubles the number of correct coefficients: b <- b (2 - a b).
  for (int known = 1; known <= m; known *= 2) {
    const int next = std::min(m, 2 * known);
    const PowerSeries a = truncate(next);
    const PowerSeries bb = b.truncate(next);
    b = bb * (constant(2, next) - a * bb);
  }
  return b.truncate(m);
}

PowerSeries PowerSeries::sqrt() const {
  const mpq_class& a0 = coeffs_[0];
  if (sgn(a0) <= 0 || !is_square(a0.get_num()) || !is_square(a0.get_den())) {
    throw Error(ErrorCode::domain, "series square root needs a rational square constant term");
  }
  mpz_class num, den;
  mpz_sqrt(num.get_mpz_t(), a0.get_num_mpz_t());
  mpz_sqrt(den.get_mpz_t(), a0.get_den_mpz_t());
  const int m = order();
  PowerSeries y = constant(mpq_class(num, den), 0);
  // y <- (y + a / y) / 2
  for (int known = 1; known <= m; known *= 2) {
    const int next = std::min(m, 2 * known);
    const PowerSeries yy = y.truncate(next);
    y = (yy + truncate(next) * yy.inverse()) * mpq_class(1, 2);
  }
  return y.truncate(m);
}

double PowerSeries::evaluate(double x) const {
  double acc = 0.0;
  for (int k = order(); k >= 0; --k) acc = acc * x + coeffs_[k].get_d();
  return acc;
}

std::string series_to_json(const PowerSeries& s) {
  auto arr = nlohmann::json::array();
  for (const auto& a : s.coeffs()) arr.push_back(a.get_num().get_str() + "/" + a.get_den().get_str());
  return arr.dump();
}

PowerSeries series_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::parse, std::string("malformed series JSON: ") + e.what());
  }
  if (!doc.is_array() || doc.empty()) throw Error(ErrorCode::parse, "series JSON must be a nonempty array");
  std::vector<mpq_class> coeffs;
  for (const auto& item : doc) {
    if (!item.is_string()) throw Error(ErrorCode::parse, "series coefficients must be strings");
    mpq_class q;
    if (q.set_str(item.get<std::string>(), 10) != 0) {
      throw Error(ErrorCode::parse, "bad rational \"" + item.get<std::string>() + "\"");
    }
    q.canonicalize();
    coeffs.push_back(q);
  }
  return PowerSeries(std::move(coeffs));
}

GeneratingFunctions series_from_table(const CatalanTable& t) {
  const int m = t.nmax();
  GeneratingFunctions out{std::vector<PowerSeries>(t.num_vertices(), PowerSeries(m)), PowerSeries(m)};
  for (int n = 0; n <= m; ++n) {
    for (int i = 0; i < t.num_vertices(); ++i) out.per_vertex[i][n] = t.counts[n][i];
    out.total[n] = t.totals[n];
  }
  return out;
}

std::vector<PowerSeries> functional_equation_residual(const std::vector<PowerSeries>& f,
                                                      const Graph& g) {
  const int nv = g.num_vertices();
  if (static_cast<int>(f.size()) != nv) {
    throw Error(ErrorCode::domain, "expected one series per vertex");
  }
  const int m = f.front().order();
  for (const auto& s : f) same_order(f.front(), s);
  const VertexMatrix a = vertex_matrix(g);
  std::vector<PowerSeries> r;
  r.reserve(nv);
  for (int i = 0; i < nv; ++i) {
    PowerSeries inflow(m);
    for (int j = 0; j < nv; ++j) {
      if (a(j, i) != 0) inflow = inflow + f[j] * mpq_class(a(j, i));
    }
    r.push_back(f[i] - PowerSeries::constant(1, m) - (f[i] * inflow).mul_x());
  }
  return r;
}

std::vector<PowerSeries> solve_functional_equation(const Graph& g, int order) {
  const int nv = g.num_vertices();
  const VertexMatrix a = vertex_matrix(g);
  std::vector<PowerSeries> f(nv, PowerSeries::constant(1, order));
  // Coefficient n of the right-hand side uses only coefficients < n of f, so
  // each pass of f <- 1 + x f (A^T f) settles one more coefficient.
  for (int pass = 0; pass < order; ++pass) {
    std::vector<PowerSeries> next;
    next.reserve(nv);
    for (int i = 0; i < nv; ++i) {
      PowerSeries inflow(order);
      for (int j = 0; j < nv; ++j) {
        if (a(j, i) != 0) inflow = inflow + f[j] * mpq_class(a(j, i));
      }
      next.push_back(PowerSeries::constant(1, order) + (f[i] * inflow).mul_x());
    }
    f = std::move(next);
  }
  return f;
}

PowerSeries colored_catalan_series(int n_param, int order) {
  if (n_param < 1) throw Error(ErrorCode::domain, "N must be positive");
  PowerSeries radicand(order + 1);
  radicand[0] = 1;
  radicand[1] = -4 * n_param;
  const PowerSeries root = radicand.sqrt();
  // (1 - root) has no constant term; dividing by x shifts down by one.
  PowerSeries out(order);
  const mpq_class scale(1, 2 * n_param);
  for (int k = 0; k <= order; ++k) out[k] = -root[k + 1] * scale;
  return out;
}

bool closed_form_check(ClosedForm kind, int n_param, int order) {
  const PowerSeries expected = colored_catalan_series(n_param, order);
  if (kind == ClosedForm::G1) {
    const auto gf = series_from_table(catalan_table(single_vertex_loops(n_param), order));
    return gf.per_vertex[0] == expected;
  }
  const auto gf = series_from_table(catalan_table(complete_graph(n_param), order));
  return gf.total == expected * mpq_class(n_param);
}

}  // namespace gcat
