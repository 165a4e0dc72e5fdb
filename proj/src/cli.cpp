#include "gcat/cli.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gcat/catalan.hpp"
#include "gcat/combinatorics.hpp"
#include "gcat/contour.hpp"
#include "gcat/error.hpp"
#include "gcat/fixtures.hpp"
#include "gcat/fock.hpp"
#include "gcat/graph_io.hpp"
#include "gcat/kms.hpp"
#include "gcat/radius.hpp"
#include "gcat/series.hpp"
#include "gcat/words.hpp"

namespace gcat {
namespace {

using ordered_json = nlohmann::ordered_json;

struct Options {
  std::string graph;
  int n = 4;
  int order = 20;
  std::optional<int> vertex;
  std::optional<std::size_t> edge;
  std::string method = "newton";
  std::string kind = "words";
  double tol = 1e-8;
  std::optional<double> rho;
  std::optional<int> samples;
  std::string format = "text";
  std::optional<std::size_t> budget;
};

std::string fmt(double x) {
  std::ostringstream s;
  s << std::setprecision(12) << x;
  return s.str();
}

std::string join(const std::vector<double>& v) {
  std::string out;
  for (double x : v) out += (out.empty() ? "" : " ") + fmt(x);
  return out;
}

void check_vertex(const Graph& g, const Options& o) {
  if (o.vertex && (*o.vertex < 1 || *o.vertex > g.num_vertices())) {
    throw Error(ErrorCode::usage, "--vertex must be between 1 and " + std::to_string(g.num_vertices()));
  }
  if (o.edge && *o.edge >= g.num_edges()) {
    throw Error(ErrorCode::usage, "--edge must be below " + std::to_string(g.num_edges()));
  }
}

void cmd_validate(const Graph& g, const Options& o, std::ostream& out) {
  const bool irreducible = is_irreducible(g);
  const std::optional<int> per = irreducible ? std::optional<int>(period(g)) : std::nullopt;
  const auto norm = column_sum_norm(vertex_matrix(g));
  if (o.format == "json") {
    ordered_json doc;
    doc["vertices"] = g.num_vertices();
    doc["edges"] = g.num_edges();
    doc["irreducible"] = irreducible;
    doc["period"] = per ? ordered_json(*per) : ordered_json(nullptr);
    doc["aperiodic"] = per == 1;
    doc["column_sum_norm"] = norm;
    out << doc.dump(2) << "\n";
    return;
  }
  out << "vertices " << g.num_vertices() << "\n"
      << "edges " << g.num_edges() << "\n"
      << "irreducible " << (irreducible ? "yes" : "no") << "\n"
      << "period " << (per ? std::to_string(*per) : "undefined") << "\n"
      << "column_sum_norm " << norm << "\n";
}

void cmd_count(const Graph& g, const Options& o, std::ostream& out) {
  check_vertex(g, o);
  if (o.edge) {
    const auto seq = catalan_edge(g, o.n, *o.edge);
    if (o.format == "json") {
      ordered_json doc;
      doc["edge"] = g.edge_name(*o.edge);
      auto values = ordered_json::array();
      for (const auto& c : seq) values.push_back(c.get_str());
      doc["values"] = std::move(values);
      out << doc.dump(2) << "\n";
    } else {
      if (o.format == "csv") out << "n,c_n[" << g.edge_name(*o.edge) << "]\n";
      for (int n = 0; n <= o.n; ++n) {
        out << n << (o.format == "csv" ? "," : " ") << seq[n].get_str() << "\n";
      }
    }
    return;
  }
  const CatalanTable t = catalan_table(g, o.n);
  if (o.format == "json") {
    out << table_to_json(t);
  } else if (o.format == "csv") {
    out << table_to_csv(t);
  } else if (o.vertex) {
    for (int n = 0; n <= o.n; ++n) out << n << " " << t.at(n, *o.vertex).get_str() << "\n";
  } else {
    for (int n = 0; n <= o.n; ++n) {
      out << n << " " << t.totals[n].get_str();
      for (const auto& c : t.counts[n]) out << " " << c.get_str();
      out << "\n";
    }
  }
}

void cmd_enumerate(const Graph& g, const Options& o, std::ostream& out) {
  check_vertex(g, o);
  EnumerationLimits limits;
  if (o.budget) limits.max_objects = *o.budget;
  std::vector<std::string> lines;
  if (o.kind == "words") {
    for (const auto& w : enumerate_words(g, o.n, o.vertex, limits)) lines.push_back(format_word(w, g));
  } else if (o.kind == "dyck") {
    for (const auto& p : enumerate_dyck(g, o.n, o.vertex, limits)) lines.push_back(format_dyck(p, g));
  } else {
    for (const auto& t : enumerate_trees(g, o.n, o.vertex, limits)) lines.push_back(format_tree(t, g));
  }
  if (o.format == "json") {
    ordered_json doc;
    doc["kind"] = o.kind;
    doc["n"] = o.n;
    doc["count"] = lines.size();
    doc["objects"] = lines;
    out << doc.dump(2) << "\n";
  } else {
    for (const auto& l : lines) out << l << "\n";
  }
}

void cmd_series(const Graph& g, const Options& o, std::ostream& out) {
  check_vertex(g, o);
  const auto gf = series_from_table(catalan_table(g, o.order));
  const auto residual = functional_equation_residual(gf.per_vertex, g);
  bool zero = true;
  for (const auto& r : residual) zero = zero && r.is_zero();
  if (o.format == "json") {
    ordered_json doc;
    doc["order"] = o.order;
    auto per = ordered_json::array();
    for (int i = 0; i < g.num_vertices(); ++i) {
      if (o.vertex && *o.vertex != i + 1) continue;
      per.push_back(ordered_json::parse(series_to_json(gf.per_vertex[i])));
    }
    doc["per_vertex"] = std::move(per);
    doc["total"] = ordered_json::parse(series_to_json(gf.total));
    doc["residual_zero"] = zero;
    out << doc.dump(2) << "\n";
    return;
  }
  const PowerSeries& s = o.vertex ? gf.per_vertex[*o.vertex - 1] : gf.total;
  for (int k = 0; k <= o.order; ++k) out << k << " " << s[k].get_str() << "\n";
  out << "residual " << (zero ? "zero" : "nonzero") << "\n";
}

void cmd_radius(const Graph& g, const Options& o, std::ostream& out) {
  RadiusResult r;
  if (o.method == "ratio") {
    r.method = RadiusMethod::ratio;
    r.x0 = radius_ratio(catalan_table(g, std::max(o.n, 32)));
  } else if (o.method == "continuation") {
    ContinuationOptions c;
    c.tol = o.tol;
    r = radius_continuation(g, c);
  } else {
    NewtonOptions nopt;
    nopt.tol = o.tol;
    r = radius_newton(g, nopt);
  }
  if (o.format == "json") {
    out << radius_to_json(r);
    return;
  }
  out << "method " << to_string(r.method) << "\n" << "x0 " << fmt(r.x0) << "\n";
  if (r.method == RadiusMethod::ratio) return;
  out << "t " << join(r.t) << "\n"
      << "s " << join(r.s) << "\n"
      << "residuals " << join(r.residuals) << "\n"
      << "condition_C " << (r.condition_c_ok ? "yes" : "no") << "\n";
}

void cmd_kms(const Graph& g, const Options& o, std::ostream& out) {
  const KMSData d = perron_frobenius(g);
  const KMSCatalan c = kms_catalan(g, catalan_table(g, o.n), o.n, d);
  if (o.format == "json") {
    out << kms_to_json(d, c);
    return;
  }
  out << "r_G " << fmt(d.r_G) << "\n"
      << "edge_vector " << join(d.edge_vector) << "\n"
      << "vertex_weights " << join(d.vertex_weights) << "\n";
  for (int n = 0; n <= o.n; ++n) out << n << " " << fmt(c.totals[n]) << " " << join(c.per_vertex[n]) << "\n";
}

void cmd_fock(const Graph& g, const Options& o, std::ostream& out) {
  check_vertex(g, o);
  const std::size_t cap = o.budget.value_or(5'000'000);
  std::vector<std::string> moments;
  for (int k = 1; k <= o.n; ++k) moments.push_back(fock_moment(g, k, o.vertex, std::nullopt, cap).get_str());
  if (o.format == "json") {
    ordered_json doc;
    doc["vacuum"] = o.vertex ? ordered_json(*o.vertex) : ordered_json("all");
    doc["moments"] = moments;
    out << doc.dump(2) << "\n";
  } else {
    for (int k = 1; k <= o.n; ++k) out << k << " " << moments[k - 1] << "\n";
  }
}

// Returns the number of failed checks.
int selftest_graph(const Graph& g, const std::string& name, std::ostream& out) {
  int failures = 0;
  auto report = [&](const std::string& stage, bool ok, const std::string& detail = "") {
    out << (ok ? "PASS " : "FAIL ") << name << " " << stage;
    if (!detail.empty()) out << " (" << detail << ")";
    out << "\n";
    if (!ok) ++failures;
  };
  const CatalanTable table = catalan_table(g, 50);

  bool enum_ok = true;
  for (int n = 0; n <= 4 && enum_ok; ++n) {
    for (VertexId v = 1; v <= g.num_vertices(); ++v) {
      const mpz_class expected = table.at(n, v);
      enum_ok = enum_ok && enumerate_words(g, n, v).size() == expected &&
                enumerate_dyck(g, n, v).size() == expected &&
                enumerate_trees(g, n, v).size() == expected && count_trees(g, n, v) == expected;
    }
  }
  report("enumeration", enum_ok, "words, Dyck paths, trees vs DP, n <= 4");

  bool fock_ok = true;
  for (int n = 1; n <= 6; ++n) fock_ok = fock_ok && fock_moment(g, n) == table.totals[n];
  report("fock", fock_ok, "moments vs DP, 1 <= n <= 6");

  bool residual_zero = true;
  for (const auto& r : functional_equation_residual(series_from_table(table).per_vertex, g)) {
    residual_zero = residual_zero && r.is_zero();
  }
  report("series", residual_zero, "functional equation residual to order 50");

  if (!is_irreducible(g)) {
    out << "SKIP " << name << " radius (irreducible graph required)\n";
    out << "SKIP " << name << " kms (aperiodicity required)\n";
    return failures;
  }
  try {
    const RadiusResult a = radius_newton(g);
    const RadiusResult b = radius_continuation(g);
    const double bound = 1.0 / (4.0 * static_cast<double>(column_sum_norm(vertex_matrix(g))));
    report("radius", std::abs(a.x0 - b.x0) <= 1e-6 && a.x0 >= bound - 1e-12,
           "newton " + fmt(a.x0) + ", continuation " + fmt(b.x0));
  } catch (const Error& e) {
    report("radius", false, e.what());
  }
  if (!is_aperiodic(g)) {
    out << "SKIP " << name << " kms (aperiodicity required)\n";
    return failures;
  }
  const KMSData d = perron_frobenius(g);
  const KMSCatalan c = kms_catalan(g, table, 10, d);
  report("kms", std::abs(c.totals[0] - 1.0) <= 1e-9 && vertex_weight_spread(g, d) <= 1e-9,
         "weighted c_0 = " + fmt(c.totals[0]));
  return failures;
}

int cmd_selftest(const std::optional<Graph>& g, std::ostream& out) {
  int failures = 0;
  if (g) {
    failures += selftest_graph(*g, "input", out);
  } else {
    for (int n = 1; n <= 3; ++n) failures += selftest_graph(single_vertex_loops(n), "loops" + std::to_string(n), out);
    for (int n = 2; n <= 3; ++n) failures += selftest_graph(complete_graph(n), "complete" + std::to_string(n), out);
    failures += selftest_graph(golden_mean_graph(), "golden", out);
    failures += selftest_graph(two_cycle(), "cycle2", out);
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      failures += selftest_graph(random_irreducible(seed), "random" + std::to_string(seed), out);
    }
  }
  out << (failures == 0 ? "selftest passed\n" : "selftest failed\n");
  return failures;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Generalized Catalan numbers of directed graphs"};
  app.require_subcommand(1);

  const std::vector<std::string> formats{"json", "csv", "text"};
  auto add_graph = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--graph", o.graph, "graph file (JSON or plain text)");
    if (required) opt->required();
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember(formats));
  };

  auto* validate = app.add_subcommand("validate", "check a graph and print its structure");
  add_graph(validate, true);
  add_format(validate);

  auto* count = app.add_subcommand("count", "exact c_n per vertex, per edge, and total");
  add_graph(count, true);
  count->add_option("--n", o.n, "largest n")->check(CLI::NonNegativeNumber);
  count->add_option("--vertex", o.vertex, "restrict to one vertex");
  count->add_option("--edge", o.edge, "print c_n[e] for this edge id");
  add_format(count);

  auto* enumerate = app.add_subcommand("enumerate", "list Catalan words, Dyck paths, or rooted trees");
  add_graph(enumerate, true);
  enumerate->add_option("--kind", o.kind, "words|dyck|trees")
      ->check(CLI::IsMember({"words", "dyck", "trees"}));
  enumerate->add_option("--n", o.n, "size")->check(CLI::NonNegativeNumber);
  enumerate->add_option("--vertex", o.vertex, "root vertex");
  enumerate->add_option("--budget", o.budget, "maximum number of generated objects");
  add_format(enumerate);

  auto* series = app.add_subcommand("series", "generating-function coefficients as exact rationals");
  add_graph(series, true);
  series->add_option("--order", o.order, "truncation order")->check(CLI::NonNegativeNumber);
  series->add_option("--vertex", o.vertex, "print f_v instead of the total");
  add_format(series);

  auto* radius = app.add_subcommand("radius", "radius of convergence");
  add_graph(radius, true);
  radius->add_option("--method", o.method, "newton|continuation|ratio")
      ->check(CLI::IsMember({"newton", "continuation", "ratio"}));
  radius->add_option("--tol", o.tol, "residual tolerance")->check(CLI::PositiveNumber);
  radius->add_option("--n", o.n, "table depth for the ratio method (at least 32)");
  add_format(radius);

  auto* kms = app.add_subcommand("kms", "Perron-Frobenius data and weighted Catalan numbers");
  add_graph(kms, true);
  kms->add_option("--n", o.n, "largest n")->check(CLI::NonNegativeNumber);
  add_format(kms);

  auto* fock = app.add_subcommand("fock", "vacuum moments of the creation operators");
  add_graph(fock, true);
  fock->add_option("--n", o.n, "largest n")->check(CLI::NonNegativeNumber);
  fock->add_option("--vertex", o.vertex, "use only this vertex vacuum");
  fock->add_option("--budget", o.budget, "Fock basis size cap");
  add_format(fock);

  auto* contour = app.add_subcommand("contour", "coefficient c_n(v) from the contour integral");
  add_graph(contour, true);
  contour->add_option("--n", o.n, "coefficient index")->check(CLI::PositiveNumber);
  contour->add_option("--vertex", o.vertex, "vertex i")->required();
  contour->add_option("--rho", o.rho, "contour radius")->check(CLI::PositiveNumber);
  contour->add_option("--samples", o.samples, "quadrature points")->check(CLI::PositiveNumber);
  add_format(contour);

  auto* selftest = app.add_subcommand("selftest", "cross-check the DP against every oracle");
  add_graph(selftest, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "gcat: error[usage]: " << e.what() << "\n";
    return 1;
  }

  try {
    if (*selftest) {
      std::optional<Graph> g;
      if (!o.graph.empty()) g = read_graph_file(o.graph);
      return cmd_selftest(g, out) == 0 ? 0 : 1;
    }
    const Graph g = read_graph_file(o.graph);
    if (*validate) cmd_validate(g, o, out);
    if (*count) cmd_count(g, o, out);
    if (*enumerate) cmd_enumerate(g, o, out);
    if (*series) cmd_series(g, o, out);
    if (*radius) cmd_radius(g, o, out);
    if (*kms) cmd_kms(g, o, out);
    if (*fock) cmd_fock(g, o, out);
    if (*contour) {
      check_vertex(g, o);
      ContourOptions copt;
      copt.rho = o.rho;
      copt.samples = o.samples;
      std::vector<double> by_j;
      for (VertexId j = 1; j <= g.num_vertices(); ++j) {
        by_j.push_back(contour_coefficient(g, o.n, *o.vertex, j, copt));
      }
      const double cauchy = cauchy_coefficient(g, o.n, *o.vertex, copt);
      if (o.format == "json") {
        ordered_json doc;
        doc["n"] = o.n;
        doc["vertex"] = *o.vertex;
        doc["by_j"] = by_j;
        doc["cauchy"] = cauchy;
        doc["rounded"] = std::llround(by_j.front());
        out << doc.dump(2) << "\n";
      } else {
        out << "by_j " << join(by_j) << "\n"
            << "cauchy " << fmt(cauchy) << "\n"
            << "rounded " << std::llround(by_j.front()) << "\n";
      }
    }
    return 0;
  } catch (const Error& e) {
    err << "gcat: error[" << to_string(e.code()) << "]: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "gcat: error[internal]: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace gcat
