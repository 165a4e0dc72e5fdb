#include "gcat/fixtures.hpp"

#include <random>

#include "gcat/error.hpp"

namespace gcat {

Graph single_vertex_loops(int n) {
  if (n < 1) throw Error(ErrorCode::domain, "need at least one loop");
  std::vector<EdgeSpec> edges;
  for (int k = 0; k < n; ++k) edges.push_back({1, 1, std::nullopt});
  return Graph::create(1, std::move(edges));
}

Graph complete_graph(int n) {
  if (n < 1) throw Error(ErrorCode::domain, "need at least one vertex");
  std::vector<EdgeSpec> edges;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) edges.push_back({i, j, std::nullopt});
  }
  return Graph::create(n, std::move(edges));
}

Graph golden_mean_graph() {
  return Graph::create(2, {{1, 1, "e1"}, {1, 2, "e2"}, {2, 1, "e3"}});
}

Graph two_cycle() { return Graph::create(2, {{1, 2, "a"}, {2, 1, "b"}}); }

Graph random_irreducible(std::uint64_t seed, int max_vertices, int max_edges) {
  if (max_vertices < 1 || max_edges < max_vertices) {
    throw Error(ErrorCode::domain, "random graph needs max_edges >= max_vertices >= 1");
  }
  // Draws by modulo keep the sequence identical across standard libraries.
  std::mt19937_64 rng(seed);
  auto draw = [&](int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); };
  const int n = draw(1, max_vertices);
  const int m = draw(n, max_edges);
  std::vector<EdgeSpec> edges;
  for (int v = 1; v <= n; ++v) edges.push_back({v, v % n + 1, std::nullopt});
  while (static_cast<int>(edges.size()) < m) edges.push_back({draw(1, n), draw(1, n), std::nullopt});
  // Shuffle so the spanning cycle does not always own the low edge ids.
  for (std::size_t k = edges.size(); k > 1; --k) {
    std::swap(edges[k - 1], edges[rng() % k]);
  }
  return Graph::create(n, std::move(edges));
}

}  // namespace gcat
