#include "gcat/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <queue>
#include <string>

#include "gcat/error.hpp"

namespace gcat {

Graph Graph::create(int num_vertices, std::vector<EdgeSpec> edges) {
  if (num_vertices < 1) {
    throw Error(ErrorCode::validation, "graph must have at least one vertex");
  }
  Graph g;
  g.num_vertices_ = num_vertices;
  g.incoming_.resize(num_vertices);
  g.outgoing_.resize(num_vertices);
  g.edges_.reserve(edges.size());
  for (auto& spec : edges) {
    const EdgeId id = g.edges_.size();
    for (VertexId v : {spec.source, spec.target}) {
      if (v < 1 || v > num_vertices) {
        throw Error(ErrorCode::validation,
                    "edge " + std::to_string(id) + " references vertex " + std::to_string(v) +
                        " outside 1.." + std::to_string(num_vertices));
      }
    }
    g.outgoing_[spec.source - 1].push_back(id);
    g.incoming_[spec.target - 1].push_back(id);
    g.edges_.push_back(Edge{id, spec.source, spec.target, std::move(spec.label)});
  }
  for (VertexId v = 1; v <= num_vertices; ++v) {
    if (g.incoming(v).empty()) {
      throw Error(ErrorCode::validation, "vertex " + std::to_string(v) + " has no incoming edge");
    }
    if (g.outgoing(v).empty()) {
      throw Error(ErrorCode::validation, "vertex " + std::to_string(v) + " has no outgoing edge");
    }
  }
  return g;
}

std::string Graph::edge_name(EdgeId e) const {
  const auto& label = edges_.at(e).label;
  return label ? *label : std::to_string(e);
}

std::optional<EdgeId> Graph::find_edge(std::string_view token) const {
  for (const auto& e : edges_) {
    if (e.label && *e.label == token) return e.id;
  }
  EdgeId id = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), id);
  if (ec == std::errc{} && ptr == token.data() + token.size() && id < edges_.size()) return id;
  return std::nullopt;
}

bool Graph::operator==(const Graph& other) const {
  if (num_vertices_ != other.num_vertices_ || edges_.size() != other.edges_.size()) return false;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& a = edges_[i];
    const auto& b = other.edges_[i];
    if (a.source != b.source || a.target != b.target || a.label != b.label) return false;
  }
  return true;
}

VertexMatrix vertex_matrix(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.num_vertices());
  VertexMatrix a(n, n, 0);
  for (const auto& e : g.edges()) a(e.source - 1, e.target - 1) += 1;
  return a;
}

EdgeMatrix edge_matrix(const Graph& g) {
  const auto m = g.num_edges();
  EdgeMatrix a(m, m, 0);
  for (const auto& e : g.edges()) {
    for (EdgeId f : g.outgoing(e.target)) a(e.id, f) = 1;
  }
  return a;
}

std::int64_t column_sum_norm(const VertexMatrix& a) {
  std::int64_t best = 0;
  for (std::size_t c = 0; c < a.cols(); ++c) best = std::max(best, a.col_sum(c));
  return best;
}

namespace {

std::vector<int> bfs_levels(const Graph& g, bool forward) {
  std::vector<int> level(g.num_vertices(), -1);
  std::queue<VertexId> queue;
  level[0] = 0;
  queue.push(1);
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop();
    const auto& out = forward ? g.outgoing(v) : g.incoming(v);
    for (EdgeId e : out) {
      const VertexId w = forward ? g.target(e) : g.source(e);
      if (level[w - 1] < 0) {
        level[w - 1] = level[v - 1] + 1;
        queue.push(w);
      }
    }
  }
  return level;
}

bool all_reached(const std::vector<int>& level) {
  return std::all_of(level.begin(), level.end(), [](int l) { return l >= 0; });
}

}  // namespace

bool is_irreducible(const Graph& g) {
  return all_reached(bfs_levels(g, true)) && all_reached(bfs_levels(g, false));
}

int period(const Graph& g) {
  if (!is_irreducible(g)) {
    throw Error(ErrorCode::domain, "period is only defined for irreducible graphs");
  }
  // For BFS depths d, every edge u->v gives a closed-walk length combination
  // d(u) + 1 - d(v); their gcd is the period.
  const auto level = bfs_levels(g, true);
  int p = 0;
  for (const auto& e : g.edges()) {
    p = std::gcd(p, std::abs(level[e.source - 1] + 1 - level[e.target - 1]));
  }
  return p;
}

bool is_aperiodic(const Graph& g) { return period(g) == 1; }

}  // namespace gcat
