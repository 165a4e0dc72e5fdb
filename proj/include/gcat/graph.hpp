#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gcat {

// Vertices are numbered 1..N, edges 0..|E|-1.
using VertexId = int;
using EdgeId = std::size_t;

struct Edge {
  EdgeId id = 0;
  VertexId source = 0;
  VertexId target = 0;
  std::optional<std::string> label;
};

struct EdgeSpec {
  VertexId source = 0;
  VertexId target = 0;
  std::optional<std::string> label;
};

// Dense row-major matrix, 0-based. For vertex matrices row/column k stands
// for vertex k+1.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, T fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) data_.insert(data_.end(), row.begin(), row.end());
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  T row_sum(std::size_t r) const {
    T s{};
    for (std::size_t c = 0; c < cols_; ++c) s += (*this)(r, c);
    return s;
  }
  T col_sum(std::size_t c) const {
    T s{};
    for (std::size_t r = 0; r < rows_; ++r) s += (*this)(r, c);
    return s;
  }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

// A_G(i,j) = number of edges v_i -> v_j.
using VertexMatrix = Matrix<std::int64_t>;
// A^G(e,f) = 1 iff t(e) = s(f).
using EdgeMatrix = Matrix<std::uint8_t>;

// Finite directed multigraph in which every vertex has at least one incoming
// and one outgoing edge. Parallel edges and self-loops are allowed.
class Graph {
 public:
  // Throws Error(validation) naming the offending vertex or edge.
  static Graph create(int num_vertices, std::vector<EdgeSpec> edges);

  int num_vertices() const { return num_vertices_; }
  std::size_t num_edges() const { return edges_.size(); }

  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  std::span<const Edge> edges() const { return edges_; }

  VertexId source(EdgeId e) const { return edges_[e].source; }
  VertexId target(EdgeId e) const { return edges_[e].target; }

  // Edge ids in increasing order.
  const std::vector<EdgeId>& incoming(VertexId v) const { return incoming_[v - 1]; }
  const std::vector<EdgeId>& outgoing(VertexId v) const { return outgoing_[v - 1]; }

  // Display name: the label when present, otherwise the decimal id.
  std::string edge_name(EdgeId e) const;
  // Resolves a token produced by edge_name (label first, then numeric id).
  std::optional<EdgeId> find_edge(std::string_view token) const;

  bool operator==(const Graph& other) const;

 private:
  Graph() = default;

  int num_vertices_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incoming_;
  std::vector<std::vector<EdgeId>> outgoing_;
};

VertexMatrix vertex_matrix(const Graph& g);
EdgeMatrix edge_matrix(const Graph& g);

// Maximum column sum of the vertex matrix, max_i sum_j A_G(j,i).
std::int64_t column_sum_norm(const VertexMatrix& a);

// Strong connectivity of the vertex digraph.
bool is_irreducible(const Graph& g);

// Period of an irreducible graph: gcd of its cycle lengths.
// Throws Error(domain) when g is not irreducible.
int period(const Graph& g);
bool is_aperiodic(const Graph& g);

}  // namespace gcat
