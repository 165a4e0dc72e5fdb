#pragma once

#include <cstdint>

#include "gcat/graph.hpp"

namespace gcat {

// One vertex carrying N loops.
Graph single_vertex_loops(int n);

// N vertices with exactly one edge i -> j for every ordered pair, loops included.
Graph complete_graph(int n);

// Two vertices: e1 = v1->v1, e2 = v1->v2, e3 = v2->v1.
Graph golden_mean_graph();

// v1 -> v2 -> v1; irreducible with period 2.
Graph two_cycle();

// Irreducible graph with 1..max_vertices vertices and at most max_edges edges,
// reproducible from the seed. A spanning cycle guarantees irreducibility; the
// remaining edges are drawn uniformly among ordered pairs.
Graph random_irreducible(std::uint64_t seed, int max_vertices = 3, int max_edges = 5);

}  // namespace gcat
