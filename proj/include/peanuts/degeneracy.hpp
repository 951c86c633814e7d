#pragma once

#include "peanuts/graph.hpp"

namespace peanuts {

// Vertex ordering from iterated minimum-degree removal. position is a
// permutation of 0..n-1 (removal rank); out_degree(v) is the number of
// neighbors removed after v; degeneracy is the maximum out-degree.
struct DegeneracyInfo {
  std::vector<Vertex> position;
  std::vector<std::uint32_t> out_degree;
  std::uint32_t degeneracy = 0;
};

// Min-degree peeling; ties in the minimum bucket broken by smallest vertex id
// so runs are reproducible.
DegeneracyInfo degeneracy_order(const Graph& g);

// Neighbors of v with larger position, sorted by vertex id.
VertexList out_neighbors(const Graph& g, const DegeneracyInfo& info, Vertex v);

} // namespace peanuts
