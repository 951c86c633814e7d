#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace peanuts {

using Vertex = std::uint32_t;

// Sorted, duplicate-free vertex ids when used as a set.
using VertexList = std::vector<Vertex>;

// Immutable simple undirected graph in CSR form. Neighbor lists are strictly
// increasing; no self-loops, no parallel edges.
class Graph {
public:
  Graph() = default;

  // Builds from dense-id edge pairs. Self-loops are dropped, duplicates and
  // reversed copies collapse to one undirected edge.
  Graph(Vertex n, std::vector<std::pair<Vertex, Vertex>> edges);

  // Builds from already sorted, symmetric, loop-free adjacency lists.
  static Graph from_adjacency(std::vector<VertexList> adjacency);

  Vertex num_vertices() const { return n_; }
  std::uint64_t num_edges() const { return m_; }
  std::uint32_t max_degree() const { return max_degree_; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::uint32_t degree(Vertex v) const {
    return static_cast<std::uint32_t>(offsets_[v + 1] - offsets_[v]);
  }

  // Membership test in the sorted neighbor list of the lower-degree endpoint;
  // adjacent(v, v) is false.
  bool adjacent(Vertex u, Vertex v) const;

private:
  Vertex n_ = 0;
  std::uint64_t m_ = 0;
  std::uint32_t max_degree_ = 0;
  std::vector<std::uint64_t> offsets_;
  std::vector<Vertex> targets_;
};

// Result of ingesting an edge list with arbitrary non-negative integer labels.
// Labels are compacted to dense ids 0..n-1 in order of first appearance.
struct BuildResult {
  Graph graph;
  std::vector<std::uint64_t> to_original;            // dense id -> input label
  std::unordered_map<std::uint64_t, Vertex> to_dense; // input label -> dense id
};

BuildResult build_graph(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& edges);

// Reads a whitespace-separated edge list; lines starting with '#' or '%' and
// blank lines are skipped. Throws std::runtime_error on I/O or parse errors.
BuildResult load_edge_list(const std::string& path);

// m / C(n,2); defined as 1 for n <= 1 (no vertex pairs).
double edge_density(const Graph& g);

// True iff all pairs of s are adjacent; true for |s| <= 1.
bool is_clique(const Graph& g, std::span<const Vertex> s);

struct InducedSubgraph {
  Graph graph;
  VertexList to_global; // local id -> global id (strictly increasing)

  // Global id -> local id; the caller must pass a member of to_global.
  Vertex to_local(Vertex global) const;
};

// Induced subgraph on s (any order, duplicates rejected in debug builds).
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> s);

// Number of common elements of two strictly increasing lists.
std::uint64_t count_intersection(std::span<const Vertex> a, std::span<const Vertex> b);

} // namespace peanuts
