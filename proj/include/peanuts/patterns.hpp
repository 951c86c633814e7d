#pragma once

#include "peanuts/degeneracy.hpp"
#include "peanuts/graph.hpp"

namespace peanuts {

enum class PatternKind {
  KClique,  // k vertices, no missing edge
  K1,       // k vertices, exactly 1 missing edge
  K2Type1,  // k vertices, 2 missing edges sharing a vertex
  K2Type2,  // k vertices, 2 vertex-disjoint missing edges
};

const char* pattern_name(PatternKind kind);

// Pattern bookkeeping: h is the embedded clique size sampled for the pattern
// (k, k-1, k-1, k-2 respectively), bound the upper bound B on the per-clique
// counting function.
struct PatternSpec {
  PatternKind kind = PatternKind::KClique;
  int k = 0;
  int h = 0;
  double bound = 0.0;
};

// Validates k for the kind (k >= 3; the (k,2) kinds need k >= 4) and fills in
// h and B from the graph's max degree and degeneracy.
PatternSpec make_pattern(PatternKind kind, int k, const Graph& g, const DegeneracyInfo& info);

// f == 1: turns either estimator into a plain k-clique counter.
std::uint64_t func_kclique(const Graph& g, std::span<const Vertex> clique);

// Number of (k,1)-cliques K+{nbr} charged to the (k-1)-clique K: nbr is
// adjacent to all of K except one vertex w, and nbr > w by vertex id (each
// (k,1)-clique is charged to exactly one of its two embedded cliques).
// When out is non-null, the completed vertex sets are appended to it.
std::uint64_t func_k1(const Graph& g, std::span<const Vertex> clique,
                      std::vector<VertexList>* out = nullptr);

// Number of Type 1 (k,2)-cliques containing the (k-1)-clique K: over pairs
// {u,v} in K, vertices outside K adjacent to all of K but u and v.
std::uint64_t func_k2_type1(const Graph& g, std::span<const Vertex> clique,
                            std::vector<VertexList>* out = nullptr);

// Number of Type 2 (k,2)-cliques whose lowest-order (k-2)-clique is K. The
// canonical form fixes missing edges (u,v), (w,x) with u,w in K and
// position(u) < position(w) < position(x), position(u) < position(v) in the
// degeneracy order, so every instance is counted exactly once.
std::uint64_t func_k2_type2(const Graph& g, const DegeneracyInfo& info,
                            std::span<const Vertex> clique,
                            std::vector<VertexList>* out = nullptr);

// Dispatch on the pattern kind; clique must be an h-clique of g.
std::uint64_t pattern_func(const Graph& g, const DegeneracyInfo& info, const PatternSpec& spec,
                           std::span<const Vertex> clique,
                           std::vector<VertexList>* out = nullptr);

} // namespace peanuts
