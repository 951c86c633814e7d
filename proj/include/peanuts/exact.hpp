#pragma once

#include <algorithm>

#include "peanuts/degeneracy.hpp"
#include "peanuts/graph.hpp"

namespace peanuts {

struct ExactCounts {
  int k = 0;
  std::uint64_t kclique = 0;
  std::uint64_t k1 = 0;
  std::uint64_t k2_type1 = 0;
  std::uint64_t k2_type2 = 0;
  double elapsed_seconds = 0.0;
};

namespace detail {

// Each clique inside cand is charged to its minimum-position member u, so the
// candidate set shrinks to the later-positioned neighbors of u at every level.
template <class Visitor>
std::uint64_t enumerate_rec(const Graph& g, const DegeneracyInfo& info,
                            std::vector<VertexList>& cand_stack, VertexList& chain,
                            VertexList& scratch, int remaining, int depth, Visitor&& visit) {
  VertexList& cand = cand_stack[depth];
  if (cand.size() < static_cast<std::size_t>(remaining)) return 0;
  if (remaining == 1) {
    for (Vertex u : cand) {
      scratch.assign(chain.begin(), chain.end());
      scratch.push_back(u);
      std::sort(scratch.begin(), scratch.end());
      visit(std::span<const Vertex>(scratch));
    }
    return cand.size();
  }
  std::uint64_t count = 0;
  for (Vertex u : cand) {
    VertexList& next = cand_stack[depth + 1];
    next.clear();
    auto nbrs = g.neighbors(u);
    std::size_t a = 0, b = 0;
    while (a < cand.size() && b < nbrs.size()) {
      if (cand[a] < nbrs[b]) {
        ++a;
      } else if (nbrs[b] < cand[a]) {
        ++b;
      } else {
        if (info.position[cand[a]] > info.position[u]) next.push_back(cand[a]);
        ++a;
        ++b;
      }
    }
    if (next.size() >= static_cast<std::size_t>(remaining - 1)) {
      chain.push_back(u);
      count += enumerate_rec(g, info, cand_stack, chain, scratch, remaining - 1, depth + 1,
                             std::forward<Visitor>(visit));
      chain.pop_back();
    }
  }
  return count;
}

} // namespace detail

// Visits every h-clique exactly once (vertices sorted by id) by recursive
// out-neighborhood intersection over the degeneracy DAG; returns the count.
template <class Visitor>
std::uint64_t enumerate_cliques(const Graph& g, int h, Visitor&& visit) {
  if (h < 1) return 0;
  const Vertex n = g.num_vertices();
  if (h == 1) {
    VertexList single(1);
    for (Vertex v = 0; v < n; ++v) {
      single[0] = v;
      visit(std::span<const Vertex>(single));
    }
    return n;
  }
  DegeneracyInfo info = degeneracy_order(g);
  std::vector<VertexList> cand_stack(static_cast<std::size_t>(h));
  VertexList chain;
  VertexList scratch;
  chain.reserve(static_cast<std::size_t>(h));
  scratch.reserve(static_cast<std::size_t>(h));
  std::uint64_t count = 0;
  for (Vertex v = 0; v < n; ++v) {
    cand_stack[0] = out_neighbors(g, info, v);
    if (cand_stack[0].size() + 1 < static_cast<std::size_t>(h)) continue;
    chain.push_back(v);
    count += detail::enumerate_rec(g, info, cand_stack, chain, scratch, h - 1, 0,
                                   std::forward<Visitor>(visit));
    chain.pop_back();
  }
  return count;
}

inline std::uint64_t enumerate_cliques(const Graph& g, int h) {
  return enumerate_cliques(g, h, [](std::span<const Vertex>) {});
}

// Ground truth by enumeration: k-cliques directly; near-clique counts as the
// sums of the per-clique counting functions over (k-1)- resp. (k-2)-cliques.
// The (k,2) kinds need k >= 4 and are reported 0 below that.
ExactCounts exact_counts(const Graph& g, int k);

// Fully independent oracle: classifies every k-subset by its missing internal
// edges (0 / 1 / 2 sharing a vertex / 2 disjoint). Guarded to C(n,k) <= 1e8.
ExactCounts naive_subset_counts(const Graph& g, int k);

} // namespace peanuts
