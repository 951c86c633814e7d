#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "peanuts/graph.hpp"
#include "peanuts/random.hpp"

namespace testsupport {

using peanuts::Graph;
using peanuts::Vertex;

inline Graph gnp(Vertex n, double p, std::uint64_t seed) {
  peanuts::SplitMix64 rng(seed);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.next_double() < p) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

inline Graph complete(Vertex n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

inline Graph cycle(Vertex n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, std::move(edges));
}

inline Graph path(Vertex n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, std::move(edges));
}

// star with center 0 and `leaves` leaves
inline Graph star(Vertex leaves) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph(leaves + 1, std::move(edges));
}

inline Graph from_edges(Vertex n, std::vector<std::pair<Vertex, Vertex>> edges) {
  return Graph(n, std::move(edges));
}

// preferential-attachment flavored sparse generator for web-scale shaped
// inputs: every new vertex links to `attach` earlier vertices, half uniform,
// half copied from a random earlier vertex's neighborhood
inline Graph attachment_graph(Vertex n, Vertex attach, std::uint64_t seed) {
  peanuts::SplitMix64 rng(seed);
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(static_cast<std::size_t>(n) * attach);
  for (Vertex v = 1; v < n; ++v) {
    const Vertex links = std::min(v, attach);
    for (Vertex i = 0; i < links; ++i) {
      Vertex target = static_cast<Vertex>(rng.next_below(v));
      if (i % 2 == 1 && !edges.empty()) {
        // copy an endpoint of a random existing edge (degree-biased)
        const auto& e = edges[rng.next_below(edges.size())];
        target = rng.next() & 1 ? e.first : e.second;
        if (target >= v) target = static_cast<Vertex>(rng.next_below(v));
      }
      edges.emplace_back(v, target);
    }
  }
  return Graph(n, std::move(edges));
}

} // namespace testsupport
