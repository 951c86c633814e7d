#include "peanuts/graph.hpp"

#include <algorithm>
#include <cassert>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace peanuts {

Graph::Graph(Vertex n, std::vector<std::pair<Vertex, Vertex>> edges) {
  for (auto& [u, v] : edges) {
    if (u > v) std::swap(u, v);
  }
  std::erase_if(edges, [](const auto& e) { return e.first == e.second; });
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  n_ = n;
  m_ = edges.size();
  offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& [u, v] : edges) {
    assert(v < n);
    ++offsets_[u + 1];
    ++offsets_[v + 1];
  }
  for (Vertex v = 0; v < n; ++v) offsets_[v + 1] += offsets_[v];
  targets_.resize(2 * m_);
  std::vector<std::uint64_t> cursor(offsets_.begin(), offsets_.end() - 1);
  // edges are sorted by (u, v), so forward lists come out sorted; the reverse
  // direction needs a per-list sort afterwards
  for (const auto& [u, v] : edges) {
    targets_[cursor[u]++] = v;
    targets_[cursor[v]++] = u;
  }
  for (Vertex v = 0; v < n; ++v) {
    std::sort(targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]),
              targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]));
    max_degree_ = std::max(max_degree_, degree(v));
  }
}

Graph Graph::from_adjacency(std::vector<VertexList> adjacency) {
  Graph g;
  g.n_ = static_cast<Vertex>(adjacency.size());
  g.offsets_.assign(adjacency.size() + 1, 0);
  for (Vertex v = 0; v < g.n_; ++v) {
    assert(std::is_sorted(adjacency[v].begin(), adjacency[v].end()));
    assert(std::adjacent_find(adjacency[v].begin(), adjacency[v].end()) == adjacency[v].end());
    g.offsets_[v + 1] = g.offsets_[v] + adjacency[v].size();
    g.max_degree_ = std::max<std::uint32_t>(g.max_degree_, adjacency[v].size());
  }
  g.m_ = g.offsets_[g.n_] / 2;
  g.targets_.reserve(g.offsets_[g.n_]);
  for (auto& list : adjacency)
    g.targets_.insert(g.targets_.end(), list.begin(), list.end());
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (u == v) return false;
  if (degree(u) > degree(v)) std::swap(u, v);
  auto list = neighbors(u);
  return std::binary_search(list.begin(), list.end(), v);
}

BuildResult build_graph(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& edges) {
  BuildResult result;
  std::vector<std::pair<Vertex, Vertex>> dense;
  dense.reserve(edges.size());
  auto intern = [&](std::uint64_t label) -> Vertex {
    auto [it, inserted] = result.to_dense.try_emplace(label, static_cast<Vertex>(result.to_original.size()));
    if (inserted) result.to_original.push_back(label);
    return it->second;
  };
  for (const auto& [a, b] : edges) {
    Vertex u = intern(a);
    Vertex v = intern(b);
    if (u != v) dense.emplace_back(u, v);
  }
  result.graph = Graph(static_cast<Vertex>(result.to_original.size()), std::move(dense));
  return result;
}

BuildResult load_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open input file: " + path);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == '#' || line[start] == '%') continue;
    std::istringstream fields(line);
    std::uint64_t a = 0, b = 0;
    if (!(fields >> a >> b)) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": expected two integers");
    }
    std::string rest;
    if (fields >> rest) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": trailing tokens");
    }
    edges.emplace_back(a, b);
  }
  if (in.bad()) throw std::runtime_error("I/O error while reading " + path);
  return build_graph(edges);
}

double edge_density(const Graph& g) {
  const std::uint64_t n = g.num_vertices();
  if (n <= 1) return 1.0;
  const double pairs = 0.5 * static_cast<double>(n) * static_cast<double>(n - 1);
  return static_cast<double>(g.num_edges()) / pairs;
}

bool is_clique(const Graph& g, std::span<const Vertex> s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!g.adjacent(s[i], s[j])) return false;
  return true;
}

Vertex InducedSubgraph::to_local(Vertex global) const {
  auto it = std::lower_bound(to_global.begin(), to_global.end(), global);
  assert(it != to_global.end() && *it == global);
  return static_cast<Vertex>(it - to_global.begin());
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> s) {
  InducedSubgraph result;
  result.to_global.assign(s.begin(), s.end());
  std::sort(result.to_global.begin(), result.to_global.end());
  assert(std::adjacent_find(result.to_global.begin(), result.to_global.end()) ==
         result.to_global.end());
  const VertexList& verts = result.to_global;
  std::vector<VertexList> adjacency(verts.size());
  for (Vertex i = 0; i < verts.size(); ++i) {
    auto nbrs = g.neighbors(verts[i]);
    // merge-intersect the sorted neighbor list with the sorted vertex set
    std::size_t a = 0, b = 0;
    while (a < nbrs.size() && b < verts.size()) {
      if (nbrs[a] < verts[b]) {
        ++a;
      } else if (verts[b] < nbrs[a]) {
        ++b;
      } else {
        adjacency[i].push_back(static_cast<Vertex>(b));
        ++a;
        ++b;
      }
    }
  }
  result.graph = Graph::from_adjacency(std::move(adjacency));
  return result;
}

std::uint64_t count_intersection(std::span<const Vertex> a, std::span<const Vertex> b) {
  if (a.size() > b.size()) std::swap(a, b);
  if (a.empty()) return 0;
  std::uint64_t count = 0;
  if (b.size() > 16 * a.size()) {
    // highly skewed sizes: binary-search the short list into the long one
    for (Vertex x : a)
      if (std::binary_search(b.begin(), b.end(), x)) ++count;
    return count;
  }
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

} // namespace peanuts
