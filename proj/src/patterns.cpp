#include "peanuts/patterns.hpp"

#include <algorithm>
#include <stdexcept>

namespace peanuts {

const char* pattern_name(PatternKind kind) {
  switch (kind) {
    case PatternKind::KClique: return "kclique";
    case PatternKind::K1: return "k1";
    case PatternKind::K2Type1: return "k2t1";
    case PatternKind::K2Type2: return "k2t2";
  }
  return "?";
}

PatternSpec make_pattern(PatternKind kind, int k, const Graph& g, const DegeneracyInfo& info) {
  if (k < 3) throw std::invalid_argument("pattern requires k >= 3");
  if ((kind == PatternKind::K2Type1 || kind == PatternKind::K2Type2) && k < 4)
    throw std::invalid_argument("(k,2) patterns require k >= 4");
  PatternSpec spec;
  spec.kind = kind;
  spec.k = k;
  const double n = static_cast<double>(g.num_vertices());
  const double dmax = static_cast<double>(g.max_degree());
  const double alpha = static_cast<double>(info.degeneracy);
  switch (kind) {
    case PatternKind::KClique:
      spec.h = k;
      spec.bound = 1.0;
      break;
    case PatternKind::K1:
      spec.h = k - 1;
      spec.bound = std::min(2.0 * dmax, n);
      break;
    case PatternKind::K2Type1:
      spec.h = k - 1;
      spec.bound = std::min(3.0 * dmax, n);
      break;
    case PatternKind::K2Type2:
      spec.h = k - 2;
      spec.bound = std::min(n * n, 0.5 * k * k * alpha * dmax);
      break;
  }
  return spec;
}

namespace {

bool contains(std::span<const Vertex> sorted, Vertex v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

void require_clique(const Graph& g, std::span<const Vertex> clique, std::size_t min_size,
                    const char* who) {
  if (clique.size() < min_size || !is_clique(g, clique))
    throw std::invalid_argument(std::string(who) + ": K must be a clique of size >= " +
                                std::to_string(min_size));
}

void collect(std::vector<VertexList>* out, std::span<const Vertex> clique, Vertex extra) {
  if (!out) return;
  VertexList inst(clique.begin(), clique.end());
  inst.insert(std::upper_bound(inst.begin(), inst.end(), extra), extra);
  out->push_back(std::move(inst));
}

void collect2(std::vector<VertexList>* out, std::span<const Vertex> clique, Vertex a, Vertex b) {
  if (!out) return;
  VertexList inst(clique.begin(), clique.end());
  inst.push_back(a);
  inst.push_back(b);
  std::sort(inst.begin(), inst.end());
  out->push_back(std::move(inst));
}

} // namespace

std::uint64_t func_kclique(const Graph&, std::span<const Vertex>) { return 1; }

std::uint64_t func_k1(const Graph& g, std::span<const Vertex> clique,
                      std::vector<VertexList>* out) {
  require_clique(g, clique, 2, "func_k1");
  // any completing vertex is adjacent to at least one of two clique members;
  // scan the two smallest neighborhoods
  Vertex u = clique[0], v = clique[1];
  for (Vertex w : clique) {
    if (g.degree(w) < g.degree(u)) {
      v = u;
      u = w;
    } else if (w != u && g.degree(w) < g.degree(v)) {
      v = w;
    }
  }
  auto nu = g.neighbors(u);
  auto nv = g.neighbors(v);
  std::uint64_t count = 0;
  std::size_t a = 0, b = 0;
  while (a < nu.size() || b < nv.size()) {
    Vertex nbr;
    if (b == nv.size() || (a < nu.size() && nu[a] < nv[b])) {
      nbr = nu[a++];
    } else if (a == nu.size() || nv[b] < nu[a]) {
      nbr = nv[b++];
    } else {
      nbr = nu[a];
      ++a;
      ++b;
    }
    if (contains(clique, nbr)) continue;
    Vertex missing = 0;
    int missing_count = 0;
    for (Vertex member : clique) {
      if (!g.adjacent(nbr, member)) {
        missing = member;
        if (++missing_count > 1) break;
      }
    }
    if (missing_count == 1 && nbr > missing) {
      ++count;
      collect(out, clique, nbr);
    }
  }
  return count;
}

std::uint64_t func_k2_type1(const Graph& g, std::span<const Vertex> clique,
                            std::vector<VertexList>* out) {
  require_clique(g, clique, 3, "func_k2_type1");
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < clique.size(); ++i) {
    for (std::size_t j = i + 1; j < clique.size(); ++j) {
      const Vertex u = clique[i], v = clique[j];
      // candidates must be adjacent to every member but u and v; scan the
      // smallest such neighborhood
      Vertex anchor = 0;
      std::uint32_t anchor_degree = UINT32_MAX;
      for (Vertex w : clique) {
        if (w == u || w == v) continue;
        if (g.degree(w) < anchor_degree) {
          anchor_degree = g.degree(w);
          anchor = w;
        }
      }
      for (Vertex nbr : g.neighbors(anchor)) {
        if (contains(clique, nbr)) continue;
        if (g.adjacent(nbr, u) || g.adjacent(nbr, v)) continue;
        bool all = true;
        for (Vertex member : clique) {
          if (member == u || member == v) continue;
          if (!g.adjacent(nbr, member)) {
            all = false;
            break;
          }
        }
        if (all) {
          ++count;
          collect(out, clique, nbr);
        }
      }
    }
  }
  return count;
}

std::uint64_t func_k2_type2(const Graph& g, const DegeneracyInfo& info,
                            std::span<const Vertex> clique,
                            std::vector<VertexList>* out) {
  require_clique(g, clique, 2, "func_k2_type2");
  std::uint64_t count = 0;
  VertexList xs, vs;
  for (Vertex u : clique) {
    for (Vertex w : clique) {
      if (info.position[w] <= info.position[u]) continue;
      // x: out-neighbor of u beyond w, adjacent to all of K but w
      xs.clear();
      for (Vertex x : g.neighbors(u)) {
        if (info.position[x] <= info.position[w]) continue;
        if (contains(clique, x)) continue;
        if (g.adjacent(x, w)) continue;
        bool all = true;
        for (Vertex member : clique) {
          if (member == w || member == u) continue;
          if (!g.adjacent(x, member)) {
            all = false;
            break;
          }
        }
        if (all) xs.push_back(x);
      }
      if (xs.empty()) continue;
      // v: neighbor of w beyond u in the order, adjacent to all of K but u
      vs.clear();
      for (Vertex v : g.neighbors(w)) {
        if (info.position[v] <= info.position[u]) continue;
        if (contains(clique, v)) continue;
        if (g.adjacent(v, u)) continue;
        bool all = true;
        for (Vertex member : clique) {
          if (member == u || member == w) continue;
          if (!g.adjacent(v, member)) {
            all = false;
            break;
          }
        }
        if (all) vs.push_back(v);
      }
      for (Vertex x : xs) {
        for (Vertex v : vs) {
          if (v == x || !g.adjacent(v, x)) continue;
          ++count;
          collect2(out, clique, v, x);
        }
      }
    }
  }
  return count;
}

std::uint64_t pattern_func(const Graph& g, const DegeneracyInfo& info, const PatternSpec& spec,
                           std::span<const Vertex> clique, std::vector<VertexList>* out) {
  switch (spec.kind) {
    case PatternKind::KClique: return func_kclique(g, clique);
    case PatternKind::K1: return func_k1(g, clique, out);
    case PatternKind::K2Type1: return func_k2_type1(g, clique, out);
    case PatternKind::K2Type2: return func_k2_type2(g, info, clique, out);
  }
  return 0;
}

} // namespace peanuts
