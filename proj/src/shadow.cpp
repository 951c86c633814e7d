#include "peanuts/shadow.hpp"

#include <algorithm>
#include <cassert>
#include <ostream>
#include <stdexcept>

#include "peanuts/binomial.hpp"
#include "peanuts/degeneracy.hpp"

namespace peanuts {

double turan_threshold(int level) {
  if (level < 3) throw std::invalid_argument("turan_threshold: level must be >= 3");
  return 1.0 - 1.0 / (level - 1);
}

namespace {

struct WorkItem {
  VertexList prefix;
  VertexList body;
  int level;
};

// Edge count of G restricted to body, via sorted-list intersections.
std::uint64_t induced_edge_count(const Graph& g, const VertexList& body) {
  std::uint64_t twice = 0;
  for (Vertex v : body) twice += count_intersection(g.neighbors(v), body);
  return twice / 2;
}

void emit_leaf(PrefixedShadow& shadow, WorkItem&& item) {
  double weight = binom(item.body.size(), static_cast<std::uint64_t>(item.level));
  if (weight <= 0.0) return; // level > |body|: contributes nothing
  std::sort(item.prefix.begin(), item.prefix.end());
  shadow.total_weight += weight;
  shadow.leaves.push_back({std::move(item.prefix), std::move(item.body), item.level, weight});
}

} // namespace

PrefixedShadow build_prefixed_shadow(const Graph& g, VertexList prefix, VertexList body,
                                     int level) {
  PrefixedShadow shadow;
  shadow.target = static_cast<int>(prefix.size()) + level;
#ifndef NDEBUG
  const std::size_t root_prefix_size = prefix.size();
#endif

  std::vector<WorkItem> stack;
  stack.push_back({std::move(prefix), std::move(body), level});
  while (!stack.empty()) {
    WorkItem item = std::move(stack.back());
    stack.pop_back();

    bool leaf = item.level <= 2 || item.body.size() <= 1;
    if (!leaf) {
      const std::uint64_t n = item.body.size();
      const double pairs = 0.5 * static_cast<double>(n) * static_cast<double>(n - 1);
      const double density = static_cast<double>(induced_edge_count(g, item.body)) / pairs;
      leaf = density > turan_threshold(item.level);
    }
    if (leaf) {
      emit_leaf(shadow, std::move(item));
      continue;
    }

    // expansion depth mirrors the recursion-depth bound of at most target-1
    assert(item.level >= 3);
    assert(item.prefix.size() - root_prefix_size <= static_cast<std::size_t>(shadow.target) - 1);

    InducedSubgraph sub = induced_subgraph(g, item.body);
    DegeneracyInfo info = degeneracy_order(sub.graph);
    const Vertex local_n = sub.graph.num_vertices();
    for (Vertex s = 0; s < local_n; ++s) {
      VertexList child_body;
      child_body.reserve(info.out_degree[s]);
      const Vertex pos = info.position[s];
      for (Vertex u : sub.graph.neighbors(s))
        if (info.position[u] > pos) child_body.push_back(sub.to_global[u]);
      VertexList child_prefix;
      child_prefix.reserve(item.prefix.size() + 1);
      child_prefix = item.prefix;
      child_prefix.push_back(sub.to_global[s]);
      stack.push_back({std::move(child_prefix), std::move(child_body), item.level - 1});
    }
  }

  shadow.cumulative.resize(shadow.leaves.size());
  double running = 0.0;
  for (std::size_t i = 0; i < shadow.leaves.size(); ++i) {
    running += shadow.leaves[i].weight;
    shadow.cumulative[i] = running;
  }
  shadow.total_weight = running;
  return shadow;
}

PrefixedShadow build_prefixed_shadow(const Graph& g, int target) {
  if (target < 0) throw std::invalid_argument("build_prefixed_shadow: negative target");
  VertexList all(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) all[v] = v;
  return build_prefixed_shadow(g, {}, std::move(all), target);
}

const ShadowLeaf& sample_leaf(const PrefixedShadow& shadow, SplitMix64& rng) {
  if (shadow.total_weight <= 0.0)
    throw std::invalid_argument("sample_leaf: shadow has zero total weight");
  const double point = rng.next_double() * shadow.total_weight;
  auto it = std::upper_bound(shadow.cumulative.begin(), shadow.cumulative.end(), point);
  std::size_t idx = static_cast<std::size_t>(it - shadow.cumulative.begin());
  if (idx == shadow.leaves.size()) --idx; // point rounded onto the upper edge
  return shadow.leaves[idx];
}

void sample_subset(const ShadowLeaf& leaf, SplitMix64& rng, VertexList& out) {
  const std::size_t size = leaf.body.size();
  const std::size_t take = static_cast<std::size_t>(leaf.level);
  assert(take <= size);
  // partial Fisher-Yates over a scratch copy: uniform over subsets for any
  // take/size ratio, no rejection
  static thread_local VertexList scratch;
  scratch.assign(leaf.body.begin(), leaf.body.end());
  out.clear();
  for (std::size_t i = 0; i < take; ++i) {
    std::size_t j = i + static_cast<std::size_t>(rng.next_below(size - i));
    std::swap(scratch[i], scratch[j]);
    out.push_back(scratch[i]);
  }
  std::sort(out.begin(), out.end());
}

VertexList sample_clique_candidate(const PrefixedShadow& shadow, SplitMix64& rng) {
  const ShadowLeaf& leaf = sample_leaf(shadow, rng);
  VertexList subset;
  sample_subset(leaf, rng, subset);
  VertexList candidate;
  candidate.reserve(leaf.prefix.size() + subset.size());
  std::merge(leaf.prefix.begin(), leaf.prefix.end(), subset.begin(), subset.end(),
             std::back_inserter(candidate));
  return candidate;
}

void dump_shadow(const PrefixedShadow& shadow, std::ostream& os) {
  for (const ShadowLeaf& leaf : shadow.leaves) {
    os << "prefix=[";
    for (std::size_t i = 0; i < leaf.prefix.size(); ++i) {
      if (i) os << ",";
      os << leaf.prefix[i];
    }
    os << "] |S|=" << leaf.body.size() << " l=" << leaf.level << " weight=" << leaf.weight
       << "\n";
  }
}

} // namespace peanuts
