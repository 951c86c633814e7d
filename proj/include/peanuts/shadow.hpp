#pragma once

#include <iosfwd>

#include "peanuts/graph.hpp"
#include "peanuts/random.hpp"

namespace peanuts {

// One shadow element (P, S, l): prefix P is a partial clique fully connected
// to the body S (global ids, both sorted); any l-clique of G|_S extends P to a
// |P|+l clique of the host graph. weight = C(|S|, l).
struct ShadowLeaf {
  VertexList prefix;
  VertexList body;
  int level = 0;
  double weight = 0.0;
};

struct PrefixedShadow {
  std::vector<ShadowLeaf> leaves;
  std::vector<double> cumulative; // running weight sums, for leaf selection
  double total_weight = 0.0;
  int target = 0; // clique size the shadow was built for
};

// Turan density threshold 1 - 1/(level-1); rejects level < 3 (levels <= 2 are
// admitted as leaves unconditionally).
double turan_threshold(int level);

// Builds the target-clique prefixed shadow of g, starting from (empty, V, target).
PrefixedShadow build_prefixed_shadow(const Graph& g, int target);

// General entry: starts from (prefix, body, level); prefix vertices must be
// adjacent to each other and to every body vertex. Used per-vertex with
// prefix {v}, body N_v^+.
PrefixedShadow build_prefixed_shadow(const Graph& g, VertexList prefix, VertexList body,
                                     int level);

// Leaf selection proportional to weight (prefix sums + binary search).
const ShadowLeaf& sample_leaf(const PrefixedShadow& shadow, SplitMix64& rng);

// Uniform level-subset of the leaf body, sorted, written to out.
void sample_subset(const ShadowLeaf& leaf, SplitMix64& rng, VertexList& out);

// Draws a candidate: leaf by weight, uniform subset from its body, returns
// prefix + subset (sorted, size = target). Every target-clique of the host
// graph has probability exactly 1/total_weight. The candidate is not
// necessarily a clique; the caller must check. Rejects total_weight == 0.
VertexList sample_clique_candidate(const PrefixedShadow& shadow, SplitMix64& rng);

// One line per leaf: "prefix=[...] |S|=n l=k weight=w".
void dump_shadow(const PrefixedShadow& shadow, std::ostream& os);

} // namespace peanuts
