#pragma once

#include "peanuts/patterns.hpp"
#include "peanuts/shadow.hpp"

namespace peanuts {

enum class Mode { InverseTS, Peanuts };

const char* mode_name(Mode mode);

// Level-1 sampling weights: per_vertex[v] = C(out_degree(v), h-1), total is
// their sum, cumulative holds running sums for vertex selection.
struct PhiTable {
  std::vector<double> per_vertex;
  std::vector<double> cumulative;
  double total = 0.0;
};

PhiTable phi_table(const Graph& g, const DegeneracyInfo& info, int h);

struct Estimate {
  double value = 0.0;              // estimated pattern count
  std::uint64_t samples = 0;       // sample budget s
  std::uint64_t nonzero_samples = 0; // draws with X_i > 0
  double normalizer = 0.0;         // w(S) for peanuts, Phi for inverse-ts
  std::uint64_t seed = 0;
  double elapsed_seconds = 0.0;
  bool low_confidence = false;     // nonzero_samples < 5000

  // Shadow instrumentation: total leaves built over the run vs the largest
  // number resident at once (inverse-ts keeps one per-vertex shadow live).
  std::uint64_t shadow_leaves_total = 0;
  std::uint64_t shadow_leaves_peak = 0;
};

// Full-shadow estimator: builds the h-clique prefixed shadow once, draws s
// candidates, averages f over clique draws and scales by the shadow weight.
// threads > 1 splits s into per-thread batches on independent substreams;
// output is a fixed function of (seed, threads).
Estimate peanuts(const Graph& g, const PatternSpec& spec, std::uint64_t s, std::uint64_t seed,
                 int threads = 1);

// Online variant: samples vertices proportional to Phi_v up front, then per
// sampled vertex builds the (h-1)-clique shadow of its out-neighborhood,
// draws that vertex's share of candidates, and discards the shadow. X_i is
// reweighted by phi_v / Phi_v.
Estimate inverse_ts(const Graph& g, const PatternSpec& spec, std::uint64_t s, std::uint64_t seed,
                    int threads = 1);

// ceil(3 * normalizer * B * ln(2/delta) / (eps^2 * f_lower)): the sample
// budget that makes the Chernoff bound give relative error eps with
// probability 1 - delta when the true total is at least f_lower.
// Rejects nonpositive arguments and eps >= 1.
std::uint64_t required_samples(double normalizer, double bound, double eps, double delta,
                               double f_lower);

// Samples h-cliques and emits every near-clique instance they are charged
// with, up to max_instances. Instances from one clique are correlated; under
// Mode::Peanuts each instance in g has equal marginal inclusion probability.
// Rejects PatternKind::KClique.
std::vector<VertexList> list_near_cliques(const Graph& g, const PatternSpec& spec,
                                          std::uint64_t s, std::uint64_t seed,
                                          Mode mode = Mode::InverseTS,
                                          std::uint64_t max_instances = UINT64_MAX);

} // namespace peanuts
