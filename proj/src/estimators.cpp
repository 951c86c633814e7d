#include "peanuts/estimators.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <thread>

#include "peanuts/binomial.hpp"

namespace peanuts {

const char* mode_name(Mode mode) {
  return mode == Mode::InverseTS ? "inverse-ts" : "peanuts";
}

PhiTable phi_table(const Graph& g, const DegeneracyInfo& info, int h) {
  if (h < 1) throw std::invalid_argument("phi_table: h must be >= 1");
  const Vertex n = g.num_vertices();
  PhiTable table;
  table.per_vertex.resize(n);
  table.cumulative.resize(n);
  double running = 0.0;
  for (Vertex v = 0; v < n; ++v) {
    const double w = binom(info.out_degree[v], static_cast<std::uint64_t>(h - 1));
    table.per_vertex[v] = w;
    running += w;
    table.cumulative[v] = running;
  }
  table.total = running;
  return table;
}

std::uint64_t required_samples(double normalizer, double bound, double eps, double delta,
                               double f_lower) {
  if (normalizer <= 0.0 || bound <= 0.0 || eps <= 0.0 || delta <= 0.0 || f_lower <= 0.0)
    throw std::invalid_argument("required_samples: arguments must be positive");
  if (eps >= 1.0) throw std::invalid_argument("required_samples: eps must be < 1");
  const double raw = 3.0 * normalizer * bound * std::log(2.0 / delta) / (eps * eps * f_lower);
  return static_cast<std::uint64_t>(std::ceil(raw));
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct BatchAccum {
  double sum = 0.0;
  std::uint64_t nonzero = 0;
  std::uint64_t leaves_total = 0;
  std::uint64_t leaves_peak = 0;
};

std::vector<std::uint64_t> split_budget(std::uint64_t s, int threads) {
  const std::uint64_t batches = threads < 1 ? 1 : static_cast<std::uint64_t>(threads);
  std::vector<std::uint64_t> sizes(batches, s / batches);
  for (std::uint64_t i = 0; i < s % batches; ++i) ++sizes[i];
  return sizes;
}

void run_batches(const std::vector<std::uint64_t>& sizes,
                 const std::function<void(std::size_t)>& work) {
  if (sizes.size() == 1) {
    work(0);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(sizes.size());
  for (std::size_t b = 0; b < sizes.size(); ++b) pool.emplace_back(work, b);
  for (auto& t : pool) t.join();
}

// Index into a running-sum table, skipping zero-width intervals; point must
// come from next_double() * back().
std::size_t pick_index(const std::vector<double>& cumulative, double point) {
  auto it = std::upper_bound(cumulative.begin(), cumulative.end(), point);
  std::size_t idx = static_cast<std::size_t>(it - cumulative.begin());
  if (idx == cumulative.size()) {
    // point rounded onto the upper edge: step back to the last real interval
    --idx;
    while (idx > 0 && cumulative[idx] == cumulative[idx - 1]) --idx;
  }
  return idx;
}

// Draws one candidate from the shadow; if the drawn subset induces a clique
// (prefix adjacency is structural) calls sink with the assembled candidate.
// Returns false when sink asked to stop.
template <class Sink>
bool draw_candidate(const Graph& g, const PrefixedShadow& shadow, SplitMix64& rng,
                    VertexList& subset, VertexList& candidate, Sink&& sink) {
  const ShadowLeaf& leaf = sample_leaf(shadow, rng);
  sample_subset(leaf, rng, subset);
  if (!is_clique(g, subset)) return true;
  candidate.clear();
  std::merge(leaf.prefix.begin(), leaf.prefix.end(), subset.begin(), subset.end(),
             std::back_inserter(candidate));
  assert(is_clique(g, candidate));
  return sink(std::span<const Vertex>(candidate));
}

// One batch of the online schedule: pre-draws this batch's vertices from the
// Phi distribution, then per distinct vertex builds the (h-1)-shadow of its
// out-neighborhood, draws the assigned candidates, and discards the shadow.
// sink(candidate, phi_ratio) is called per clique draw; returning false stops.
template <class Sink>
void inverse_batch(const Graph& g, const DegeneracyInfo& info, const PhiTable& phi, int h,
                   std::uint64_t budget, SplitMix64& rng, BatchAccum& acc, Sink&& sink) {
  std::vector<Vertex> drawn;
  drawn.reserve(budget);
  for (std::uint64_t i = 0; i < budget; ++i) {
    const double point = rng.next_double() * phi.total;
    drawn.push_back(static_cast<Vertex>(pick_index(phi.cumulative, point)));
  }
  std::sort(drawn.begin(), drawn.end());

  VertexList subset, candidate;
  std::size_t i = 0;
  while (i < drawn.size()) {
    const Vertex v = drawn[i];
    std::size_t j = i;
    while (j < drawn.size() && drawn[j] == v) ++j;
    const std::uint64_t draws = j - i;
    i = j;

    PrefixedShadow shadow =
        build_prefixed_shadow(g, {v}, out_neighbors(g, info, v), h - 1);
    acc.leaves_total += shadow.leaves.size();
    acc.leaves_peak = std::max(acc.leaves_peak, static_cast<std::uint64_t>(shadow.leaves.size()));
    if (shadow.total_weight <= 0.0) continue; // these draws all contribute 0
    const double ratio = shadow.total_weight / phi.per_vertex[v];
    for (std::uint64_t d = 0; d < draws; ++d) {
      bool keep = draw_candidate(g, shadow, rng, subset, candidate,
                                 [&](std::span<const Vertex> clique) { return sink(clique, ratio); });
      if (!keep) return;
    }
  }
}

} // namespace

Estimate peanuts(const Graph& g, const PatternSpec& spec, std::uint64_t s, std::uint64_t seed,
                 int threads) {
  if (s < 1) throw std::invalid_argument("peanuts: sample budget must be >= 1");
  const auto start = Clock::now();
  Estimate est;
  est.samples = s;
  est.seed = seed;

  const DegeneracyInfo info = degeneracy_order(g);
  const PrefixedShadow shadow = build_prefixed_shadow(g, spec.h);
  est.normalizer = shadow.total_weight;
  est.shadow_leaves_total = shadow.leaves.size();
  est.shadow_leaves_peak = shadow.leaves.size();
  if (shadow.total_weight <= 0.0) {
    est.low_confidence = true;
    est.elapsed_seconds = seconds_since(start);
    return est;
  }

  const auto sizes = split_budget(s, threads);
  std::vector<BatchAccum> results(sizes.size());
  run_batches(sizes, [&](std::size_t b) {
    SplitMix64 rng = SplitMix64::substream(seed, b);
    VertexList subset, candidate;
    BatchAccum acc;
    for (std::uint64_t i = 0; i < sizes[b]; ++i) {
      draw_candidate(g, shadow, rng, subset, candidate, [&](std::span<const Vertex> clique) {
        const std::uint64_t f = pattern_func(g, info, spec, clique);
        if (f > 0) {
          ++acc.nonzero;
          acc.sum += static_cast<double>(f);
        }
        return true;
      });
    }
    results[b] = acc;
  });

  double total = 0.0;
  for (const BatchAccum& acc : results) {
    total += acc.sum;
    est.nonzero_samples += acc.nonzero;
  }
  est.value = total / static_cast<double>(s) * shadow.total_weight;
  est.low_confidence = est.nonzero_samples < 5000;
  est.elapsed_seconds = seconds_since(start);
  return est;
}

Estimate inverse_ts(const Graph& g, const PatternSpec& spec, std::uint64_t s, std::uint64_t seed,
                    int threads) {
  if (s < 1) throw std::invalid_argument("inverse_ts: sample budget must be >= 1");
  const auto start = Clock::now();
  Estimate est;
  est.samples = s;
  est.seed = seed;

  const DegeneracyInfo info = degeneracy_order(g);
  const PhiTable phi = phi_table(g, info, spec.h);
  est.normalizer = phi.total;
  if (phi.total <= 0.0) {
    est.low_confidence = true;
    est.elapsed_seconds = seconds_since(start);
    return est;
  }

  const auto sizes = split_budget(s, threads);
  std::vector<BatchAccum> results(sizes.size());
  run_batches(sizes, [&](std::size_t b) {
    SplitMix64 rng = SplitMix64::substream(seed, b);
    BatchAccum acc;
    inverse_batch(g, info, phi, spec.h, sizes[b], rng, acc,
                  [&](std::span<const Vertex> clique, double ratio) {
                    const std::uint64_t f = pattern_func(g, info, spec, clique);
                    if (f > 0) {
                      ++acc.nonzero;
                      acc.sum += ratio * static_cast<double>(f);
                    }
                    return true;
                  });
    results[b] = acc;
  });

  double total = 0.0;
  for (const BatchAccum& acc : results) {
    total += acc.sum;
    est.nonzero_samples += acc.nonzero;
    est.shadow_leaves_total += acc.leaves_total;
    est.shadow_leaves_peak = std::max(est.shadow_leaves_peak, acc.leaves_peak);
  }
  est.value = total / static_cast<double>(s) * phi.total;
  est.low_confidence = est.nonzero_samples < 5000;
  est.elapsed_seconds = seconds_since(start);
  return est;
}

std::vector<VertexList> list_near_cliques(const Graph& g, const PatternSpec& spec,
                                          std::uint64_t s, std::uint64_t seed, Mode mode,
                                          std::uint64_t max_instances) {
  if (spec.kind == PatternKind::KClique)
    throw std::invalid_argument("list_near_cliques: pattern must be a near-clique kind");
  if (s < 1) throw std::invalid_argument("list_near_cliques: sample budget must be >= 1");

  const DegeneracyInfo info = degeneracy_order(g);
  std::vector<VertexList> instances;
  auto emit = [&](std::span<const Vertex> clique) {
    pattern_func(g, info, spec, clique, &instances);
    if (instances.size() > max_instances) instances.resize(max_instances);
    return instances.size() < max_instances;
  };

  SplitMix64 rng = SplitMix64::substream(seed, 0);
  if (mode == Mode::Peanuts) {
    const PrefixedShadow shadow = build_prefixed_shadow(g, spec.h);
    if (shadow.total_weight <= 0.0) return instances;
    VertexList subset, candidate;
    for (std::uint64_t i = 0; i < s; ++i) {
      if (!draw_candidate(g, shadow, rng, subset, candidate, emit)) break;
    }
  } else {
    const PhiTable phi = phi_table(g, info, spec.h);
    if (phi.total <= 0.0) return instances;
    BatchAccum acc;
    inverse_batch(g, info, phi, spec.h, s, rng, acc,
                  [&](std::span<const Vertex> clique, double) { return emit(clique); });
  }
  return instances;
}

} // namespace peanuts
