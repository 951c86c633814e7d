#include "peanuts/exact.hpp"

#include <chrono>
#include <stdexcept>

#include "peanuts/binomial.hpp"
#include "peanuts/patterns.hpp"

namespace peanuts {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

} // namespace

ExactCounts exact_counts(const Graph& g, int k) {
  if (k < 3) throw std::invalid_argument("exact_counts: k must be >= 3");
  const auto start = Clock::now();
  ExactCounts counts;
  counts.k = k;

  const DegeneracyInfo info = degeneracy_order(g);
  counts.kclique = enumerate_cliques(g, k);
  enumerate_cliques(g, k - 1, [&](std::span<const Vertex> clique) {
    counts.k1 += func_k1(g, clique);
    if (k >= 4) counts.k2_type1 += func_k2_type1(g, clique);
  });
  if (k >= 4) {
    enumerate_cliques(g, k - 2, [&](std::span<const Vertex> clique) {
      counts.k2_type2 += func_k2_type2(g, info, clique);
    });
  }
  counts.elapsed_seconds = seconds_since(start);
  return counts;
}

ExactCounts naive_subset_counts(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("naive_subset_counts: k must be >= 1");
  const Vertex n = g.num_vertices();
  if (binom(n, static_cast<std::uint64_t>(k)) > 1e8)
    throw std::invalid_argument("naive_subset_counts: C(n,k) exceeds the 1e8 guard");

  const auto start = Clock::now();
  ExactCounts counts;
  counts.k = k;
  if (n < static_cast<Vertex>(k)) {
    counts.elapsed_seconds = seconds_since(start);
    return counts;
  }

  // dense adjacency for small n keeps the pair tests cheap
  const bool use_matrix = static_cast<std::uint64_t>(n) * n <= (1u << 24);
  std::vector<std::uint8_t> matrix;
  if (use_matrix) {
    matrix.assign(static_cast<std::size_t>(n) * n, 0);
    for (Vertex v = 0; v < n; ++v)
      for (Vertex u : g.neighbors(v)) matrix[static_cast<std::size_t>(v) * n + u] = 1;
  }
  auto connected = [&](Vertex a, Vertex b) {
    return use_matrix ? matrix[static_cast<std::size_t>(a) * n + b] != 0 : g.adjacent(a, b);
  };

  std::vector<Vertex> subset(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) subset[i] = static_cast<Vertex>(i);
  while (true) {
    int missing = 0;
    Vertex e1a = 0, e1b = 0, e2a = 0, e2b = 0;
    for (int i = 0; i < k && missing <= 2; ++i) {
      for (int j = i + 1; j < k; ++j) {
        if (!connected(subset[i], subset[j])) {
          ++missing;
          if (missing == 1) {
            e1a = subset[i];
            e1b = subset[j];
          } else if (missing == 2) {
            e2a = subset[i];
            e2b = subset[j];
          } else {
            break;
          }
        }
      }
    }
    if (missing == 0) {
      ++counts.kclique;
    } else if (missing == 1) {
      ++counts.k1;
    } else if (missing == 2) {
      const bool share = e1a == e2a || e1a == e2b || e1b == e2a || e1b == e2b;
      if (share)
        ++counts.k2_type1;
      else
        ++counts.k2_type2;
    }

    // advance the combination odometer
    int pos = k - 1;
    while (pos >= 0 && subset[pos] == n - static_cast<Vertex>(k - pos)) --pos;
    if (pos < 0) break;
    ++subset[pos];
    for (int i = pos + 1; i < k; ++i) subset[i] = subset[i - 1] + 1;
  }
  counts.elapsed_seconds = seconds_since(start);
  return counts;
}

} // namespace peanuts
