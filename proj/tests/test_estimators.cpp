#include <doctest.h>

#include <cmath>

#include "peanuts/binomial.hpp"
#include "peanuts/estimators.hpp"
#include "peanuts/exact.hpp"
#include "support.hpp"

using namespace peanuts;
using namespace testsupport;

namespace {

PatternSpec spec_for(const Graph& g, PatternKind kind, int k) {
  DegeneracyInfo info = degeneracy_order(g);
  return make_pattern(kind, k, g, info);
}

} // namespace

TEST_CASE("phi table") {
  SUBCASE("triangle: the orientation forces Phi = 1") {
    Graph g = complete(3);
    PhiTable t = phi_table(g, degeneracy_order(g), 3);
    CHECK(t.total == 1.0);
  }
  SUBCASE("K5: out-degrees 4..0 give Phi = 10") {
    Graph g = complete(5);
    PhiTable t = phi_table(g, degeneracy_order(g), 3);
    CHECK(t.total == 10.0);
  }
  SUBCASE("C6 from its out-degrees") {
    Graph g = cycle(6);
    DegeneracyInfo info = degeneracy_order(g);
    double expected = 0.0;
    for (Vertex v = 0; v < 6; ++v) expected += binom(info.out_degree[v], 2);
    PhiTable t = phi_table(g, info, 3);
    CHECK(t.total == expected);
  }
  SUBCASE("normalizer identity") {
    Graph g = gnp(40, 0.3, 6);
    DegeneracyInfo info = degeneracy_order(g);
    for (int h : {3, 4, 5}) {
      double expected = 0.0;
      for (Vertex v = 0; v < g.num_vertices(); ++v)
        expected += binom(info.out_degree[v], static_cast<std::uint64_t>(h - 1));
      CHECK(phi_table(g, info, h).total == expected);
    }
  }
}

TEST_CASE("required_samples") {
  CHECK(required_samples(1000, 1, 0.1, 0.05, 100) == 11067);
  // F = normalizer * B cancels everything but the Chernoff constant
  const std::uint64_t base = required_samples(250, 8, 0.2, 0.01, 250 * 8);
  CHECK(base == static_cast<std::uint64_t>(std::ceil(3.0 * std::log(200.0) / 0.04)));
  // doubling B doubles the requirement (up to the ceiling)
  const std::uint64_t once = required_samples(100, 2, 0.1, 0.05, 50);
  const std::uint64_t twice = required_samples(100, 4, 0.1, 0.05, 50);
  CHECK(twice >= 2 * once - 1);
  CHECK(twice <= 2 * once);
  CHECK_THROWS_AS(required_samples(0, 1, 0.1, 0.05, 1), std::invalid_argument);
  CHECK_THROWS_AS(required_samples(1, 1, 1.0, 0.05, 1), std::invalid_argument);
  CHECK_THROWS_AS(required_samples(1, 1, 0.1, 0.05, -1), std::invalid_argument);
}

TEST_CASE("triangle graph is a deterministic fixed point") {
  Graph g = complete(3);
  PatternSpec spec = spec_for(g, PatternKind::KClique, 3);
  for (std::uint64_t seed : {0ULL, 1ULL, 42ULL, 987654321ULL}) {
    CHECK(peanuts::peanuts(g, spec, 100, seed).value == 1.0);
    CHECK(inverse_ts(g, spec, 100, seed).value == 1.0);
  }
}

TEST_CASE("graphs without the embedded clique give exactly zero") {
  Graph g = cycle(6); // triangle-free
  PatternSpec spec = spec_for(g, PatternKind::K1, 4);
  Estimate a = peanuts::peanuts(g, spec, 1000, 3);
  Estimate b = inverse_ts(g, spec, 1000, 3);
  CHECK(a.value == 0.0);
  CHECK(b.value == 0.0);
  CHECK(a.low_confidence);
  CHECK(b.low_confidence);
}

TEST_CASE("unbiasedness at small scale: K4 minus an edge, (4,1)") {
  std::vector<std::pair<Vertex, Vertex>> edges{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}};
  Graph g = from_edges(4, edges);
  PatternSpec spec = spec_for(g, PatternKind::K1, 4);
  for (Mode mode : {Mode::Peanuts, Mode::InverseTS}) {
    double mean = 0.0;
    const int runs = 100;
    for (int r = 0; r < runs; ++r) {
      Estimate est = mode == Mode::Peanuts ? peanuts::peanuts(g, spec, 100000, 1000 + r)
                                           : inverse_ts(g, spec, 100000, 1000 + r);
      mean += est.value;
    }
    mean /= runs;
    CHECK(mean == doctest::Approx(1.0).epsilon(0.01));
  }
}

TEST_CASE("estimator means stay near the oracle on G(25,0.4)") {
  Graph g = gnp(25, 0.4, 2025);
  const int k = 5;
  ExactCounts oracle = exact_counts(g, k);
  const std::uint64_t truth[] = {oracle.kclique, oracle.k1, oracle.k2_type1, oracle.k2_type2};
  const PatternKind kinds[] = {PatternKind::KClique, PatternKind::K1, PatternKind::K2Type1,
                               PatternKind::K2Type2};
  for (int which = 0; which < 4; ++which) {
    PatternSpec spec = spec_for(g, kinds[which], k);
    for (Mode mode : {Mode::Peanuts, Mode::InverseTS}) {
      const int runs = 200;
      std::vector<double> values(runs);
      double mean = 0.0;
      for (int r = 0; r < runs; ++r) {
        Estimate est = mode == Mode::Peanuts ? peanuts::peanuts(g, spec, 10000, 555 + r)
                                             : inverse_ts(g, spec, 10000, 555 + r);
        values[r] = est.value;
        mean += est.value;
      }
      mean /= runs;
      double var = 0.0;
      for (double v : values) var += (v - mean) * (v - mean);
      var /= (runs - 1);
      const double stderr_mean = std::sqrt(var / runs);
      CHECK(std::abs(mean - static_cast<double>(truth[which])) <= 4.0 * stderr_mean + 1e-9);
    }
  }
}

TEST_CASE("inverse-ts means track the oracle for k = 4 and 6 as well") {
  Graph g = gnp(25, 0.4, 2026);
  for (int k : {4, 6}) {
    ExactCounts oracle = exact_counts(g, k);
    const std::uint64_t truth[] = {oracle.kclique, oracle.k1, oracle.k2_type1, oracle.k2_type2};
    const PatternKind kinds[] = {PatternKind::KClique, PatternKind::K1, PatternKind::K2Type1,
                                 PatternKind::K2Type2};
    for (int which = 0; which < 4; ++which) {
      PatternSpec spec = spec_for(g, kinds[which], k);
      const int runs = 100;
      std::vector<double> values(runs);
      double mean = 0.0;
      for (int r = 0; r < runs; ++r) {
        values[r] = inverse_ts(g, spec, 5000, 90000 + r).value;
        mean += values[r];
      }
      mean /= runs;
      double var = 0.0;
      for (double v : values) var += (v - mean) * (v - mean);
      var /= (runs - 1);
      const double band = 4.0 * std::sqrt(var / runs) + 1e-9;
      CHECK(std::abs(mean - static_cast<double>(truth[which])) <= band);
    }
  }
}

TEST_CASE("identical configuration reproduces the estimate bit for bit") {
  Graph g = gnp(30, 0.45, 31);
  PatternSpec spec = spec_for(g, PatternKind::K1, 5);
  Estimate a = inverse_ts(g, spec, 20000, 77);
  Estimate b = inverse_ts(g, spec, 20000, 77);
  CHECK(a.value == b.value);
  CHECK(a.nonzero_samples == b.nonzero_samples);
  Estimate c = peanuts::peanuts(g, spec, 20000, 77);
  Estimate d = peanuts::peanuts(g, spec, 20000, 77);
  CHECK(c.value == d.value);

  // batched mode is deterministic for a fixed (seed, batch count)
  Estimate e = inverse_ts(g, spec, 20000, 77, 2);
  Estimate f = inverse_ts(g, spec, 20000, 77, 2);
  CHECK(e.value == f.value);
  CHECK(e.samples == 20000);
}

TEST_CASE("batched estimates stay near the oracle") {
  Graph g = gnp(25, 0.4, 123);
  PatternSpec spec = spec_for(g, PatternKind::K1, 4);
  ExactCounts oracle = exact_counts(g, 4);
  Estimate est = inverse_ts(g, spec, 200000, 5, 2);
  CHECK(est.value == doctest::Approx(static_cast<double>(oracle.k1)).epsilon(0.15));
}

TEST_CASE("estimate bookkeeping fields") {
  Graph g = gnp(25, 0.4, 55);
  DegeneracyInfo info = degeneracy_order(g);
  PatternSpec spec = make_pattern(PatternKind::KClique, 4, g, info);
  Estimate est = inverse_ts(g, spec, 5000, 11);
  CHECK(est.samples == 5000);
  CHECK(est.seed == 11);
  CHECK(est.normalizer == phi_table(g, info, 4).total);
  CHECK(est.nonzero_samples <= est.samples);
  CHECK(est.low_confidence == (est.nonzero_samples < 5000));
  CHECK(est.shadow_leaves_total >= est.shadow_leaves_peak);
  CHECK(est.elapsed_seconds >= 0.0);
  CHECK_THROWS_AS(inverse_ts(g, spec, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(peanuts::peanuts(g, spec, 0, 1), std::invalid_argument);
}

TEST_CASE("listing near-cliques") {
  SUBCASE("the unique (4,1)-clique of K4 minus an edge appears") {
    std::vector<std::pair<Vertex, Vertex>> edges{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}};
    Graph g = from_edges(4, edges);
    PatternSpec spec = spec_for(g, PatternKind::K1, 4);
    for (Mode mode : {Mode::InverseTS, Mode::Peanuts}) {
      auto instances = list_near_cliques(g, spec, 2000, 9, mode);
      REQUIRE_FALSE(instances.empty());
      for (const VertexList& inst : instances) CHECK(inst == VertexList{0, 1, 2, 3});
    }
  }
  SUBCASE("complete graphs list nothing") {
    Graph g = complete(5);
    PatternSpec spec = spec_for(g, PatternKind::K1, 5);
    CHECK(list_near_cliques(g, spec, 2000, 1).empty());
  }
  SUBCASE("a planted near-clique in a sparse background is recovered") {
    // ring of 30 vertices plus a K6 minus one edge planted on 30..35
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex v = 0; v < 30; ++v) edges.emplace_back(v, (v + 1) % 30);
    for (Vertex u = 30; u < 36; ++u)
      for (Vertex v = u + 1; v < 36; ++v)
        if (!(u == 34 && v == 35)) edges.emplace_back(u, v);
    edges.emplace_back(0, 30); // connect the communities
    Graph g = from_edges(36, edges);
    PatternSpec spec = spec_for(g, PatternKind::K1, 6);
    auto instances = list_near_cliques(g, spec, 5000, 4);
    REQUIRE_FALSE(instances.empty());
    for (const VertexList& inst : instances)
      CHECK(inst == VertexList{30, 31, 32, 33, 34, 35});
  }
  SUBCASE("the cap truncates output") {
    std::vector<std::pair<Vertex, Vertex>> edges{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}};
    Graph g = from_edges(4, edges);
    PatternSpec spec = spec_for(g, PatternKind::K1, 4);
    CHECK(list_near_cliques(g, spec, 5000, 2, Mode::InverseTS, 3).size() == 3);
  }
  SUBCASE("rejects the clique kind") {
    Graph g = complete(5);
    PatternSpec spec = spec_for(g, PatternKind::KClique, 4);
    CHECK_THROWS_AS(list_near_cliques(g, spec, 100, 1), std::invalid_argument);
  }
  SUBCASE("uniform marginal inclusion under peanuts mode") {
    // two disjoint copies of K4-minus-an-edge: both instances should appear
    // in a near 50/50 split over many single-sample lists
    std::vector<std::pair<Vertex, Vertex>> edges;
    auto add_copy = [&](Vertex base) {
      for (Vertex u = 0; u < 4; ++u)
        for (Vertex v = u + 1; v < 4; ++v)
          if (!(u == 2 && v == 3)) edges.emplace_back(base + u, base + v);
    };
    add_copy(0);
    add_copy(4);
    Graph g = from_edges(8, edges);
    PatternSpec spec = spec_for(g, PatternKind::K1, 4);
    int first = 0, total = 0;
    for (std::uint64_t seed = 0; seed < 4000; ++seed) {
      auto instances = list_near_cliques(g, spec, 1, seed, Mode::Peanuts);
      for (const VertexList& inst : instances) {
        ++total;
        if (inst[0] == 0) ++first;
      }
    }
    REQUIRE(total > 500);
    const double share = static_cast<double>(first) / total;
    CHECK(share == doctest::Approx(0.5).epsilon(0.12));
  }
}
