#include <gtest/gtest.h>

#include <random>

#include "ldal/bounds.hpp"
#include "ldal/labeling.hpp"
#include "ldal/oracle.hpp"
#include "ldal/tables.hpp"
#include "support.hpp"

using namespace ldal;

namespace {

// Random graph with edge probability p, seeded.
Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) es.push_back({u, v});
  return Graph(n, es);
}

}  // namespace

TEST(Property, HandshakeOnFamilies) {
  std::mt19937_64 rng(20261019);
  auto zoo = ref::family_zoo(1, 14);
  std::uniform_int_distribution<std::size_t> pick(0, zoo.size() - 1);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto& z = zoo[pick(rng)];
    auto f = ref::random_perm(z.graph.order(), rng);
    auto p = weigh(z.graph, Labeling(f));
    Weight lhs = 0, rhs = 0;
    for (Vertex v = 0; v < z.graph.order(); ++v) {
      lhs += p.weights[v];
      rhs += static_cast<Weight>(z.graph.degree(v)) * f[v];
    }
    ASSERT_EQ(lhs, rhs) << z.name;
    ASSERT_EQ(p.weights, ref::weights(z.graph, f)) << z.name;
  }
}

TEST(Property, HandshakeOnRandomGraphs) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    Graph g = random_graph(2 + trial % 15, 0.4, rng);
    auto f = ref::random_perm(g.order(), rng);
    auto w = weigh(g, Labeling(f)).weights;
    Weight lhs = 0, rhs = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
      lhs += w[v];
      rhs += static_cast<Weight>(g.degree(v)) * f[v];
    }
    ASSERT_EQ(lhs, rhs);
  }
}

// Two vertices whose neighbourhoods differ in one or two places never share a
// weight under any bijection.
TEST(Property, SymdiffPairsDifferUnderRandomLabelings) {
  std::mt19937_64 rng(11);
  for (const auto& z : ref::family_zoo(3, 12)) {
    auto pairs = symdiff_pairs(z.graph);
    for (int t = 0; t < 20; ++t) {
      auto f = ref::random_perm(z.graph.order(), rng);
      auto w = ref::weights(z.graph, f);
      for (const auto& e : pairs) ASSERT_NE(w[e.u], w[e.v]) << z.name;
    }
  }
}

TEST(Property, SymdiffOnSweepCertificates) {
  for (const auto& s : construction_sweep(8, 4)) {
    if (!s.certificate || !s.certificate->valid()) continue;
    const auto& c = *s.certificate;
    const Graph& g = c.graph;
    for (Vertex u = 0; u < g.order(); ++u)
      for (Vertex v = u + 1; v < g.order(); ++v) {
        int d = ref::symdiff(g, u, v);
        if (d == 1 || d == 2) ASSERT_NE(c.profile.weights[u], c.profile.weights[v]) << s.labeler << " " << s.params;
      }
  }
}

TEST(Property, PruningDoesNotChangeValue) {
  SearchBudget plain;
  plain.symdiff_bound = false;
  plain.symmetry = false;
  for (const auto& z : ref::family_zoo(2, 7)) {
    auto a = chi_ld_exact(z.graph), b = chi_ld_exact(z.graph, plain);
    ASSERT_EQ(a.status, b.status) << z.name;
    EXPECT_EQ(a.value(), b.value()) << z.name;
  }
}

TEST(Property, PruningOnRandomGraphs) {
  std::mt19937_64 rng(3);
  SearchBudget plain;
  plain.symdiff_bound = false;
  plain.symmetry = false;
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = random_graph(4 + trial % 4, 0.5, rng);
    auto a = chi_ld_exact(g), b = chi_ld_exact(g, plain);
    ASSERT_EQ(a.status, b.status);
    EXPECT_EQ(a.value(), b.value());
    if (a.exact()) {
      EXPECT_EQ(a.value(), ref::brute_chi_ld(g));
    } else {
      EXPECT_EQ(ref::brute_chi_ld(g), -1);
    }
  }
}

TEST(Property, ValueAtLeastForcedChromaticNumber) {
  for (const auto& z : ref::family_zoo(2, 8)) {
    auto r = chi_ld_exact(z.graph);
    if (!r.exact()) continue;
    EXPECT_GE(r.value(), ref::brute_chi(forced_distinct_graph(z.graph))) << z.name;
    EXPECT_GE(r.value(), ref::brute_chi(z.graph)) << z.name;
  }
}

TEST(Property, FriendshipFullyDetermined) {
  // every bijection of F_n gives 2n+1 colours, so the oracle must agree
  for (int n = 2; n <= 3; ++n) {
    auto r = chi_ld_exact(friendship_graph(n));
    ASSERT_TRUE(r.exact());
    EXPECT_EQ(r.value(), 2 * n + 1);
  }
}
