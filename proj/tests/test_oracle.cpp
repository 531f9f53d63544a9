#include <gtest/gtest.h>

#include "ldal/error.hpp"
#include "ldal/families.hpp"
#include "ldal/oracle.hpp"
#include "support.hpp"

using namespace ldal;

namespace {

void expect_witness(const OracleResult& r, const Graph& g) {
  ASSERT_TRUE(r.witness.has_value());
  std::vector<int> f(r.witness->labels().begin(), r.witness->labels().end());
  ASSERT_TRUE(ref::is_perm(f));
  auto w = ref::weights(g, f);
  EXPECT_TRUE(ref::valid(g, w));
  EXPECT_EQ(ref::distinct(w), r.upper);
}

}  // namespace

TEST(Oracle, AgreesWithBruteForceOnZoo) {
  for (const auto& z : ref::family_zoo(2, 8)) {
    int expect = ref::brute_chi_ld(z.graph);
    auto r = chi_ld_exact(z.graph);
    if (expect < 0) {
      EXPECT_EQ(r.status, OracleStatus::NoLabeling) << z.name;
      continue;
    }
    ASSERT_TRUE(r.exact()) << z.name;
    EXPECT_EQ(r.value(), expect) << z.name;
    EXPECT_EQ(r.lower, r.upper) << z.name;
    expect_witness(r, z.graph);
  }
}

TEST(Oracle, CyclesNineAndTen) {
  for (int n : {9, 10}) {
    Graph g = cycle_graph(n);
    auto r = chi_ld_exact(g);
    ASSERT_TRUE(r.exact());
    EXPECT_EQ(r.value(), ref::brute_chi_ld(g, true)) << n;
    expect_witness(r, g);
  }
}

TEST(Oracle, CycleElevenAgainstBruteForce) {
  Graph g = cycle_graph(11);
  SearchBudget b;
  b.max_order = 11;
  auto r = chi_ld_exact(g, b);
  ASSERT_TRUE(r.exact());
  EXPECT_EQ(r.value(), ref::brute_chi_ld(g, true));
}

TEST(Oracle, PathsAgainstBruteForce) {
  for (int n = 2; n <= 9; ++n) {
    Graph g = path_graph(n);
    auto r = chi_ld_exact(g);
    ASSERT_TRUE(r.exact());
    EXPECT_EQ(r.value(), ref::brute_chi_ld(g)) << n;
  }
}

TEST(Oracle, WitnessCheck) {
  Graph g = cycle_graph(6);
  auto r = chi_ld_exact(g);
  EXPECT_TRUE(min_colors_witness_check(r, g));
  OracleResult bad = r;
  bad.upper += 1;
  EXPECT_THROW(min_colors_witness_check(bad, g), SelfCheckError);
}

TEST(Oracle, ThreadCountDoesNotChangeWitness) {
  for (const auto& g : {cycle_graph(8), path_graph(8), wheel_graph(6), bistar_graph(2, 3)}) {
    SearchBudget one, many;
    one.threads = 1;
    many.threads = 4;
    auto a = chi_ld_exact(g, one), b = chi_ld_exact(g, many);
    EXPECT_EQ(a.value(), b.value());
    ASSERT_TRUE(a.witness && b.witness);
    EXPECT_EQ(*a.witness, *b.witness);
  }
}

TEST(Oracle, NodeBudgetGivesBracket) {
  SearchBudget b;
  b.max_nodes = 3;
  b.threads = 1;
  Graph g = cycle_graph(9);
  auto r = chi_ld_exact(g, b);
  auto full = chi_ld_exact(g);
  if (r.status == OracleStatus::Bracket) {
    EXPECT_LE(r.lower, full.value());
    if (r.upper > 0) EXPECT_GE(r.upper, full.value());
  } else {
    EXPECT_EQ(r.value(), full.value());
  }
}

TEST(Oracle, OrderCap) {
  EXPECT_THROW(chi_ld_exact(cycle_graph(11)), CapExceededError);
  SearchBudget b;
  b.max_order = 70;
  EXPECT_THROW(chi_ld_exact(empty_graph(65), b), CapExceededError);
}

TEST(Oracle, IsolatedVertex) {
  Graph g = ldal::Graph(3, {{0, 1}});
  auto r = chi_ld_exact(g);
  EXPECT_EQ(r.value(), ref::brute_chi_ld(g));
}

TEST(ChromaticNumber, Examples) {
  EXPECT_EQ(chi_exact(cycle_graph(5)), 3);
  EXPECT_EQ(chi_exact(complete_bipartite(3, 3)), 2);
  EXPECT_EQ(chi_exact(wheel_graph(4)), 3);
  EXPECT_EQ(chi_exact(wheel_graph(5)), 4);
  EXPECT_EQ(chi_exact(empty_graph(4)), 1);
  for (const auto& z : ref::family_zoo(1, 9)) EXPECT_EQ(chi_exact(z.graph), ref::brute_chi(z.graph)) << z.name;
  EXPECT_THROW(chi_exact(cycle_graph(10), 8), CapExceededError);
}
