#include <gtest/gtest.h>

#include <json.hpp>

#include "ldal/bounds.hpp"
#include "ldal/certificate.hpp"
#include "ldal/error.hpp"
#include "ldal/families.hpp"
#include "ldal/graph_io.hpp"
#include "ldal/labeling.hpp"
#include "support.hpp"

using namespace ldal;

namespace {
std::vector<Weight> W(std::initializer_list<Weight> xs) { return xs; }
}  // namespace

TEST(Labeling, RejectsNonBijection) {
  EXPECT_THROW(Labeling({1, 1}), LabelingError);
  EXPECT_THROW(Labeling({0, 1}), LabelingError);
  EXPECT_THROW(Labeling({1, 3}), LabelingError);
  EXPECT_NO_THROW(Labeling({2, 1, 3}));
  EXPECT_TRUE(is_bijective(std::vector<Label>{3, 1, 2}));
  EXPECT_FALSE(is_bijective(std::vector<Label>{3, 3, 2}));
}

TEST(Weigh, PathThree) {
  auto p = weigh(path_graph(3), Labeling({1, 2, 3}));
  EXPECT_EQ(p.weights, W({2, 4, 2}));
  EXPECT_TRUE(p.conflicts.empty());
}

TEST(Weigh, EdgeK2) {
  auto p = weigh(complete_graph(2), Labeling({1, 2}));
  EXPECT_EQ(p.weights, W({2, 1}));
  auto v = is_ldal(complete_graph(2), Labeling({1, 2}));
  EXPECT_TRUE(v.valid);
  EXPECT_EQ(v.colors, 2u);
}

TEST(Weigh, CycleFour) {
  auto p = weigh(cycle_graph(4), Labeling({1, 2, 3, 4}));
  EXPECT_EQ(p.weights, W({6, 4, 6, 4}));
  EXPECT_TRUE(p.valid());
  EXPECT_EQ(p.distinct_count, 2u);
}

TEST(Weigh, PathThreeMiddleLow) {
  auto p = weigh(path_graph(3), Labeling({2, 1, 3}));
  EXPECT_EQ(p.weights, W({1, 5, 1}));
  EXPECT_TRUE(p.valid());
  EXPECT_EQ(p.distinct_count, 2u);
}

TEST(Weigh, InvalidStillProfiled) {
  Graph g = parse_graph("4 4\n0 1\n0 2\n1 3\n2 3\n");
  auto p = weigh(g, Labeling({1, 2, 3, 4}));
  auto w = ref::weights(g, {1, 2, 3, 4});
  EXPECT_EQ(p.weights, w);
  EXPECT_EQ(p.valid(), ref::valid(g, w));
  auto bad = weigh(path_graph(2), Labeling({1, 2}));
  EXPECT_TRUE(bad.valid());
  auto k3 = weigh(star_graph(2), Labeling({2, 1, 3}));  // centre 2, leaves see 2
  EXPECT_EQ(k3.weights, W({4, 2, 2}));
  Graph tri = cycle_graph(3);
  auto t = weigh(tri, Labeling({1, 2, 3}));
  EXPECT_EQ(t.weights, W({5, 4, 3}));
}

TEST(Weigh, ConflictsListed) {
  Graph g = path_graph(4);
  for (auto f : std::vector<std::vector<int>>{{1, 2, 3, 4}, {2, 1, 4, 3}, {3, 1, 2, 4}, {4, 3, 2, 1}}) {
    auto p = weigh(g, Labeling(f));
    auto w = ref::weights(g, f);
    EXPECT_EQ(p.weights, w);
    std::size_t bad = 0;
    for (const auto& e : g.edges()) bad += w[e.u] == w[e.v];
    EXPECT_EQ(p.conflicts.size(), bad);
    EXPECT_EQ(static_cast<int>(p.distinct_count), ref::distinct(w));
  }
}

TEST(Weigh, SizeMismatchThrows) { EXPECT_THROW(weigh(path_graph(3), Labeling({1, 2})), LabelingError); }

TEST(LabelingIo, ParseAndSerialize) {
  Labeling f = parse_labeling("# c4\n0 1\n1 2\n\n3 4\n2 3\n", 4);
  EXPECT_EQ(f, Labeling({1, 2, 3, 4}));
  EXPECT_EQ(serialize_labeling(f), "0 1\n1 2\n2 3\n3 4\n");
  EXPECT_EQ(parse_labeling(serialize_labeling(Labeling({3, 1, 2})), 3), Labeling({3, 1, 2}));
}

TEST(LabelingIo, Errors) {
  EXPECT_THROW(parse_labeling("0 1\n1 1\n", 2), LabelingError);
  EXPECT_THROW(parse_labeling("0 1\n", 2), LabelingError);
  EXPECT_THROW(parse_labeling("0 1\n0 2\n", 2), ParseError);
  EXPECT_THROW(parse_labeling("0 1\n2 2\n", 2), ParseError);
  EXPECT_THROW(parse_labeling("0 1\n1 x\n", 2), ParseError);
  try {
    parse_labeling("0 1\n1\n", 2);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(Certificate, JsonRoundTripAndKeyOrder) {
  auto c = make_certificate(cycle_graph(4), Labeling({1, 2, 3, 4}), "hand", ColorClaim{2, true});
  std::string text = to_json(c);
  auto j = nlohmann::ordered_json::parse(text);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"graph", "labeling", "weights", "conflicts", "valid", "colors", "claim",
                                            "provenance"}));
  EXPECT_EQ(j["colors"], 2);
  EXPECT_EQ(j["valid"], true);
  auto back = certificate_from_json(text);
  EXPECT_EQ(back.graph, c.graph);
  EXPECT_EQ(back.labeling, c.labeling);
  EXPECT_EQ(back.profile.weights, c.profile.weights);
  EXPECT_EQ(to_json(back), text);
}

TEST(Certificate, TamperedJsonRejected) {
  auto c = make_certificate(cycle_graph(4), Labeling({1, 2, 3, 4}), "hand");
  auto j = nlohmann::ordered_json::parse(to_json(c));
  j["weights"][0] = 99;
  EXPECT_THROW(certificate_from_json(j.dump()), SelfCheckError);
  j = nlohmann::ordered_json::parse(to_json(c));
  j["colors"] = 3;
  EXPECT_THROW(certificate_from_json(j.dump()), SelfCheckError);
  j = nlohmann::ordered_json::parse(to_json(c));
  j["valid"] = false;
  EXPECT_THROW(certificate_from_json(j.dump()), SelfCheckError);
  EXPECT_THROW(certificate_from_json("{not json"), ParseError);
}

TEST(Certificate, InvalidLabelingStillCertified) {
  auto d = make_certificate(cycle_graph(4), Labeling({1, 3, 2, 4}), "");
  auto w = ref::weights(cycle_graph(4), {1, 3, 2, 4});
  EXPECT_EQ(d.valid(), ref::valid(cycle_graph(4), w));
  EXPECT_FALSE(to_text(d).empty());
}

TEST(ColorClaim, Holds) {
  EXPECT_TRUE((ColorClaim{3, true}).holds(3));
  EXPECT_FALSE((ColorClaim{3, true}).holds(2));
  EXPECT_TRUE((ColorClaim{3, false}).holds(2));
  EXPECT_FALSE((ColorClaim{3, false}).holds(4));
}

TEST(Bounds, SymdiffExamples) {
  Graph p4 = path_graph(4);
  EXPECT_TRUE(symdiff_rule(p4, 1, 3));
  EXPECT_FALSE(symdiff_rule(path_graph(3), 0, 2));
  EXPECT_FALSE(symdiff_rule(cycle_graph(4), 0, 2));
  EXPECT_THROW(symdiff_rule(p4, 1, 1), ParameterError);
}

TEST(Bounds, SymdiffMatchesReference) {
  for (const auto& z : ref::family_zoo(2, 8))
    for (Vertex u = 0; u < z.graph.order(); ++u)
      for (Vertex v = u + 1; v < z.graph.order(); ++v) {
        int d = ref::symdiff(z.graph, u, v);
        ASSERT_EQ(symdiff_size(z.graph, u, v), d) << z.name;
        ASSERT_EQ(symdiff_rule(z.graph, u, v), d == 1 || d == 2) << z.name;
      }
}

TEST(Bounds, TreeLeaf) {
  EXPECT_EQ(tree_leaf_lower_bound(star_graph(4)), 2);
  EXPECT_EQ(tree_leaf_lower_bound(bistar_graph(2, 2)), 3);
  EXPECT_EQ(tree_leaf_lower_bound(path_graph(4)), 3);
  EXPECT_THROW(tree_leaf_lower_bound(cycle_graph(4)), ParameterError);
  EXPECT_THROW(tree_leaf_lower_bound(path_graph(2)), ParameterError);
}

TEST(Bounds, Clique) {
  EXPECT_EQ(clique_lower_bound(complete_graph(5)), 5);
  EXPECT_EQ(clique_lower_bound(cycle_graph(5)), 2);
  EXPECT_EQ(clique_lower_bound(complete_bipartite(3, 4)), 2);
  for (const auto& z : ref::family_zoo(1, 9)) EXPECT_LE(clique_lower_bound(z.graph), ref::brute_chi(z.graph)) << z.name;
}

TEST(Bounds, NestedNeighborhood) {
  EXPECT_EQ(nested_neighborhood_bound(path_graph(4), 2), 3);
  EXPECT_EQ(nested_neighborhood_bound(fan_graph(4), 2), 4);
  EXPECT_EQ(nested_neighborhood_bound(cycle_graph(4), 2), 2);
  EXPECT_FALSE(nested_pair(path_graph(4)).empty());
  EXPECT_TRUE(nested_pair(cycle_graph(6)).empty());
}

TEST(Bounds, IsTree) {
  EXPECT_TRUE(is_tree(path_graph(5)));
  EXPECT_TRUE(is_tree(bistar_graph(2, 3)));
  EXPECT_FALSE(is_tree(cycle_graph(5)));
  EXPECT_FALSE(is_tree(matching_graph(2)));
}

TEST(Bounds, ForcedDistinctGraphContainsEdges) {
  for (const auto& z : ref::family_zoo(2, 8)) {
    Graph f = forced_distinct_graph(z.graph);
    for (const auto& e : z.graph.edges()) EXPECT_TRUE(f.adjacent(e.u, e.v)) << z.name;
    for (const auto& e : symdiff_pairs(z.graph)) EXPECT_TRUE(f.adjacent(e.u, e.v)) << z.name;
  }
}
