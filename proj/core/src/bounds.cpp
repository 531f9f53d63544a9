#include "ldal/bounds.hpp"

#include <algorithm>
#include <set>

#include "ldal/error.hpp"
#include "ldal/oracle.hpp"

namespace ldal {

int symdiff_size(const Graph& g, Vertex u, Vertex v) {
  auto a = g.neighbors(u);
  auto b = g.neighbors(v);
  std::vector<Vertex> out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return static_cast<int>(out.size());
}

bool symdiff_rule(const Graph& g, Vertex u, Vertex v) {
  if (u == v) throw ParameterError("symdiff_rule needs two distinct vertices");
  int s = symdiff_size(g, u, v);
  return s == 1 || s == 2;
}

std::vector<Edge> symdiff_pairs(const Graph& g) {
  std::vector<Edge> out;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (symdiff_rule(g, u, v)) out.push_back({u, v});
  return out;
}

Graph forced_distinct_graph(const Graph& g) {
  std::set<Edge> all(g.edges().begin(), g.edges().end());
  for (const auto& e : symdiff_pairs(g)) all.insert(e);
  return Graph(g.order(), std::vector<Edge>(all.begin(), all.end()));
}

bool is_tree(const Graph& g) {
  return g.order() >= 1 && static_cast<int>(g.size()) == g.order() - 1 && is_connected(g);
}

int tree_leaf_lower_bound(const Graph& t) {
  if (!is_tree(t)) throw ParameterError("graph is not a tree");
  if (t.order() < 3) throw ParameterError("tree leaf bound needs order >= 3");
  std::set<Vertex> supports;
  for (Vertex v = 0; v < t.order(); ++v)
    if (t.degree(v) == 1) supports.insert(t.neighbors(v)[0]);
  return static_cast<int>(supports.size()) + 1;
}

int clique_lower_bound(const Graph& g) {
  if (g.order() == 0) return 0;
  std::vector<Vertex> order(g.order());
  for (Vertex v = 0; v < g.order(); ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  int best = 1;
  for (Vertex seed : order) {
    std::vector<Vertex> clique{seed};
    for (Vertex v : order) {
      if (v == seed) continue;
      if (std::all_of(clique.begin(), clique.end(), [&](Vertex c) { return g.adjacent(c, v); })) clique.push_back(v);
    }
    best = std::max(best, static_cast<int>(clique.size()));
  }
  return best;
}

std::vector<Vertex> nested_pair(const Graph& g) {
  if (g.order() < 2 || !is_connected(g)) return {};
  auto side = bipartition(g);
  if (side.empty()) return {};
  for (Vertex x = 0; x < g.order(); ++x) {
    auto nx = g.neighbors(x);
    for (Vertex y = 0; y < g.order(); ++y) {
      if (x == y || side[x] != side[y]) continue;
      auto ny = g.neighbors(y);
      if (nx.size() < ny.size() && std::includes(ny.begin(), ny.end(), nx.begin(), nx.end())) return {x, y};
    }
  }
  return {};
}

int nested_neighborhood_bound(const Graph& g, int n) {
  if (n < 2) throw ParameterError("nested neighbourhood bound needs n >= 2");
  int bound = 0;
  if (!nested_pair(g).empty()) bound = 3;
  for (Vertex v = 0; v < g.order() && bound < 4; ++v) {
    if (g.degree(v) != g.order() - 1 || g.order() < 3) continue;
    if (!nested_pair(remove_vertex(g, v)).empty()) bound = 4;
  }
  return std::max(bound, chi_exact(g));
}

}  // namespace ldal
