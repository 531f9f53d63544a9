#include <algorithm>
#include <cstdint>
#include <vector>

#include "ldal/error.hpp"
#include "ldal/oracle.hpp"

namespace ldal {

namespace {

// DSatur-ordered backtracking colouring.
struct Colorer {
  const Graph& g;
  std::vector<int> color;
  std::vector<std::vector<int>> seen;  // seen[v][c]: neighbours of v with colour c
  int best;

  explicit Colorer(const Graph& graph) : g(graph), color(graph.order(), -1), best(graph.order()) {
    seen.assign(g.order(), std::vector<int>(g.order() + 1, 0));
  }

  int saturation(Vertex v) const {
    int s = 0;
    for (int c = 0; c < best; ++c) s += seen[v][c] > 0;
    return s;
  }

  void paint(Vertex v, int c, int delta) {
    for (Vertex u : g.neighbors(v)) seen[u][c] += delta;
  }

  void search(int colored, int used) {
    if (used >= best) return;
    if (colored == g.order()) {
      best = used;
      return;
    }
    Vertex pick = -1;
    int pick_sat = -1;
    for (Vertex v = 0; v < g.order(); ++v) {
      if (color[v] >= 0) continue;
      int s = saturation(v);
      if (s > pick_sat || (s == pick_sat && g.degree(v) > g.degree(pick))) {
        pick = v;
        pick_sat = s;
      }
    }
    for (int c = 0; c <= used; ++c) {
      if (c == used && used + 1 >= best) break;
      if (seen[pick][c]) continue;
      color[pick] = c;
      paint(pick, c, 1);
      search(colored + 1, std::max(used, c + 1));
      paint(pick, c, -1);
      color[pick] = -1;
    }
  }
};

}  // namespace

int chi_exact(const Graph& g, int cap) {
  if (g.order() > cap)
    throw CapExceededError("chromatic number search capped at order " + std::to_string(cap));
  if (g.order() == 0) return 0;
  if (g.size() == 0) return 1;
  Colorer c(g);
  c.search(0, 0);
  return c.best;
}

}  // namespace ldal
