#include "ldal/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "ldal/error.hpp"

namespace ldal {

Graph::Graph(int order, std::vector<Edge> edges, std::vector<VertexTag> tags)
    : order_(order), edges_(std::move(edges)), tags_(std::move(tags)) {
  if (order_ < 0) throw GraphError("negative order");
  if (!tags_.empty() && static_cast<int>(tags_.size()) != order_)
    throw GraphError("tag count does not match order");
  for (auto& e : edges_) {
    if (e.u < 0 || e.v < 0 || e.u >= order_ || e.v >= order_)
      throw GraphError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       ") out of range for order " + std::to_string(order_));
    if (e.u == e.v) throw GraphError("loop at vertex " + std::to_string(e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end())
    throw GraphError("duplicate edge (" + std::to_string(dup->u) + "," + std::to_string(dup->v) + ")");

  adjacency_.assign(order_, {});
  for (const auto& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& list = adjacency_.at(u);
  return std::binary_search(list.begin(), list.end(), v);
}

int Graph::max_degree() const noexcept {
  int best = 0;
  for (const auto& list : adjacency_) best = std::max(best, static_cast<int>(list.size()));
  return best;
}

int Graph::min_degree() const noexcept {
  if (order_ == 0) return 0;
  int best = order_;
  for (const auto& list : adjacency_) best = std::min(best, static_cast<int>(list.size()));
  return best;
}

bool Graph::is_regular() const noexcept { return max_degree() == min_degree(); }

bool Graph::has_isolated_vertex() const noexcept {
  return std::any_of(adjacency_.begin(), adjacency_.end(), [](const auto& l) { return l.empty(); });
}

Graph Graph::with_tags(std::vector<VertexTag> tags) const {
  return Graph(order_, edges_, std::move(tags));
}

Graph join(const Graph& g, const Graph& h) {
  const int n = g.order();
  const int m = h.order();
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  edges.reserve(g.size() + h.size() + static_cast<std::size_t>(n) * m);
  for (const auto& e : h.edges()) edges.push_back({e.u + n, e.v + n});
  for (Vertex v = 0; v < n; ++v)
    for (Vertex x = 0; x < m; ++x) edges.push_back({v, n + x});

  std::vector<VertexTag> tags;
  if (g.has_tags() || h.has_tags()) {
    tags.resize(n + m);
    for (Vertex v = 0; v < n && g.has_tags(); ++v) tags[v] = g.tag(v);
    for (Vertex x = 0; x < m && h.has_tags(); ++x) tags[n + x] = h.tag(x);
  }
  return Graph(n + m, std::move(edges), std::move(tags));
}

Graph lexicographic(const Graph& g, const Graph& h) {
  const int base = g.order();
  const int fibre = h.order();
  std::vector<Edge> edges;
  edges.reserve(g.size() * fibre * fibre + base * h.size());
  for (const auto& e : g.edges())
    for (int i = 0; i < fibre; ++i)
      for (int k = 0; k < fibre; ++k) edges.push_back({e.u * fibre + i, e.v * fibre + k});
  for (Vertex j = 0; j < base; ++j)
    for (const auto& e : h.edges()) edges.push_back({j * fibre + e.u, j * fibre + e.v});

  std::vector<VertexTag> tags(static_cast<std::size_t>(base) * fibre);
  for (Vertex j = 0; j < base; ++j) {
    for (int i = 0; i < fibre; ++i) {
      auto& t = tags[j * fibre + i];
      if (g.has_tags()) {
        t.role = g.tag(j).role;
        t.part = g.tag(j).part;
      }
      t.copy = j;
      t.slot = i;
    }
  }
  return Graph(base * fibre, std::move(edges), std::move(tags));
}

Graph remove_vertex(const Graph& g, Vertex removed) {
  std::vector<Edge> edges;
  auto shift = [removed](Vertex v) { return v > removed ? v - 1 : v; };
  for (const auto& e : g.edges())
    if (e.u != removed && e.v != removed) edges.push_back({shift(e.u), shift(e.v)});
  std::vector<VertexTag> tags;
  if (g.has_tags())
    for (Vertex v = 0; v < g.order(); ++v)
      if (v != removed) tags.push_back(g.tag(v));
  return Graph(g.order() - 1, std::move(edges), std::move(tags));
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  std::vector<char> seen(g.order(), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex u : g.neighbors(v))
      if (!seen[u]) {
        seen[u] = 1;
        ++count;
        stack.push_back(u);
      }
  }
  return count == g.order();
}

namespace {

bool is_proper_two_colouring(const Graph& g, const std::vector<int>& colour) {
  for (int c : colour)
    if (c != 0 && c != 1) return false;
  return std::all_of(g.edges().begin(), g.edges().end(),
                     [&](const Edge& e) { return colour[e.u] != colour[e.v]; });
}

std::vector<int> bfs_two_colouring(const Graph& g) {
  std::vector<int> colour(g.order(), -1);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (colour[s] != -1) continue;
    colour[s] = 0;
    std::queue<Vertex> q;
    q.push(s);
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop();
      for (Vertex u : g.neighbors(v)) {
        if (colour[u] == -1) {
          colour[u] = 1 - colour[v];
          q.push(u);
        } else if (colour[u] == colour[v]) {
          return {};
        }
      }
    }
  }
  return colour;
}

}  // namespace

std::vector<int> bipartition(const Graph& g) {
  if (g.has_tags()) {
    std::vector<int> colour(g.order());
    for (Vertex v = 0; v < g.order(); ++v) colour[v] = g.tag(v).part;
    if (is_proper_two_colouring(g, colour)) return colour;
  }
  return bfs_two_colouring(g);
}

bool is_bipartite(const Graph& g) { return g.order() == 0 || !bfs_two_colouring(g).empty(); }

std::vector<Vertex> path_order(const Graph& g) {
  const int m = g.order();
  if (m == 0 || static_cast<int>(g.size()) != m - 1 || !is_connected(g)) return {};
  if (m == 1) return {0};
  Vertex start = -1;
  for (Vertex v = 0; v < m; ++v) {
    if (g.degree(v) > 2) return {};
    if (g.degree(v) == 1 && start == -1) start = v;
  }
  if (start == -1) return {};
  std::vector<Vertex> order{start};
  Vertex prev = -1, cur = start;
  while (static_cast<int>(order.size()) < m) {
    Vertex next = -1;
    for (Vertex u : g.neighbors(cur))
      if (u != prev) next = u;
    if (next == -1) return {};
    order.push_back(next);
    prev = cur;
    cur = next;
  }
  return order;
}

std::vector<Vertex> cycle_order(const Graph& g) {
  const int m = g.order();
  if (m < 3 || static_cast<int>(g.size()) != m || !is_connected(g)) return {};
  for (Vertex v = 0; v < m; ++v)
    if (g.degree(v) != 2) return {};
  std::vector<Vertex> order{0};
  Vertex prev = 0, cur = g.neighbors(0)[0];
  while (cur != 0) {
    order.push_back(cur);
    auto nb = g.neighbors(cur);
    Vertex next = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = next;
  }
  return order;
}

}  // namespace ldal
