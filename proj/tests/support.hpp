#pragma once

// Test-side reference computations. Nothing here calls into the library's
// weighing, search or colouring code; graphs are read only through their
// edge lists.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ldal/families.hpp"
#include "ldal/graph.hpp"

namespace ref {

using W = std::int64_t;

inline std::vector<std::vector<int>> adjacency(const ldal::Graph& g) {
  std::vector<std::vector<int>> adj(g.order());
  for (const auto& e : g.edges()) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  return adj;
}

inline std::vector<W> weights(const ldal::Graph& g, const std::vector<int>& f) {
  std::vector<W> w(g.order(), 0);
  for (const auto& e : g.edges()) {
    w[e.u] += f[e.v];
    w[e.v] += f[e.u];
  }
  return w;
}

inline bool valid(const ldal::Graph& g, const std::vector<W>& w) {
  for (const auto& e : g.edges())
    if (w[e.u] == w[e.v]) return false;
  return true;
}

inline int distinct(const std::vector<W>& w) { return static_cast<int>(std::set<W>(w.begin(), w.end()).size()); }

inline bool is_perm(std::vector<int> f) {
  std::sort(f.begin(), f.end());
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f[i] != static_cast<int>(i) + 1) return false;
  return true;
}

// Minimum colour count over all n! bijections, or -1 when none is valid.
// When fix_first is set, vertex 0 gets label 1 (sound for vertex-transitive
// graphs such as cycles and complete graphs).
inline int brute_chi_ld(const ldal::Graph& g, bool fix_first = false) {
  const int n = g.order();
  std::vector<int> f(n);
  std::iota(f.begin(), f.end(), 1);
  std::vector<std::pair<int, int>> es;
  for (const auto& e : g.edges()) es.emplace_back(e.u, e.v);
  int best = -1;
  std::vector<W> w(n);
  auto begin = fix_first ? f.begin() + 1 : f.begin();
  do {
    std::fill(w.begin(), w.end(), 0);
    for (auto [u, v] : es) {
      w[u] += f[v];
      w[v] += f[u];
    }
    bool ok = true;
    for (auto [u, v] : es)
      if (w[u] == w[v]) {
        ok = false;
        break;
      }
    if (!ok) continue;
    int d = distinct(w);
    if (best < 0 || d < best) best = d;
  } while (std::next_permutation(begin, f.end()));
  return best;
}

// Chromatic number by trying k = 1, 2, ... with plain backtracking.
inline int brute_chi(const ldal::Graph& g) {
  const int n = g.order();
  if (n == 0) return 0;
  auto adj = adjacency(g);
  std::vector<int> col(n, -1);
  for (int k = 1; k <= n; ++k) {
    std::fill(col.begin(), col.end(), -1);
    auto go = [&](auto&& self, int v) -> bool {
      if (v == n) return true;
      for (int c = 0; c < k; ++c) {
        bool ok = true;
        for (int u : adj[v])
          if (col[u] == c) ok = false;
        if (!ok) continue;
        col[v] = c;
        if (self(self, v + 1)) return true;
        col[v] = -1;
      }
      return false;
    };
    if (go(go, 0)) return k;
  }
  return n;
}

inline std::set<int> nbrs(const ldal::Graph& g, int v) {
  std::set<int> s;
  for (const auto& e : g.edges()) {
    if (e.u == v) s.insert(e.v);
    if (e.v == v) s.insert(e.u);
  }
  return s;
}

// |N(u) symmetric-difference N(v)|
inline int symdiff(const ldal::Graph& g, int u, int v) {
  auto a = nbrs(g, u), b = nbrs(g, v);
  int k = 0;
  for (int x : a) k += !b.count(x);
  for (int x : b) k += !a.count(x);
  return k;
}

inline std::vector<int> random_perm(int n, std::mt19937_64& rng) {
  std::vector<int> f(n);
  std::iota(f.begin(), f.end(), 1);
  std::shuffle(f.begin(), f.end(), rng);
  return f;
}

struct Named {
  std::string name;
  ldal::Graph graph;
};

// Every family member with order in [lo, hi].
inline std::vector<Named> family_zoo(int lo, int hi) {
  using namespace ldal;
  std::vector<Named> out;
  auto add = [&](std::string name, Graph g) {
    if (g.order() >= lo && g.order() <= hi) out.push_back({std::move(name), std::move(g)});
  };
  for (int n = 1; n <= hi; ++n) {
    add("path " + std::to_string(n), path_graph(n));
    add("complete " + std::to_string(n), complete_graph(n));
    add("empty " + std::to_string(n), empty_graph(n));
    if (n >= 3) add("cycle " + std::to_string(n), cycle_graph(n));
    add("star " + std::to_string(n), star_graph(n));
    add("friendship " + std::to_string(n), friendship_graph(n));
    add("fan " + std::to_string(n), fan_graph(n));
    add("matching " + std::to_string(n), matching_graph(n));
    if (n >= 3) add("wheel " + std::to_string(n), wheel_graph(n));
  }
  for (int a = 1; a <= hi; ++a)
    for (int b = a; a + b <= hi; ++b) {
      add("bipartite " + std::to_string(a) + " " + std::to_string(b), complete_bipartite(a, b));
      if (a >= 2) add("bistar " + std::to_string(a) + " " + std::to_string(b), bistar_graph(a, b));
    }
  for (int a = 1; a <= hi; ++a)
    for (int b = a; b <= hi; ++b)
      for (int c = b; a + b + c <= hi; ++c) {
        std::vector<int> p{a, b, c};
        add("multipartite " + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c),
            complete_multipartite(p));
      }
  return out;
}

}  // namespace ref
