#include <algorithm>
#include <array>
#include <functional>
#include <numeric>

#include "detail.hpp"
#include "ldal/closed_forms.hpp"
#include "ldal/constructive.hpp"
#include "ldal/error.hpp"
#include "ldal/families.hpp"

namespace ldal {

using detail::certify;
using detail::place;

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw ParameterError(what);
}

std::vector<Label> blank_labels(int copies, int n) { return std::vector<Label>(static_cast<std::size_t>(copies) * n, 0); }

void expect_weight(const Certificate& c, Vertex v, Weight expected, const std::string& what) {
  if (c.profile.weights[v] != expected)
    throw SelfCheckError(what + ": vertex " + std::to_string(v) + " has weight " + std::to_string(c.profile.weights[v]) +
                         ", closed form gives " + std::to_string(expected));
}

struct Sides {
  std::vector<Vertex> first, second;
};

Sides split_sides(const Graph& g, const std::string& who) {
  auto side = bipartition(g);
  if (side.empty()) throw HypothesisError(who + ": graph is not bipartite");
  Sides s;
  for (Vertex v = 0; v < g.order(); ++v) (side[v] == 0 ? s.first : s.second).push_back(v);
  return s;
}

bool uniform_degree(const Graph& g, const std::vector<Vertex>& vs) {
  return std::all_of(vs.begin(), vs.end(), [&](Vertex v) { return g.degree(v) == g.degree(vs.front()); });
}

// Moves a labeling of base[K̄n] in canonical numbering onto G[K̄n], where
// seq[p] is the vertex of G playing canonical vertex p.
Certificate relabel(const Certificate& c, const Graph& g, const std::vector<Vertex>& seq, int n, const std::string& how) {
  std::vector<Label> labels = blank_labels(g.order(), n);
  for (std::size_t p = 0; p < seq.size(); ++p)
    for (int i = 0; i < n; ++i) labels[static_cast<std::size_t>(seq[p]) * n + i] = c.labeling[static_cast<Vertex>(p * n + i)];
  return certify(lexicographic(g, empty_graph(n)), std::move(labels), c.provenance + " (" + how + ")",
                 c.claim.value_or(ColorClaim{static_cast<int>(c.colors()), true}));
}

}  // namespace

Certificate label_lexi_lift(const Graph& g, const Labeling& f, int n) {
  require(n > 1, "lexi-lift needs n > 1");
  if (static_cast<int>(f.size()) != g.order()) throw LabelingError("labeling size does not match G");
  auto pf = weigh(g, f);
  if (!pf.valid()) throw HypothesisError("lexi-lift: labeling of G is not local distance antimagic");
  std::vector<Weight> lifted(g.order());
  for (Vertex v = 0; v < g.order(); ++v) lifted[v] = lexi_lift_weight(n, g.degree(v), pf.weights[v]);
  for (const auto& e : g.edges())
    if (lifted[e.u] == lifted[e.v])
      throw HypothesisError("lexi-lift: lifted weights agree on edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
  if (count_distinct(lifted) > pf.distinct_count)
    throw HypothesisError("lexi-lift: a weight class of f mixes degrees, so the lift needs " +
                          std::to_string(count_distinct(lifted)) + " colours, more than the " +
                          std::to_string(pf.distinct_count) + " of f");
  auto labels = blank_labels(g.order(), n);
  for (Vertex j = 0; j < g.order(); ++j)
    for (int i = 0; i < n; ++i) labels[static_cast<std::size_t>(j) * n + i] = (i + 1) + (f[j] - 1) * n;
  auto c = certify(lexicographic(g, empty_graph(n)), std::move(labels), "lexi-lift: g(v_i^j) = i + (f(v_j)-1)n",
                   ColorClaim{static_cast<int>(pf.distinct_count), false});
  for (Vertex j = 0; j < g.order(); ++j)
    for (int i = 0; i < n; ++i) expect_weight(c, j * n + i, lifted[j], "lexi-lift");
  return c;
}

Certificate label_regular_bipartite_lexi(const Graph& g, int n) {
  require(n > 1, "regular-bipartite needs n > 1");
  if (!g.is_regular() || g.max_degree() == 0) throw HypothesisError("regular-bipartite: graph is not r-regular with r >= 1");
  auto sides = split_sides(g, "regular-bipartite");
  if (sides.first.size() != sides.second.size()) throw HypothesisError("regular-bipartite: sides are unbalanced");
  const int s = static_cast<int>(sides.first.size());
  const int r = g.max_degree();
  auto labels = blank_labels(g.order(), n);
  std::string how;
  if (n % 2 == 0) {
    auto a = build_matrix_A(n, s);
    for (int k = 0; k < s; ++k) {
      place(labels, n, sides.first[k] + 1, a, k + 1, 0);
      place(labels, n, sides.second[k] + 1, a, k + 1, static_cast<Weight>(n) * s);
    }
    how = "regular-bipartite: matrix A on one side, A + ns on the other";
  } else {
    auto b = build_matrix_B(n, s);
    auto cm = build_matrix_C(n, s);
    for (int k = 0; k < s; ++k) {
      place(labels, n, sides.first[k] + 1, b, k + 1);
      place(labels, n, sides.second[k] + 1, cm, k + 1);
    }
    how = "regular-bipartite: matrix B on one side, matrix C on the other";
  }
  auto c = certify(lexicographic(g, empty_graph(n)), std::move(labels), how, ColorClaim{2, true});
  auto w = regular_bipartite_weights(n, s, r);
  for (int k = 0; k < s; ++k)
    for (int i = 0; i < n; ++i) {
      expect_weight(c, sides.first[k] * n + i, w[0], "regular-bipartite");
      expect_weight(c, sides.second[k] * n + i, w[1], "regular-bipartite");
    }
  return c;
}

Certificate label_biregular_bipartite_lexi(const Graph& g, int n) {
  require(n > 1, "biregular needs n > 1");
  auto sides = split_sides(g, "biregular");
  if (sides.first.empty() || sides.second.empty()) throw HypothesisError("biregular: one side is empty");
  if (!uniform_degree(g, sides.first) || !uniform_degree(g, sides.second))
    throw HypothesisError("biregular: degrees are not uniform on each side");
  if (g.degree(sides.first.front()) == g.degree(sides.second.front()))
    throw HypothesisError("biregular: both sides have the same degree; use the regular construction");
  const int m = g.order();
  auto labels = blank_labels(m, n);
  const bool complete = g.size() == sides.first.size() * sides.second.size();
  if (complete) {
    auto u = sides.first, v = sides.second;
    if (u.size() > v.size()) std::swap(u, v);
    const int a = static_cast<int>(u.size()), b = static_cast<int>(v.size());
    for (int j = 1; j <= a; ++j)
      for (int i = 1; i <= n; ++i) labels[static_cast<std::size_t>(u[j - 1]) * n + (i - 1)] = (i - 1) * a + j;
    for (int j = 1; j <= b; ++j)
      for (int i = 1; i <= n; ++i) labels[static_cast<std::size_t>(v[j - 1]) * n + (i - 1)] = a * n + (i - 1) * b + j;
    auto c = certify(lexicographic(g, empty_graph(n)), std::move(labels),
                     "biregular: complete bipartite formula, smaller side labeled first", ColorClaim{2, true});
    auto w = complete_bipartite_weights(a, b, n);
    for (Vertex x : u)
      for (int i = 0; i < n; ++i) expect_weight(c, x * n + i, w[0], "biregular");
    for (Vertex x : v)
      for (int i = 0; i < n; ++i) expect_weight(c, x * n + i, w[1], "biregular");
    return c;
  }
  RectangularArray block;
  std::string how;
  if (n % 2 == 0) {
    block = build_matrix_A(n, m);
    how = "biregular: matrix A across all copies";
  } else if (m % 2 == 1) {
    block = build_magic_rectangle(n, m);
    how = "biregular: equal-column-sum rectangle across all copies";
  } else {
    throw NotCoveredError("biregular: n odd with an even number of vertices is covered only for complete bipartite graphs");
  }
  int col = 1;
  for (Vertex x : sides.first) place(labels, n, x + 1, block, col++);
  for (Vertex x : sides.second) place(labels, n, x + 1, block, col++);
  auto c = certify(lexicographic(g, empty_graph(n)), std::move(labels), how, ColorClaim{2, true});
  for (Vertex x = 0; x < m; ++x)
    for (int i = 0; i < n; ++i) expect_weight(c, x * n + i, biregular_weight(n, m, g.degree(x)), "biregular");
  return c;
}

int path_lexi_claim(int m, int n) {
  if (n % 2 == 0) return m == 3 ? 2 : (m % 2 == 1 ? 3 : 4);
  if (m % 2 == 0) return 4;
  if (m % 4 == 1) return 4;
  return m == 3 ? 2 : 3;
}

Certificate label_path_lexi(int m, int n) {
  require(m >= 3, "path-lexi needs m >= 3");
  require(n > 1, "path-lexi needs n > 1");
  auto labels = blank_labels(m, n);
  const Weight N = n;
  std::string how;
  if (n % 2 == 0 && m % 2 == 1) {
    const int k = (m - 1) / 2;
    auto a = build_matrix_A(n, k + 1);
    auto b = build_matrix_A(n, k);
    for (int j = 1; j <= m; ++j) j % 2 ? place(labels, n, j, a, (j + 1) / 2) : place(labels, n, j, b, j / 2, N * (k + 1));
    how = "path-lexi: n even, m odd; A blocks on odd copies, shifted A on even copies";
  } else if (n % 2 == 0) {
    const int k = m / 2;
    auto a = build_matrix_A(n, k);
    for (int j = 1; j <= m; ++j) j % 2 ? place(labels, n, j, a, (j + 1) / 2) : place(labels, n, j, a, j / 2, N * k);
    how = "path-lexi: n even, m even; A on odd copies, A + nk on even copies";
  } else if (m % 4 == 1) {
    const int k = (m - 1) / 4;
    auto mg = build_magic_rectangle(n, 2 * k + 1);
    auto b = build_matrix_B(n, k);
    auto c = build_matrix_C(n, k);
    for (int j = 1; j <= m; ++j) {
      if (j % 2 == 1) place(labels, n, j, mg, (j + 1) / 2, 2 * N * k);
      else if (j % 4 == 2) place(labels, n, j, b, (j + 2) / 4);
      else place(labels, n, j, c, j / 4);
    }
    how = "path-lexi: n odd, m = 1 mod 4; B column (j+2)/4 (the (j+2)/2 reading leaves the column range)";
  } else if (m % 4 == 3) {
    const int k = (m - 3) / 4;
    auto mg = build_magic_rectangle(n, 2 * k + 1);
    auto b = build_matrix_B(n, k + 1);
    auto c = build_matrix_C(n, k + 1);
    for (int j = 1; j <= m; ++j) {
      if (j % 2 == 0) place(labels, n, j, mg, j / 2, 2 * N * (k + 1));
      else if (j % 4 == 1) place(labels, n, j, b, (j + 3) / 4);
      else place(labels, n, j, c, (j + 1) / 4);
    }
    how = "path-lexi: n odd, m = 3 mod 4; rectangle on even copies, B and C on odd copies";
  } else {
    const int k = m / 2;
    auto b = build_matrix_B(n, k);
    auto c = build_matrix_C(n, k);
    for (int j = 1; j <= m; ++j) j % 2 ? place(labels, n, j, b, (j + 1) / 2) : place(labels, n, j, c, j / 2);
    how = "path-lexi: n odd, m even; B on odd copies, C on even copies";
  }
  return certify(lexicographic(path_graph(m), empty_graph(n)), std::move(labels), how,
                 ColorClaim{path_lexi_claim(m, n), true});
}

Certificate label_cycle_lexi(int m, int n, const SearchBudget& budget) {
  require(m >= 3, "cycle-lexi needs m >= 3");
  require(n > 1, "cycle-lexi needs n > 1");
  Graph cyc = cycle_graph(m);
  if (m % 2 == 0) {
    auto c = label_regular_bipartite_lexi(cyc, n);
    c.provenance = "cycle-lexi: even cycle; " + c.provenance;
    return c;
  }
  if (m % 3 == 0) {
    std::vector<int> classes(m);
    for (int v = 0; v < m; ++v) classes[v] = v % 3;
    auto c = label_2r_regular_3chromatic_lexi(cyc, classes, n);
    c.provenance = "cycle-lexi: m = 0 mod 3; " + c.provenance;
    return c;
  }
  Graph g = lexicographic(cyc, empty_graph(n));
  if (n == 2) {
    if (g.order() > budget.max_order)
      throw NotCoveredError("cycle-lexi: odd m not divisible by 3 with n = 2 has no construction, and order " +
                            std::to_string(g.order()) + " exceeds the search cap");
    auto r = chi_ld_exact(g, budget);
    if (!r.exact() || !r.witness) throw CapExceededError("cycle-lexi: search budget exhausted");
    std::vector<Label> labels(r.witness->labels().begin(), r.witness->labels().end());
    return certify(g, std::move(labels), "cycle-lexi: n = 2 outside the constructions; exact search",
                   ColorClaim{r.upper, true});
  }
  auto labels = blank_labels(m, n);
  const Weight N = n;
  std::string how;
  if (m % 6 == 1) {
    const int big = (m + 2) / 3, small = (m - 1) / 3;
    const Weight s1 = N * big;
    if (n % 2 == 0) {
      auto a = build_matrix_A(n, big);
      auto b = build_matrix_A(n, small);
      for (int j = 1; j <= m; ++j) {
        if (j % 3 == 1) place(labels, n, j, a, (j + 2) / 3);
        else if (j % 3 == 2) place(labels, n, j, b, (j + 1) / 3, s1);
        else place(labels, n, j, b, j / 3, s1 + N * small);
      }
      how = "cycle-lexi: n even, m = 1 mod 6; A column (j+2)/3 (the (j+1)/2 reading is not integral at j = 4)";
    } else {
      auto a = build_magic_rectangle(n, big);
      auto b = build_matrix_B(n, small);
      auto c = build_matrix_C(n, small);
      for (int j = 1; j <= m; ++j) {
        if (j % 3 == 1) place(labels, n, j, a, (j + 2) / 3);
        else if (j % 3 == 2) place(labels, n, j, b, (j + 1) / 3, s1);
        else place(labels, n, j, c, j / 3, s1);
      }
      how = "cycle-lexi: n odd, m = 1 mod 6; rectangle column (j+2)/3 (the (j+1)/2 reading is not integral at j = 4); "
            "B and C share the offset n(m+2)/3";
    }
  } else if (m % 4 == 1) {
    const int big = (m + 1) / 2, small = (m - 1) / 4;
    const Weight s1 = N * big;
    RectangularArray a, b, c;
    Weight sb = s1, sc;
    if (n % 2 == 0) {
      a = build_matrix_A(n, big);
      b = c = build_matrix_A(n, small);
      sc = s1 + N * small;
      how = "cycle-lexi: n even, m = 5 mod 12";
    } else {
      a = build_magic_rectangle(n, big);
      b = build_matrix_B(n, small);
      c = build_matrix_C(n, small);
      sc = s1;
      how = "cycle-lexi: n odd, m = 5 mod 12; B and C share the offset n(m+1)/2";
    }
    for (int j = 1; j <= m; ++j) {
      if (j == m) place(labels, n, j, a, big);
      else if (j % 4 == 1) place(labels, n, j, b, (j + 3) / 4, sb);
      else if (j % 4 == 2) place(labels, n, j, c, (j + 2) / 4, sc);
      else if (j % 4 == 3) place(labels, n, j, a, (j + 1) / 4);
      else place(labels, n, j, a, small + j / 4);
    }
  } else {
    const int big = (m - 1) / 2, small = (m + 1) / 4;
    const Weight s1 = N * big;
    RectangularArray a, b, c;
    Weight sb = s1, sc;
    if (n % 2 == 0) {
      a = build_matrix_A(n, big);
      b = c = build_matrix_A(n, small);
      sc = s1 + N * small;
      how = "cycle-lexi: n even, m = 11 mod 12";
    } else {
      a = build_magic_rectangle(n, big);
      b = build_matrix_B(n, small);
      c = build_matrix_C(n, small);
      sc = s1;
      how = "cycle-lexi: n odd, m = 11 mod 12; B and C share the offset n(m-1)/2";
    }
    for (int j = 1; j <= m; ++j) {
      if (j % 4 == 1) place(labels, n, j, b, (j + 3) / 4, sb);
      else if (j % 4 == 2) place(labels, n, j, c, (j + 2) / 4, sc);
      else if (j % 4 == 3) place(labels, n, j, a, (j + 1) / 4);
      else place(labels, n, j, a, small + j / 4);
    }
  }
  return certify(std::move(g), std::move(labels), how, ColorClaim{3, true});
}

Certificate label_2r_regular_3chromatic_lexi(const Graph& g, std::span<const int> classes, int n) {
  require(n > 1, "tripartite needs n > 1");
  const int m = g.order();
  if (static_cast<int>(classes.size()) != m) throw ParameterError("tripartite: one class per vertex required");
  for (int c : classes)
    if (c < 0 || c > 2) throw ParameterError("tripartite: classes must be 0, 1 or 2");
  if (!g.is_regular() || g.max_degree() == 0 || g.max_degree() % 2 != 0)
    throw HypothesisError("tripartite: graph is not 2r-regular with r >= 1");
  const int r = g.max_degree() / 2;
  std::array<std::vector<Vertex>, 3> members;
  for (Vertex v = 0; v < m; ++v) members[classes[v]].push_back(v);
  for (Vertex v = 0; v < m; ++v) {
    std::array<int, 3> seen{0, 0, 0};
    for (Vertex u : g.neighbors(v)) ++seen[classes[u]];
    if (seen[classes[v]] != 0) throw HypothesisError("tripartite: vertex " + std::to_string(v) + " has a neighbour in its own class");
    for (int k = 0; k < 3; ++k)
      if (k != classes[v] && seen[k] != r)
        throw HypothesisError("tripartite: vertex " + std::to_string(v) + " does not split its neighbourhood " +
                              std::to_string(r) + "/" + std::to_string(r));
  }
  const int k = static_cast<int>(members[0].size()), s = static_cast<int>(members[1].size()),
            t = static_cast<int>(members[2].size());
  if (n % 2 == 1 && (k % 2 == 0 || s % 2 == 0 || t % 2 == 0))
    throw HypothesisError("tripartite: n odd needs every class size odd");
  auto block = [&](int cols) { return n % 2 == 0 ? build_matrix_A(n, cols) : build_magic_rectangle(n, cols); };
  auto labels = blank_labels(m, n);
  const std::array<Weight, 3> shift{0, static_cast<Weight>(n) * k, static_cast<Weight>(n) * (k + s)};
  for (int cls = 0; cls < 3; ++cls) {
    auto b = block(static_cast<int>(members[cls].size()));
    for (std::size_t col = 0; col < members[cls].size(); ++col)
      place(labels, n, members[cls][col] + 1, b, static_cast<int>(col) + 1, shift[cls]);
  }
  auto c = certify(lexicographic(g, empty_graph(n)), std::move(labels),
                   n % 2 == 0 ? "tripartite: A blocks at offsets 0, nk, n(k+s)"
                              : "tripartite: equal-column-sum rectangles at offsets 0, nk, n(k+s)",
                   ColorClaim{3, true});
  auto w = tripartite_weights(n, k, s, t, r);
  for (Vertex v = 0; v < m; ++v)
    for (int i = 0; i < n; ++i) expect_weight(c, v * n + i, w[classes[v]], "tripartite");
  return c;
}

std::vector<int> find_split_3_coloring(const Graph& g, int n) {
  const int m = g.order();
  if (m == 0 || !g.is_regular() || g.max_degree() == 0 || g.max_degree() % 2 != 0) return {};
  const int r = g.max_degree() / 2;
  std::vector<int> cls(m, -1);
  auto splits = [&](Vertex v) {
    std::array<int, 3> seen{0, 0, 0};
    for (Vertex u : g.neighbors(v)) {
      if (cls[u] < 0) return true;
      ++seen[cls[u]];
    }
    for (int k = 0; k < 3; ++k)
      if (k != cls[v] && seen[k] != r) return false;
    return true;
  };
  std::function<bool(Vertex, int)> go = [&](Vertex v, int used) -> bool {
    if (v == m) {
      if (used < 3) return false;
      if (n % 2 == 1)
        for (int k = 0; k < 3; ++k)
          if (std::count(cls.begin(), cls.end(), k) % 2 == 0) return false;
      return true;
    }
    for (int c = 0; c < std::min(3, used + 1); ++c) {
      bool ok = true;
      for (Vertex u : g.neighbors(v))
        if (cls[u] == c) ok = false;
      if (!ok) continue;
      cls[v] = c;
      bool fine = splits(v);
      for (Vertex u : g.neighbors(v))
        if (fine && cls[u] >= 0) fine = splits(u);
      if (fine && go(v + 1, std::max(used, c + 1))) return true;
      cls[v] = -1;
    }
    return false;
  };
  if (!go(0, 0)) return {};
  return cls;
}

bool check_lexi_join_condition(long long m, long long n, long long delta) {
  const long long dn = delta * n;
  long long lhs = 2 * dn * (m * n + n) - dn * (dn - 1);
  long long rhs = 4 * m * n * n + (m - 1) * n * (m * n + n + 1);
  return lhs < rhs;
}

Certificate label_lexi_auto(const Graph& g, int n) {
  require(n > 1, "lexicographic constructions need n > 1");
  const bool bip = is_bipartite(g);
  if (bip && g.is_regular() && g.max_degree() > 0) {
    auto sides = split_sides(g, "auto");
    if (sides.first.size() == sides.second.size()) return label_regular_bipartite_lexi(g, n);
  }
  if (bip && g.min_degree() > 0) {
    auto sides = split_sides(g, "auto");
    if (uniform_degree(g, sides.first) && uniform_degree(g, sides.second) &&
        g.degree(sides.first.front()) != g.degree(sides.second.front()))
      return label_biregular_bipartite_lexi(g, n);
  }
  if (auto seq = path_order(g); seq.size() >= 3) return relabel(label_path_lexi(g.order(), n), g, seq, n, "along the path");
  if (auto seq = cycle_order(g); !seq.empty())
    return relabel(label_cycle_lexi(g.order(), n), g, seq, n, "along the cycle");
  if (auto cls = find_split_3_coloring(g, n); !cls.empty()) return label_2r_regular_3chromatic_lexi(g, cls, n);
  throw NotCoveredError("no lexicographic construction applies to this graph");
}

Certificate label_lexi_join_plus_one(const Graph& g, int n) {
  require(n > 1, "lexi-join needs n > 1");
  require(g.order() >= 1, "lexi-join needs a nonempty graph");
  const int m = g.order();
  if (!check_lexi_join_condition(m, n, g.max_degree()))
    throw HypothesisError("lexi-join: inequality fails for m=" + std::to_string(m) + ", n=" + std::to_string(n) +
                          ", max degree " + std::to_string(g.max_degree()));
  auto base = label_lexi_auto(g, n);
  const int big = base.graph.order();
  const ColorClaim claim{static_cast<int>(base.colors()) + 1, base.colors() == 2};
  std::vector<Label> added(n);
  std::iota(added.begin(), added.end(), 1);

  std::vector<Weight> high(big);
  for (Vertex x = 0; x < big; ++x) high[x] = join_high_weight(base.profile.weights[x], base.graph.degree(x), n);
  const Weight low = join_low_weight(0, n, big);
  std::string why;
  if (low <= *std::max_element(high.begin(), high.end()))
    why = "the added vertices' weight " + std::to_string(low) + " does not exceed every product weight";
  for (const auto& e : base.graph.edges())
    if (why.empty() && high[e.u] == high[e.v])
      why = "degree shift merges adjacent vertices " + std::to_string(e.u) + " and " + std::to_string(e.v);
  if (why.empty() && count_distinct(high) > base.colors()) why = "degree shift splits a weight class";
  if (why.empty()) {
    auto j = detail::join_labelings(base.graph, base.labeling.labels(), empty_graph(n), added, false);
    auto c = certify(std::move(j.graph), std::move(j.labels), "lexi-join: added copy on labels 1..n; " + base.provenance,
                     claim);
    for (Vertex x = 0; x < big; ++x) expect_weight(c, x, high[x], "lexi-join");
    for (int i = 0; i < n; ++i) expect_weight(c, big + i, low, "lexi-join");
    return c;
  }
  // Added copy on the top labels: every product vertex gains the same amount,
  // so the product labeling keeps its classes.
  const Weight gain = static_cast<Weight>(n) * big + static_cast<Weight>(n) * (n + 1) / 2;
  const Weight top = static_cast<Weight>(big) * (big + 1) / 2;
  for (Vertex x = 0; x < big; ++x)
    if (base.profile.weights[x] + gain == top)
      throw HypothesisError("lexi-join: inequality holds but " + why + ", and the added copy on top labels meets vertex " +
                            std::to_string(x));
  auto j = detail::join_labelings(base.graph, base.labeling.labels(), empty_graph(n), added, true);
  auto c = certify(std::move(j.graph), std::move(j.labels),
                   "lexi-join: added copy on labels mn+1..mn+n (low placement fails: " + why + "); " + base.provenance,
                   claim);
  for (Vertex x = 0; x < big; ++x) expect_weight(c, x, base.profile.weights[x] + gain, "lexi-join");
  for (int i = 0; i < n; ++i) expect_weight(c, big + i, top, "lexi-join");
  return c;
}

}  // namespace ldal
