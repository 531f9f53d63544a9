#include "ldal/constructive.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "detail.hpp"
#include "ldal/closed_forms.hpp"
#include "ldal/error.hpp"
#include "ldal/families.hpp"
#include "ldal/graph_io.hpp"

namespace ldal {

namespace detail {

Certificate certify(Graph g, std::vector<Label> labels, std::string provenance, ColorClaim claim) {
  if (g.has_isolated_vertex()) throw GraphError(provenance + ": constructed graph has an isolated vertex");
  if (!is_bijective(labels)) throw SelfCheckError(provenance + ": labels are not a bijection");
  auto c = make_certificate(std::move(g), Labeling(std::move(labels)), std::move(provenance), claim);
  if (!c.valid())
    throw SelfCheckError(c.provenance + ": " + std::to_string(c.profile.conflicts.size()) + " adjacent pair(s) share a weight");
  if (!claim.holds(c.colors()))
    throw SelfCheckError(c.provenance + ": " + std::to_string(c.colors()) + " colours, expected " +
                         (claim.exact ? "" : "at most ") + std::to_string(claim.colors));
  return c;
}

Joined join_labelings(const Graph& first, std::span<const Label> f, const Graph& second, std::span<const Label> g,
                      bool first_low) {
  const int a = first.order(), b = second.order();
  Joined out{join(first, second), std::vector<Label>(a + b)};
  for (int v = 0; v < a; ++v) out.labels[v] = f[v] + (first_low ? 0 : b);
  for (int x = 0; x < b; ++x) out.labels[a + x] = g[x] + (first_low ? a : 0);
  return out;
}

void place(std::vector<Label>& labels, int n, int copy, const RectangularArray& r, int col, Weight shift) {
  for (int i = 0; i < n; ++i) labels[static_cast<std::size_t>(copy - 1) * n + i] = static_cast<Label>(r.at(i, col - 1) + shift);
}

}  // namespace detail

using detail::certify;

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw ParameterError(what);
}

std::vector<Label> iota_labels(int n) {
  std::vector<Label> v(n);
  std::iota(v.begin(), v.end(), 1);
  return v;
}

void expect_weight(const Certificate& c, Vertex v, Weight expected, const char* what) {
  if (c.profile.weights[v] != expected)
    throw SelfCheckError(std::string(what) + ": vertex " + std::to_string(v) + " has weight " +
                         std::to_string(c.profile.weights[v]) + ", closed form gives " + std::to_string(expected));
}

std::vector<Label> bistar_labels(int m, int n) {
  // Centres get 1 and 2; the smaller leaf set takes the small labels.
  std::vector<Label> f(m + n + 2);
  f[0] = 1;
  f[1] = 2;
  Label next = 3;
  auto fill_a = [&] { for (int i = 0; i < m; ++i) f[2 + i] = next++; };
  auto fill_b = [&] { for (int i = 0; i < n; ++i) f[2 + m + i] = next++; };
  if (m <= n) {
    fill_a();
    fill_b();
  } else {
    fill_b();
    fill_a();
  }
  return f;
}

}  // namespace

Certificate label_clique_plus_empty(int n, int p) {
  require(p >= 2 && p <= n, "clique-plus-empty needs 2 <= p <= n");
  Graph g = join(complete_graph(p - 1), empty_graph(n - p + 1));
  auto c = certify(g, iota_labels(n), "clique-plus-empty: K_{p-1} labeled 1..p-1, independent set p..n",
                   ColorClaim{p, true});
  for (Vertex v = 0; v < p - 1; ++v)
    expect_weight(c, v, clique_plus_empty_clique_weight(n, p, v + 1), "clique-plus-empty");
  for (Vertex v = p - 1; v < n; ++v) expect_weight(c, v, clique_plus_empty_independent_weight(p), "clique-plus-empty");
  return c;
}

Certificate label_multipartite_solution2(int n, int p, std::span<const int> sizes, const SearchBudget& budget) {
  require(p >= 2, "multipartite needs p >= 2");
  require(static_cast<int>(sizes.size()) == p - 1, "multipartite needs p-1 part sizes");
  long long sum = 0;
  for (int x : sizes) {
    require(x >= 1, "multipartite part sizes must be >= 1");
    sum += x;
  }
  require(sum < n, "multipartite part sizes must sum to less than n");
  std::vector<int> parts(sizes.begin(), sizes.end());
  parts.push_back(static_cast<int>(n - sum));
  Graph g = complete_multipartite(parts);
  if (p == n) return certify(g, iota_labels(n), "multipartite: complete graph, identity labeling", ColorClaim{p, true});
  SearchBudget b = budget;
  auto r = chi_ld_exact(g, b);
  if (!r.exact() || !r.witness) throw CapExceededError("multipartite: oracle budget exhausted before an exact answer");
  auto labels = std::vector<Label>(r.witness->labels().begin(), r.witness->labels().end());
  return certify(g, std::move(labels), "multipartite: labeling from exact search", ColorClaim{p, true});
}

bool check_join_condition(long long n, long long m, long long dh, long long dg) {
  if (n > m) throw ParameterError("join condition needs n <= m");
  // Both sides doubled to stay in integers.
  long long lhs = 2 * dh * (m + n) - dh * (dh - 1) - dg * (dg + 1);
  long long rhs = 4 * n * m + (m - n) * (m + n + 1);
  return lhs < rhs;
}

bool check_join_separation(long long n, long long m, long long dh, long long dg) {
  if (n > m) throw ParameterError("join condition needs n <= m");
  long long lhs = 2 * dh * (m + n) - dh * (dh - 1) - dg * (dg + 1);
  long long rhs = 2 * n * m + (m - n) * (m + n + 1);
  return lhs < rhs;
}

Certificate label_join(const Graph& g, const Labeling& f, const Graph& h, const Labeling& gl) {
  const int n = g.order(), m = h.order();
  require(n > 0 && m > 0, "join ingredients must be nonempty");
  if (static_cast<int>(f.size()) != n || static_cast<int>(gl.size()) != m)
    throw LabelingError("ingredient labeling sizes do not match the graphs");
  require(n <= m, "join needs |G| <= |H|");
  require(g.size() > 0 || h.size() > 0, "join of two edgeless graphs is not supported");
  auto pf = weigh(g, f);
  auto pg = weigh(h, gl);
  if (!pf.valid()) throw HypothesisError("join: labeling of G is not local distance antimagic");
  if (!pg.valid()) throw HypothesisError("join: labeling of H is not local distance antimagic");
  if (!check_join_condition(n, m, h.max_degree(), g.min_degree()))
    throw HypothesisError("join: inequality fails for n=" + std::to_string(n) + ", m=" + std::to_string(m) +
                          ", max degree of H " + std::to_string(h.max_degree()) + ", min degree of G " +
                          std::to_string(g.min_degree()));
  std::vector<Weight> low(n), high(m);
  for (Vertex v = 0; v < n; ++v) low[v] = join_low_weight(pf.weights[v], n, m);
  for (Vertex x = 0; x < m; ++x) high[x] = join_high_weight(pg.weights[x], h.degree(x), n);
  Weight low_min = *std::min_element(low.begin(), low.end());
  Weight high_max = *std::max_element(high.begin(), high.end());
  if (low_min <= high_max)
    throw HypothesisError("join: inequality holds but a G-side weight (" + std::to_string(low_min) +
                          ") does not exceed an H-side weight (" + std::to_string(high_max) + ")");
  for (const auto& e : h.edges())
    if (high[e.u] == high[e.v])
      throw HypothesisError("join: degree shift gives adjacent H vertices " + std::to_string(e.u) + " and " +
                            std::to_string(e.v) + " equal weights");
  std::size_t hcount = count_distinct(high);
  if (hcount > pg.distinct_count) throw HypothesisError("join: degree shift splits a weight class of H");

  auto j = detail::join_labelings(g, f.labels(), h, gl.labels(), true);
  ColorClaim claim{static_cast<int>(pf.distinct_count + hcount), true};
  auto c = certify(std::move(j.graph), std::move(j.labels), "join: G on labels 1..n, H shifted by n", claim);
  for (Vertex v = 0; v < n; ++v) expect_weight(c, v, low[v], "join");
  for (Vertex x = 0; x < m; ++x) expect_weight(c, n + x, high[x], "join");
  return c;
}

Certificate label_friendship(int n) {
  require(n >= 2, "friendship labeling needs n >= 2");
  return certify(friendship_graph(n), iota_labels(2 * n + 1), "friendship: identity labeling",
                 ColorClaim{2 * n + 1, true});
}

Certificate label_bistar(int m, int n) {
  require(m >= 2 && n >= 2, "bistar labeling needs m, n >= 2");
  return certify(bistar_graph(m, n), bistar_labels(m, n),
                 m <= n ? "bistar: centres 1, 2; a-leaves next, b-leaves last"
                        : "bistar: centres 1, 2; b-leaves next, a-leaves last",
                 ColorClaim{4, true});
}

Certificate label_friendship_join_empty(int n, int m) {
  require(n >= 2, "friendship join needs n >= 2");
  require(m >= 1, "friendship join needs m >= 1");
  const int N = 2 * n + 1;
  Graph fg = friendship_graph(n);
  Graph eg = empty_graph(m);
  if (m >= N) {
    auto c = label_join(fg, Labeling::identity(N), eg, Labeling::identity(m));
    if (static_cast<int>(c.colors()) != 2 * n + 2) throw SelfCheckError("friendship join: unexpected colour count");
    c.claim = ColorClaim{2 * n + 2, true};
    c.provenance = "friendship-join-empty: join with F_n on labels 1..2n+1";
    return c;
  }
  auto empty_labels = iota_labels(m);
  for (bool friendship_low : {true, false}) {
    for (Label centre = 1; centre <= N; ++centre) {
      std::vector<Label> fl(N);
      fl[0] = centre;
      Label next = 1;
      for (int v = 1; v < N; ++v) {
        if (next == centre) ++next;
        fl[v] = next++;
      }
      auto j = detail::join_labelings(fg, fl, eg, empty_labels, friendship_low);
      auto p = weigh(j.graph, Labeling(j.labels));
      if (!p.valid() || static_cast<int>(p.distinct_count) != 2 * n + 2) continue;
      std::string prov = std::string("friendship-join-empty: ") +
                         (friendship_low ? "F_n on labels 1..2n+1" : "the empty side on labels 1..m") + ", centre label " +
                         std::to_string(centre);
      return certify(std::move(j.graph), std::move(j.labels), prov, ColorClaim{2 * n + 2, true});
    }
  }
  throw HypothesisError("friendship join: no candidate labeling separates the sides");
}

Certificate label_friendship_join_bistar(int n) {
  require(n >= 2, "friendship-bistar join needs n >= 2");
  Graph fg = friendship_graph(n);
  Graph bg = bistar_graph(n, n);
  if (bg.max_degree() > fg.order()) throw HypothesisError("friendship-bistar join: max degree of B exceeds |F|");
  auto c = label_join(fg, Labeling::identity(fg.order()), bg, Labeling(bistar_labels(n, n)));
  if (static_cast<int>(c.colors()) != 2 * n + 5) throw SelfCheckError("friendship-bistar join: unexpected colour count");
  c.claim = ColorClaim{2 * n + 5, true};
  c.provenance = "friendship-join-bistar: join with F_n on labels 1..2n+1";
  return c;
}

Certificate label_complete_lexi(int m, const Graph& h, const Labeling& f) {
  const int n = h.order();
  require(m >= 1, "complete-lexi needs m >= 1");
  require(n > 1, "complete-lexi needs |H| > 1");
  if (!h.is_regular()) throw HypothesisError("complete-lexi: H is not regular");
  if (static_cast<int>(f.size()) != n) throw LabelingError("labeling size does not match H");
  auto pf = weigh(h, f);
  if (!pf.valid()) throw HypothesisError("complete-lexi: labeling of H is not local distance antimagic");
  const int r = h.max_degree();
  const Weight step = static_cast<Weight>(n) * (n - r);
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      for (Vertex i = 0; i < n; ++i)
        for (Vertex k = 0; k < n; ++k)
          if (pf.weights[i] - pf.weights[k] == (a - b) * step)
            throw HypothesisError("complete-lexi: copies " + std::to_string(a + 1) + " and " + std::to_string(b + 1) +
                                  " collide at slots " + std::to_string(i) + ", " + std::to_string(k));
  std::vector<Label> labels(static_cast<std::size_t>(m) * n);
  for (int j = 0; j < m; ++j)
    for (Vertex i = 0; i < n; ++i) labels[static_cast<std::size_t>(j) * n + i] = f[i] + j * n;
  ColorClaim claim = h.size() == 0 ? ColorClaim{m, true} : ColorClaim{m * static_cast<int>(pf.distinct_count), false};
  auto c = certify(lexicographic(complete_graph(m), h), std::move(labels), "complete-lexi: copy j shifted by (j-1)n",
                   claim);
  for (int j = 0; j < m; ++j)
    for (Vertex i = 0; i < n; ++i)
      expect_weight(c, j * n + i, complete_lexi_weight(n, m, r, pf.weights[i], j + 1), "complete-lexi");
  return c;
}

// ---- request dispatch ----

namespace {

using Params = std::map<std::string, std::string>;

const std::string& param(const Params& p, const std::string& key) {
  auto it = p.find(key);
  if (it == p.end()) throw ParameterError("missing parameter '" + key + "'");
  return it->second;
}

int int_param(const Params& p, const std::string& key) {
  const auto& s = param(p, key);
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::logic_error&) {
    throw ParameterError("parameter '" + key + "' is not an integer: '" + s + "'");
  }
}

std::vector<int> int_list_param(const Params& p, const std::string& key) {
  std::vector<int> out;
  std::stringstream ss(param(p, key));
  std::string piece;
  while (std::getline(ss, piece, ',')) {
    Params one{{key, piece}};
    out.push_back(int_param(one, key));
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParameterError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Graph graph_param(const Params& p, const std::string& key) {
  const auto& s = param(p, key);
  if (std::filesystem::is_regular_file(s)) return parse_graph(read_file(s));
  return build_graph_expression(std::string_view(s));
}

Labeling labeling_param(const Params& p, const std::string& key, const Graph& g, const SearchBudget& budget) {
  auto it = p.find(key);
  if (it != p.end()) return parse_labeling(read_file(it->second), g.order());
  if (g.size() == 0) return Labeling::identity(g.order());
  auto r = chi_ld_exact(g, budget);
  if (!r.witness) throw CapExceededError("no ingredient labeling given and the oracle found none");
  return *r.witness;
}

}  // namespace

std::vector<std::string> construction_ids() {
  return {"clique-plus-empty", "multipartite",   "join",       "friendship",        "bistar",
          "friendship-join-empty", "friendship-join-bistar", "lexi-lift", "regular-bipartite", "biregular",
          "path",              "cycle",           "tripartite", "complete-lexi",     "lexi-join"};
}

Certificate construct(const ConstructionRequest& req, const SearchBudget& budget) {
  const auto& t = req.theorem;
  const auto& p = req.params;
  if (t == "clique-plus-empty") return label_clique_plus_empty(int_param(p, "n"), int_param(p, "p"));
  if (t == "multipartite") {
    auto sizes = int_list_param(p, "sizes");
    return label_multipartite_solution2(int_param(p, "n"), int_param(p, "p"), sizes, budget);
  }
  if (t == "join") {
    Graph g = graph_param(p, "g");
    Graph h = graph_param(p, "h");
    return label_join(g, labeling_param(p, "gf", g, budget), h, labeling_param(p, "hf", h, budget));
  }
  if (t == "friendship") return label_friendship(int_param(p, "n"));
  if (t == "bistar") return label_bistar(int_param(p, "m"), int_param(p, "n"));
  if (t == "friendship-join-empty") return label_friendship_join_empty(int_param(p, "n"), int_param(p, "m"));
  if (t == "friendship-join-bistar") return label_friendship_join_bistar(int_param(p, "n"));
  if (t == "lexi-lift") {
    Graph g = graph_param(p, "g");
    return label_lexi_lift(g, labeling_param(p, "f", g, budget), int_param(p, "n"));
  }
  if (t == "regular-bipartite") return label_regular_bipartite_lexi(graph_param(p, "g"), int_param(p, "n"));
  if (t == "biregular") return label_biregular_bipartite_lexi(graph_param(p, "g"), int_param(p, "n"));
  if (t == "path") return label_path_lexi(int_param(p, "m"), int_param(p, "n"));
  if (t == "cycle") return label_cycle_lexi(int_param(p, "m"), int_param(p, "n"), budget);
  if (t == "tripartite") {
    Graph g = graph_param(p, "g");
    int n = int_param(p, "n");
    std::vector<int> classes = p.count("classes") ? int_list_param(p, "classes") : find_split_3_coloring(g, n);
    if (classes.empty()) throw HypothesisError("tripartite: no colouring with the required neighbourhood split");
    return label_2r_regular_3chromatic_lexi(g, classes, n);
  }
  if (t == "complete-lexi") {
    Graph h = graph_param(p, "h");
    return label_complete_lexi(int_param(p, "m"), h, labeling_param(p, "f", h, budget));
  }
  if (t == "lexi-join") return label_lexi_join_plus_one(graph_param(p, "g"), int_param(p, "n"));
  throw ParameterError("unknown construction '" + t + "'");
}

}  // namespace ldal
