#include "ldal/families.hpp"

#include <charconv>
#include <numeric>
#include <sstream>

#include "ldal/error.hpp"

namespace ldal {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw ParameterError(what);
}

std::size_t arity(Family f) {
  switch (f) {
    case Family::Bistar:
    case Family::CompleteBipartite:
      return 2;
    case Family::CompleteMultipartite:
      return 0;  // variable
    default:
      return 1;
  }
}

VertexTag tagged(std::string role, int part = -1) { return VertexTag{std::move(role), part, -1, -1}; }

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::Path: return "path";
    case Family::Cycle: return "cycle";
    case Family::Complete: return "complete";
    case Family::Empty: return "empty";
    case Family::CompleteBipartite: return "bipartite";
    case Family::CompleteMultipartite: return "multipartite";
    case Family::Star: return "star";
    case Family::Bistar: return "bistar";
    case Family::Friendship: return "friendship";
    case Family::Wheel: return "wheel";
    case Family::Fan: return "fan";
    case Family::Matching: return "matching";
  }
  return "?";
}

Graph path_graph(int n) {
  require(n >= 1, "path needs n >= 1");
  std::vector<Edge> edges;
  std::vector<VertexTag> tags;
  for (int i = 0; i < n; ++i) tags.push_back(tagged("path", i % 2));
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, std::move(edges), std::move(tags));
}

Graph cycle_graph(int n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> edges;
  std::vector<VertexTag> tags;
  for (int i = 0; i < n; ++i) {
    tags.push_back(tagged("cycle", n % 2 == 0 ? i % 2 : -1));
    edges.push_back({i, (i + 1) % n});
  }
  return Graph(n, std::move(edges), std::move(tags));
}

Graph complete_graph(int n) {
  require(n >= 1, "complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
  std::vector<VertexTag> tags(n, tagged("clique"));
  for (int i = 0; i < n; ++i) tags[i].part = i;
  return Graph(n, std::move(edges), std::move(tags));
}

Graph empty_graph(int n) {
  require(n >= 1, "empty graph needs n >= 1");
  return Graph(n, {}, std::vector<VertexTag>(n, tagged("independent", 0)));
}

Graph complete_multipartite(std::span<const int> sizes) {
  require(!sizes.empty(), "multipartite graph needs at least one part");
  std::vector<int> part_of;
  for (std::size_t p = 0; p < sizes.size(); ++p) {
    require(sizes[p] >= 1, "multipartite part sizes must be >= 1");
    part_of.insert(part_of.end(), sizes[p], static_cast<int>(p));
  }
  const int n = static_cast<int>(part_of.size());
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (part_of[i] != part_of[j]) edges.push_back({i, j});
  std::vector<VertexTag> tags;
  for (int i = 0; i < n; ++i) tags.push_back(tagged("part", part_of[i]));
  return Graph(n, std::move(edges), std::move(tags));
}

Graph complete_bipartite(int a, int b) {
  require(a >= 1 && b >= 1, "complete bipartite needs a, b >= 1");
  const int sizes[] = {a, b};
  return complete_multipartite(sizes);
}

Graph star_graph(int leaves) {
  require(leaves >= 1, "star needs at least one leaf");
  std::vector<Edge> edges;
  std::vector<VertexTag> tags{tagged("center", 0)};
  for (int i = 1; i <= leaves; ++i) {
    edges.push_back({0, i});
    tags.push_back(tagged("leaf", 1));
  }
  return Graph(leaves + 1, std::move(edges), std::move(tags));
}

Graph bistar_graph(int m, int n) {
  require(m >= 2 && n >= 2, "bistar needs m, n >= 2");
  std::vector<Edge> edges{{0, 1}};
  std::vector<VertexTag> tags{tagged("center-a", 0), tagged("center-b", 1)};
  for (int i = 0; i < m; ++i) {
    edges.push_back({0, 2 + i});
    tags.push_back(tagged("leaf-a", 1));
  }
  for (int i = 0; i < n; ++i) {
    edges.push_back({1, 2 + m + i});
    tags.push_back(tagged("leaf-b", 0));
  }
  return Graph(m + n + 2, std::move(edges), std::move(tags));
}

Graph friendship_graph(int n) {
  require(n >= 1, "friendship graph needs n >= 1");
  std::vector<Edge> edges;
  std::vector<VertexTag> tags{tagged("center")};
  for (int i = 1; i <= n; ++i) {
    edges.push_back({0, 2 * i - 1});
    edges.push_back({0, 2 * i});
    edges.push_back({2 * i - 1, 2 * i});
    tags.push_back(tagged("u"));
    tags.push_back(tagged("v"));
  }
  return Graph(2 * n + 1, std::move(edges), std::move(tags));
}

Graph wheel_graph(int m) {
  require(m >= 3, "wheel needs m >= 3");
  std::vector<Edge> edges;
  std::vector<VertexTag> tags;
  for (int i = 0; i < m; ++i) {
    edges.push_back({i, (i + 1) % m});
    edges.push_back({i, m});
    tags.push_back(tagged("rim"));
  }
  tags.push_back(tagged("center"));
  return Graph(m + 1, std::move(edges), std::move(tags));
}

Graph fan_graph(int m) {
  require(m >= 1, "fan needs m >= 1");
  std::vector<Edge> edges;
  std::vector<VertexTag> tags;
  for (int i = 0; i < m; ++i) {
    if (i + 1 < m) edges.push_back({i, i + 1});
    edges.push_back({i, m});
    tags.push_back(tagged("path"));
  }
  tags.push_back(tagged("center"));
  return Graph(m + 1, std::move(edges), std::move(tags));
}

Graph matching_graph(int m) {
  require(m >= 1, "matching needs m >= 1");
  std::vector<Edge> edges;
  std::vector<VertexTag> tags;
  for (int i = 0; i < m; ++i) {
    edges.push_back({2 * i, 2 * i + 1});
    tags.push_back(tagged("matched", 0));
    tags.push_back(tagged("matched", 1));
  }
  return Graph(2 * m, std::move(edges), std::move(tags));
}

Graph gen_family(const FamilySpec& spec) {
  const auto& p = spec.params;
  const std::size_t want = arity(spec.family);
  if (want != 0 && p.size() != want)
    throw ParameterError(family_name(spec.family) + " takes " + std::to_string(want) + " parameter(s)");
  switch (spec.family) {
    case Family::Path: return path_graph(p[0]);
    case Family::Cycle: return cycle_graph(p[0]);
    case Family::Complete: return complete_graph(p[0]);
    case Family::Empty: return empty_graph(p[0]);
    case Family::CompleteBipartite: return complete_bipartite(p[0], p[1]);
    case Family::CompleteMultipartite: return complete_multipartite(p);
    case Family::Star: return star_graph(p[0]);
    case Family::Bistar: return bistar_graph(p[0], p[1]);
    case Family::Friendship: return friendship_graph(p[0]);
    case Family::Wheel: return wheel_graph(p[0]);
    case Family::Fan: return fan_graph(p[0]);
    case Family::Matching: return matching_graph(p[0]);
  }
  throw ParameterError("unknown family");
}

std::pair<int, long long> family_counts(const FamilySpec& spec) {
  const auto& p = spec.params;
  auto c2 = [](long long x) { return x * (x - 1) / 2; };
  switch (spec.family) {
    case Family::Path: return {p[0], p[0] - 1};
    case Family::Cycle: return {p[0], p[0]};
    case Family::Complete: return {p[0], c2(p[0])};
    case Family::Empty: return {p[0], 0};
    case Family::CompleteBipartite: return {p[0] + p[1], 1LL * p[0] * p[1]};
    case Family::CompleteMultipartite: {
      long long total = std::accumulate(p.begin(), p.end(), 0LL);
      long long within = 0;
      for (int s : p) within += c2(s);
      return {static_cast<int>(total), c2(total) - within};
    }
    case Family::Star: return {p[0] + 1, p[0]};
    case Family::Bistar: return {p[0] + p[1] + 2, p[0] + p[1] + 1};
    case Family::Friendship: return {2 * p[0] + 1, 3LL * p[0]};
    case Family::Wheel: return {p[0] + 1, 2LL * p[0]};
    case Family::Fan: return {p[0] + 1, 2LL * p[0] - 1};
    case Family::Matching: return {2 * p[0], p[0]};
  }
  return {0, 0};
}

namespace {

int parse_int(const std::string& token) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size())
    throw ParameterError("expected an integer, got '" + token + "'");
  return value;
}

std::vector<int> parse_int_list(const std::string& token) {
  std::vector<int> out;
  std::stringstream ss(token);
  std::string piece;
  while (std::getline(ss, piece, ',')) out.push_back(parse_int(piece));
  return out;
}

bool lookup_family(const std::string& name, Family& out) {
  static const std::pair<const char*, Family> table[] = {
      {"path", Family::Path},
      {"cycle", Family::Cycle},
      {"complete", Family::Complete},
      {"empty", Family::Empty},
      {"bipartite", Family::CompleteBipartite},
      {"multipartite", Family::CompleteMultipartite},
      {"star", Family::Star},
      {"bistar", Family::Bistar},
      {"friendship", Family::Friendship},
      {"wheel", Family::Wheel},
      {"fan", Family::Fan},
      {"matching", Family::Matching},
  };
  for (const auto& [n, f] : table)
    if (name == n) {
      out = f;
      return true;
    }
  return false;
}

Graph parse_expression(std::span<const std::string> tokens, std::size_t& pos) {
  if (pos >= tokens.size()) throw ParameterError("graph expression ended early");
  const std::string& head = tokens[pos++];
  if (head == "join" || head == "lexi") {
    Graph left = parse_expression(tokens, pos);
    Graph right = parse_expression(tokens, pos);
    return head == "join" ? join(left, right) : lexicographic(left, right);
  }
  Family family;
  if (!lookup_family(head, family)) throw ParameterError("unknown graph family '" + head + "'");
  FamilySpec spec{family, {}};
  if (family == Family::CompleteMultipartite) {
    if (pos >= tokens.size()) throw ParameterError("multipartite needs part sizes");
    spec.params = parse_int_list(tokens[pos++]);
  } else {
    for (std::size_t k = 0; k < arity(family); ++k) {
      if (pos >= tokens.size()) throw ParameterError(head + " needs " + std::to_string(arity(family)) + " parameter(s)");
      spec.params.push_back(parse_int(tokens[pos++]));
    }
  }
  return gen_family(spec);
}

}  // namespace

Graph build_graph_expression(std::span<const std::string> tokens) {
  std::size_t pos = 0;
  Graph g = parse_expression(tokens, pos);
  if (pos != tokens.size()) throw ParameterError("trailing tokens in graph expression");
  return g;
}

Graph build_graph_expression(std::string_view text) {
  std::vector<std::string> tokens;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return build_graph_expression(tokens);
}

}  // namespace ldal
