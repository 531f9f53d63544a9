#include "ldal/graph_io.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <vector>

#include "ldal/error.hpp"

namespace ldal {

namespace {

bool blank(const std::string& line) { return line.find_first_not_of(" \t\r") == std::string::npos; }

// Reads exactly `count` integers from the line, rejecting trailing junk.
bool read_ints(const std::string& line, std::vector<long long>& out, std::size_t count) {
  std::istringstream in(line);
  out.clear();
  long long x;
  while (in >> x) out.push_back(x);
  if (!in.eof()) return false;
  return out.size() == count;
}

void parse_tag_line(const std::string& line, std::size_t lineno, int order, std::vector<VertexTag>& tags) {
  std::istringstream in(line.substr(4));
  long long v;
  std::string role;
  int part, copy, slot;
  if (!(in >> v >> role >> part >> copy >> slot)) throw ParseError(lineno, "malformed tag line");
  if (v < 0 || v >= order) throw ParseError(lineno, "tag vertex out of range");
  if (tags.empty()) tags.resize(order);
  tags[v] = VertexTag{role == "-" ? "" : role, part, copy, slot};
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  long long order = 0, declared = 0;
  std::vector<Edge> edges;
  std::set<std::pair<int, int>> seen;
  std::vector<VertexTag> tags;
  std::vector<long long> nums;

  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.rfind("#tag ", 0) == 0) {
      if (!have_header) throw ParseError(lineno, "tag line before header");
      parse_tag_line(line, lineno, static_cast<int>(order), tags);
      continue;
    }
    if (blank(line) || line.front() == '#') continue;
    if (!have_header) {
      if (!read_ints(line, nums, 2)) throw ParseError(lineno, "expected header 'order edge-count'");
      order = nums[0];
      declared = nums[1];
      if (order < 0 || declared < 0) throw ParseError(lineno, "negative order or edge count");
      have_header = true;
      continue;
    }
    if (!read_ints(line, nums, 2)) throw ParseError(lineno, "expected edge 'u v'");
    long long u = nums[0], v = nums[1];
    if (u < 0 || v < 0 || u >= order || v >= order)
      throw ParseError(lineno, "vertex index out of range for order " + std::to_string(order));
    if (u == v) throw ParseError(lineno, "loop at vertex " + std::to_string(u));
    std::pair<int, int> key{static_cast<int>(std::min(u, v)), static_cast<int>(std::max(u, v))};
    if (!seen.insert(key).second)
      throw ParseError(lineno, "duplicate edge " + std::to_string(key.first) + " " + std::to_string(key.second));
    edges.push_back({key.first, key.second});
  }
  if (!have_header) throw ParseError(lineno == 0 ? 1 : lineno, "missing header");
  if (static_cast<long long>(edges.size()) != declared)
    throw ParseError(lineno, "header declares " + std::to_string(declared) + " edges, found " +
                                 std::to_string(edges.size()));
  return Graph(static_cast<int>(order), std::move(edges), std::move(tags));
}

std::string serialize_graph(const Graph& g, bool with_tags) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  if (with_tags && g.has_tags()) {
    for (Vertex v = 0; v < g.order(); ++v) {
      const auto& t = g.tag(v);
      out << "#tag " << v << ' ' << (t.role.empty() ? "-" : t.role) << ' ' << t.part << ' ' << t.copy << ' '
          << t.slot << '\n';
    }
  }
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

}  // namespace ldal
