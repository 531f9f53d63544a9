#include "ldal/labeling.hpp"

#include <algorithm>
#include <sstream>

#include "ldal/error.hpp"

namespace ldal {

bool is_bijective(std::span<const Label> labels) {
  const std::size_t n = labels.size();
  std::vector<char> seen(n + 1, 0);
  for (Label x : labels) {
    if (x < 1 || static_cast<std::size_t>(x) > n || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

Labeling::Labeling(std::vector<Label> labels) : labels_(std::move(labels)) {
  if (!is_bijective(labels_))
    throw LabelingError("labels are not a bijection onto 1.." + std::to_string(labels_.size()));
}

Labeling Labeling::identity(int order) {
  std::vector<Label> labels(order);
  for (int v = 0; v < order; ++v) labels[v] = v + 1;
  return Labeling(std::move(labels));
}

std::size_t count_distinct(std::span<const Weight> weights) {
  std::vector<Weight> sorted(weights.begin(), weights.end());
  std::sort(sorted.begin(), sorted.end());
  return static_cast<std::size_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

WeightProfile weigh(const Graph& g, const Labeling& f) {
  if (static_cast<int>(f.size()) != g.order())
    throw LabelingError("labeling has " + std::to_string(f.size()) + " labels for a graph of order " +
                        std::to_string(g.order()));
  WeightProfile p;
  p.weights.assign(g.order(), 0);
  for (const auto& e : g.edges()) {
    p.weights[e.u] += f[e.v];
    p.weights[e.v] += f[e.u];
  }
  p.distinct_count = count_distinct(p.weights);
  for (const auto& e : g.edges())
    if (p.weights[e.u] == p.weights[e.v]) p.conflicts.push_back(e);
  return p;
}

Verdict is_ldal(const Graph& g, const Labeling& f) {
  auto p = weigh(g, f);
  return {p.valid(), p.distinct_count};
}

Labeling parse_labeling(std::string_view text, int order) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  std::vector<Label> labels(order, 0);
  std::vector<char> assigned(order, 0);
  int count = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos || line.front() == '#') continue;
    std::istringstream ls(line);
    long long v, x;
    std::string rest;
    if (!(ls >> v >> x) || (ls >> rest)) throw ParseError(lineno, "expected 'vertex label'");
    if (v < 0 || v >= order) throw ParseError(lineno, "vertex " + std::to_string(v) + " out of range");
    if (assigned[v]) throw ParseError(lineno, "vertex " + std::to_string(v) + " labeled twice");
    assigned[v] = 1;
    labels[v] = static_cast<Label>(x);
    ++count;
  }
  if (count != order)
    throw LabelingError("labeling covers " + std::to_string(count) + " of " + std::to_string(order) + " vertices");
  return Labeling(std::move(labels));
}

std::string serialize_labeling(const Labeling& f) {
  std::ostringstream out;
  for (std::size_t v = 0; v < f.size(); ++v) out << v << ' ' << f[static_cast<Vertex>(v)] << '\n';
  return out.str();
}

}  // namespace ldal
