#include "ldal/certificate.hpp"

#include <sstream>

#include <json.hpp>

#include "ldal/error.hpp"
#include "ldal/graph_io.hpp"

namespace ldal {

using ordered_json = nlohmann::ordered_json;

Certificate make_certificate(Graph g, Labeling f, std::string provenance, std::optional<ColorClaim> claim) {
  Certificate c;
  c.profile = weigh(g, f);
  c.graph = std::move(g);
  c.labeling = std::move(f);
  c.provenance = std::move(provenance);
  c.claim = claim;
  return c;
}

std::string to_json(const Certificate& c, int indent) {
  ordered_json j;
  j["graph"] = serialize_graph(c.graph);
  j["labeling"] = std::vector<Label>(c.labeling.labels().begin(), c.labeling.labels().end());
  j["weights"] = c.profile.weights;
  auto conflicts = ordered_json::array();
  for (const auto& e : c.profile.conflicts) conflicts.push_back({e.u, e.v});
  j["conflicts"] = conflicts;
  j["valid"] = c.valid();
  j["colors"] = c.colors();
  if (c.claim) j["claim"] = {{"colors", c.claim->colors}, {"exact", c.claim->exact}};
  j["provenance"] = c.provenance;
  return j.dump(indent) + "\n";
}

std::string to_text(const Certificate& c) {
  std::ostringstream out;
  out << "order " << c.graph.order() << "\n";
  out << "edges " << c.graph.size() << "\n";
  out << "labeling";
  for (Label x : c.labeling.labels()) out << ' ' << x;
  out << "\nweights";
  for (Weight w : c.profile.weights) out << ' ' << w;
  out << "\nconflicts";
  for (const auto& e : c.profile.conflicts) out << ' ' << e.u << '-' << e.v;
  out << "\nvalid " << (c.valid() ? "yes" : "no") << "\n";
  out << "colors " << c.colors() << "\n";
  if (c.claim) out << "claim " << (c.claim->exact ? "" : "<=") << c.claim->colors << "\n";
  if (!c.provenance.empty()) out << "provenance " << c.provenance << "\n";
  return out.str();
}

Certificate certificate_from_json(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(1, std::string("certificate is not valid JSON: ") + e.what());
  }
  Certificate c;
  try {
    Graph g = parse_graph(j.at("graph").get<std::string>());
    Labeling f(j.at("labeling").get<std::vector<Label>>());
    std::optional<ColorClaim> claim;
    if (j.contains("claim")) claim = ColorClaim{j["claim"].at("colors").get<int>(), j["claim"].at("exact").get<bool>()};
    c = make_certificate(std::move(g), std::move(f), j.value("provenance", std::string{}), claim);
    if (j.at("weights").get<std::vector<Weight>>() != c.profile.weights)
      throw SelfCheckError("embedded weights differ from recomputed weights");
    if (j.at("valid").get<bool>() != c.valid()) throw SelfCheckError("embedded verdict differs from recomputed verdict");
    if (j.at("colors").get<std::size_t>() != c.colors())
      throw SelfCheckError("embedded colour count differs from recomputed count");
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(1, std::string("malformed certificate: ") + e.what());
  }
  return c;
}

}  // namespace ldal
