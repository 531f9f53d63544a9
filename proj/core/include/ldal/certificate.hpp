#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "ldal/graph.hpp"
#include "ldal/labeling.hpp"

namespace ldal {

/// What a construction promises about its colour count.
struct ColorClaim {
  int colors = 0;
  bool exact = true;  // false: "at most"

  bool holds(std::size_t actual) const noexcept {
    return exact ? static_cast<int>(actual) == colors : static_cast<int>(actual) <= colors;
  }
};

/// Graph, labeling and their weight profile, bundled for external audit.
struct Certificate {
  Graph graph;
  Labeling labeling;
  WeightProfile profile;
  std::optional<ColorClaim> claim;
  std::string provenance;

  bool valid() const noexcept { return profile.valid(); }
  std::size_t colors() const noexcept { return profile.distinct_count; }
};

/// Computes the profile from scratch.
Certificate make_certificate(Graph g, Labeling f, std::string provenance = {},
                             std::optional<ColorClaim> claim = std::nullopt);

/// JSON with keys in the fixed order graph, labeling, weights, conflicts,
/// valid, colors, claim (when present), provenance. The graph is embedded as
/// its canonical edge-list text.
std::string to_json(const Certificate& c, int indent = 2);
std::string to_text(const Certificate& c);

/// Parses JSON produced by to_json and re-verifies it: the recomputed
/// profile must reproduce the embedded weights, validity and colour count.
/// Throws ParseError on malformed input and SelfCheckError on any mismatch.
Certificate certificate_from_json(std::string_view text);

}  // namespace ldal
