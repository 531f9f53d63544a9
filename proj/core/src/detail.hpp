#pragma once

#include <string>
#include <vector>

#include "ldal/certificate.hpp"
#include "ldal/rectangles.hpp"

namespace ldal::detail {

/// Builds the certificate and runs the self-check shared by every labeler.
Certificate certify(Graph g, std::vector<Label> labels, std::string provenance, ColorClaim claim);

/// join(first, second) with one side on labels 1..|side| and the other
/// shifted above it.
struct Joined {
  Graph graph;
  std::vector<Label> labels;
};
Joined join_labelings(const Graph& first, std::span<const Label> f, const Graph& second, std::span<const Label> g,
                      bool first_low);

/// Writes column `col` (1-based) of `r`, plus `shift`, into copy `copy`
/// (1-based) of a G[K̄n] labeling.
void place(std::vector<Label>& labels, int n, int copy, const RectangularArray& r, int col, Weight shift = 0);

}  // namespace ldal::detail
