#pragma once

#include <string>
#include <string_view>

#include "ldal/graph.hpp"

namespace ldal {

/// Edge-list text format.
///
///   order edge-count
///   u v            (one line per edge, 0-based)
///
/// Lines starting with '#' are comments; blank lines are ignored. Vertex tags
/// may be carried in comment lines of the form
///   #tag <vertex> <role|-> <part> <copy> <slot>
/// which other readers skip as ordinary comments.
///
/// Throws ParseError (with the 1-based line number) on malformed lines,
/// out-of-range vertices, loops, duplicate edges, or an edge count mismatch.
Graph parse_graph(std::string_view text);

/// Canonical serialisation: header, then edges sorted ascending with u < v.
/// Tag comment lines are emitted only when `with_tags` is set.
std::string serialize_graph(const Graph& g, bool with_tags = false);

}  // namespace ldal
