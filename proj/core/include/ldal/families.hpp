#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ldal/graph.hpp"

namespace ldal {

enum class Family {
  Path,                  // P_n, n >= 1
  Cycle,                 // C_n, n >= 3
  Complete,              // K_n, n >= 1
  Empty,                 // complement of K_n, n >= 1
  CompleteBipartite,     // K_{a,b}, a, b >= 1
  CompleteMultipartite,  // K_{n1,...,nr}, r >= 1, every ni >= 1
  Star,                  // K_{1,k}, k >= 1
  Bistar,                // B_{m,n}, m, n >= 2
  Friendship,            // F_n, n >= 1
  Wheel,                 // W_m = C_m + K_1, m >= 3
  Fan,                   // T_m = P_m + K_1, m >= 1
  Matching,              // mK_2, m >= 1
};

struct FamilySpec {
  Family family;
  std::vector<int> params;
};

/// Canonical member of a named family, with vertex tags.
///
/// Vertex numbering:
///  - path/cycle: 0..n-1 along the path or cycle;
///  - friendship: centre 0, then u_i = 2i-1, v_i = 2i;
///  - bistar: centres a=0, b=1, a's leaves 2..m+1, b's leaves m+2..m+n+1;
///  - star: centre 0, leaves 1..k;
///  - wheel/fan: rim 0..m-1, centre m (so W_m == join(C_m, K_1));
///  - multipartite: parts laid out consecutively.
/// Throws ParameterError when a parameter is below the family minimum.
Graph gen_family(const FamilySpec& spec);

/// Expected (order, edge count) from closed formulas, independent of gen_family.
std::pair<int, long long> family_counts(const FamilySpec& spec);

std::string family_name(Family f);

/// Parses a graph expression made of family tokens and the binary operators
/// `join` and `lexi`, e.g. {"lexi", "cycle", "5", "empty", "3"}.
/// Multipartite part sizes are one comma-separated token: "multipartite 2,2,2".
/// `bipartite a b` is K_{a,b}.
Graph build_graph_expression(std::span<const std::string> tokens);
/// Whitespace-separated convenience overload.
Graph build_graph_expression(std::string_view text);

// Shorthands used throughout the library and tests.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph empty_graph(int n);
Graph complete_bipartite(int a, int b);
Graph complete_multipartite(std::span<const int> sizes);
Graph star_graph(int leaves);
Graph bistar_graph(int m, int n);
Graph friendship_graph(int n);
Graph wheel_graph(int m);
Graph fan_graph(int m);
Graph matching_graph(int m);

}  // namespace ldal
