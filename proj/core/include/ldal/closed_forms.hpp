#pragma once

#include <array>

#include "ldal/graph.hpp"

namespace ldal {

// Weight formulas promised by the constructions. All arguments are counts;
// results are exact.

/// K_{p-1} + K̄_{n-p+1}, clique labeled 1..p-1.
Weight clique_plus_empty_independent_weight(int p);
Weight clique_plus_empty_clique_weight(int n, int p, Label f);

/// Join with the low side (order a) labeled 1..a and the high side (order b)
/// labeled a+1..a+b. `w` is the vertex's weight inside its own ingredient.
Weight join_low_weight(Weight w, int a, int b);
Weight join_high_weight(Weight w, int degree, int a);

/// g(v_i^j) = i + (f(v_j) - 1) n on G[K̄n].
Weight lexi_lift_weight(int n, int degree, Weight wf);

/// Balanced r-regular bipartite G (s vertices per side) in G[K̄n]:
/// {first side, second side}.
std::array<Weight, 2> regular_bipartite_weights(int n, int s, int r);

/// K_{a,b}[K̄n] with the a-side labeled first: {a-side, b-side}.
std::array<Weight, 2> complete_bipartite_weights(int a, int b, int n);

/// Vertex of degree `degree` when the n x m equal-column-sum block covers G.
Weight biregular_weight(int n, int m, int degree);

/// Km[H], H r-regular of order n; j is the 1-based copy index.
Weight complete_lexi_weight(int n, int m, int r, Weight wf, int j);

/// 2r-regular G with colour classes of sizes k, s, t in G[K̄n].
std::array<Weight, 3> tripartite_weights(int n, int k, int s, int t, int r);

}  // namespace ldal
