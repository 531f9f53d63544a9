#pragma once

#include <vector>

#include "ldal/graph.hpp"

namespace ldal {

/// |N(u) symmetric-difference N(v)|.
int symdiff_size(const Graph& g, Vertex u, Vertex v);

/// True iff |N(u) △ N(v)| is 1 or 2. Such a pair gets distinct weights under
/// every bijection, valid or not. Throws ParameterError when u == v.
bool symdiff_rule(const Graph& g, Vertex u, Vertex v);

/// All unordered pairs u < v with symdiff_rule true, sorted.
std::vector<Edge> symdiff_pairs(const Graph& g);

/// G with every symdiff pair added as an edge. Any bijection colours this
/// graph properly once G's edges are satisfied, so its chromatic number is
/// a lower bound for the number of weights.
Graph forced_distinct_graph(const Graph& g);

bool is_tree(const Graph& g);

/// t + 1 where t is the number of distinct support vertices of the tree.
/// Throws ParameterError if T is not a tree or has order < 3.
int tree_leaf_lower_bound(const Graph& t);

/// Size of a greedily grown clique; at most chi(G).
int clique_lower_bound(const Graph& g);

/// Vertices x, y on the same side of a connected bipartite graph with
/// N(x) a proper subset of N(y). Returns {x, y} or an empty vector.
std::vector<Vertex> nested_pair(const Graph& g);

/// Lower bound for chi_ld(G[K̄n]):
///  - 3 when G is connected bipartite with a nested same-side pair;
///  - 4 when G has a dominating vertex v and G - v is such a graph;
///  - otherwise (and never less than) chi(G).
/// Throws ParameterError when n < 2.
int nested_neighborhood_bound(const Graph& g, int n);

}  // namespace ldal
