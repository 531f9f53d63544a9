#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ldal {

using Vertex = int;
using Label = int;
using Weight = std::int64_t;

/// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  auto operator<=>(const Edge&) const = default;
};

/// Family-role metadata carried by each vertex of a constructed graph.
///
/// Product vertices record the copy (base vertex) and slot (fibre vertex);
/// bipartite and multipartite families record their part index explicitly.
/// A value of -1 means "not applicable".
struct VertexTag {
  std::string role;
  int part = -1;
  int copy = -1;
  int slot = -1;

  bool operator==(const VertexTag&) const = default;
};

/// Simple undirected graph on vertices 0..order-1.
///
/// Immutable once built; the operators below return new graphs.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an edge list in any order or orientation.
  /// Throws GraphError on loops, duplicates or out-of-range endpoints.
  Graph(int order, std::vector<Edge> edges, std::vector<VertexTag> tags = {});

  int order() const noexcept { return order_; }
  std::size_t size() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return order_ == 0; }

  /// Edges in canonical (sorted, u < v) order.
  std::span<const Edge> edges() const noexcept { return edges_; }
  /// Sorted neighbour list.
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  int degree(Vertex v) const { return static_cast<int>(adjacency_.at(v).size()); }
  bool adjacent(Vertex u, Vertex v) const;

  int max_degree() const noexcept;
  int min_degree() const noexcept;
  bool is_regular() const noexcept;
  bool has_isolated_vertex() const noexcept;

  bool has_tags() const noexcept { return !tags_.empty(); }
  std::span<const VertexTag> tags() const noexcept { return tags_; }
  const VertexTag& tag(Vertex v) const { return tags_.at(v); }
  /// Copy of this graph with tags replaced (size must equal order or be zero).
  Graph with_tags(std::vector<VertexTag> tags) const;

  /// Structural equality: same order and edge set. Tags are ignored.
  bool operator==(const Graph& other) const noexcept {
    return order_ == other.order_ && edges_ == other.edges_;
  }

 private:
  int order_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<VertexTag> tags_;
};

/// G + H: disjoint union plus every cross pair. G's vertices keep indices
/// 0..|G|-1, H's vertex x becomes |G|+x. Tags are carried over.
Graph join(const Graph& g, const Graph& h);

/// Lexicographic product G[H]. Vertex (copy j, slot i) has index j*|H|+i,
/// where j is a vertex of G and i a vertex of H. Tags record copy/slot and
/// inherit the role and part of the base vertex.
Graph lexicographic(const Graph& g, const Graph& h);

/// Graph induced on all vertices except `removed`; remaining vertices are
/// renumbered in increasing order.
Graph remove_vertex(const Graph& g, Vertex removed);

bool is_connected(const Graph& g);

/// Proper 2-colouring (0/1 per vertex) if the graph is bipartite. Part tags
/// are used when they already form a proper 2-colouring; otherwise a BFS
/// colouring starting each component at its lowest vertex with colour 0.
std::vector<int> bipartition(const Graph& g);
bool is_bipartite(const Graph& g);

/// Vertex sequence v_1..v_m if g is a path, starting at the lower-indexed end.
std::vector<Vertex> path_order(const Graph& g);
/// Vertex sequence v_1..v_m if g is a cycle, starting at vertex 0 and
/// stepping to its lower-indexed neighbour.
std::vector<Vertex> cycle_order(const Graph& g);

}  // namespace ldal
