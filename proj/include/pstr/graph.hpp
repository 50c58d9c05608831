#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pstr {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Raised for structurally invalid graphs and unparsable input.
class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/**
 * Immutable simple undirected graph on the vertices 0..n-1.
 *
 * Each row of the adjacency structure is a sorted, duplicate-free list of
 * neighbour ids. Construction validates symmetry, loop-freeness and ranges,
 * so every Graph value in the program satisfies those invariants.
 */
class Graph {
 public:
  Graph() = default;

  /// Edgeless graph on n vertices.
  explicit Graph(int n);

  /// Duplicate edges (in either orientation) collapse to one; a self-loop or
  /// an out-of-range endpoint throws GraphError.
  static Graph from_edges(int n, std::span<const Edge> edges);

  int order() const { return static_cast<int>(adjacency_.size()); }
  int size() const { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  int degree(Vertex v) const { return static_cast<int>(adjacency_.at(v).size()); }
  bool adjacent(Vertex u, Vertex v) const;

  int max_degree() const;
  int min_degree() const;

  /// Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  int edge_count_ = 0;
};

/// G v H: disjoint union with every a-vertex joined to every b-vertex.
/// Vertices of `b` are renumbered to follow those of `a`.
Graph join(const Graph& a, const Graph& b);

/// Disjoint union, `b` renumbered after `a`.
Graph disjoint_union(const Graph& a, const Graph& b);

/// Subgraph induced by `keep` (renumbered in the given order).
Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep);

}  // namespace pstr
