#pragma once

#include <optional>
#include <vector>

#include "pstr/graph.hpp"

namespace pstr {

struct GraphMetrics {
  int n = 0;
  int m = 0;
  int max_degree = 0;
  int min_degree = 0;
  /// Length of a shortest cycle; nullopt for a forest.
  std::optional<int> girth;
  bool connected = true;
  bool bipartite = true;
  bool chordal = true;
  /// r when every vertex has degree r.
  std::optional<int> regular_degree;
};

GraphMetrics metrics(const Graph& g);

/// Shortest cycle length by a BFS from every vertex; nullopt when acyclic.
std::optional<int> girth(const Graph& g);

bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);

/// Maximum cardinality search order, reversed so that a chordal graph yields
/// a perfect elimination ordering.
std::vector<Vertex> mcs_elimination_order(const Graph& g);

/// True iff `order` is a perfect elimination ordering of g.
bool is_perfect_elimination_order(const Graph& g, const std::vector<Vertex>& order);

bool is_chordal(const Graph& g);

/// Connected components, each listed in ascending vertex order.
std::vector<std::vector<Vertex>> components(const Graph& g);

}  // namespace pstr
