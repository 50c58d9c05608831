#include "pstr/metrics.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace pstr {

std::optional<int> girth(const Graph& g) {
  const int n = g.order();
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(static_cast<std::size_t>(n));
  std::vector<int> parent(static_cast<std::size_t>(n));
  for (Vertex root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[root] = 0;
    parent[root] = -1;
    std::queue<Vertex> queue;
    queue.push(root);
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop();
      // Cycles closed from this layer on are at least 2*dist[u] long.
      if (2 * dist[u] >= best) break;
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push(w);
        } else if (w != parent[u]) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

std::vector<std::vector<Vertex>> components(const Graph& g) {
  const int n = g.order();
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<Vertex> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      out.back().push_back(u);
      for (Vertex w : g.neighbors(u)) {
        if (comp[w] < 0) {
          comp[w] = id;
          stack.push_back(w);
        }
      }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

bool is_bipartite(const Graph& g) {
  const int n = g.order();
  std::vector<int> colour(static_cast<std::size_t>(n), -1);
  for (Vertex s = 0; s < n; ++s) {
    if (colour[s] >= 0) continue;
    colour[s] = 0;
    std::queue<Vertex> queue;
    queue.push(s);
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop();
      for (Vertex w : g.neighbors(u)) {
        if (colour[w] < 0) {
          colour[w] = 1 - colour[u];
          queue.push(w);
        } else if (colour[w] == colour[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::vector<Vertex> mcs_elimination_order(const Graph& g) {
  const int n = g.order();
  std::vector<int> weight(static_cast<std::size_t>(n), 0);
  std::vector<bool> numbered(static_cast<std::size_t>(n), false);
  std::vector<Vertex> visit;
  visit.reserve(static_cast<std::size_t>(n));
  for (int step = 0; step < n; ++step) {
    Vertex pick = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (!numbered[v] && (pick < 0 || weight[v] > weight[pick])) pick = v;
    }
    numbered[pick] = true;
    visit.push_back(pick);
    for (Vertex w : g.neighbors(pick)) {
      if (!numbered[w]) ++weight[w];
    }
  }
  std::reverse(visit.begin(), visit.end());
  return visit;
}

bool is_perfect_elimination_order(const Graph& g, const std::vector<Vertex>& order) {
  const int n = g.order();
  if (static_cast<int>(order.size()) != n) return false;
  std::vector<int> pos(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  for (Vertex v : order) {
    // Later neighbours of v must form a clique; it suffices that they all
    // neighbour the earliest of them.
    Vertex first_later = -1;
    for (Vertex w : g.neighbors(v)) {
      if (pos[w] > pos[v] && (first_later < 0 || pos[w] < pos[first_later])) first_later = w;
    }
    if (first_later < 0) continue;
    for (Vertex w : g.neighbors(v)) {
      if (pos[w] > pos[v] && w != first_later && !g.adjacent(first_later, w)) return false;
    }
  }
  return true;
}

bool is_chordal(const Graph& g) { return is_perfect_elimination_order(g, mcs_elimination_order(g)); }

GraphMetrics metrics(const Graph& g) {
  GraphMetrics m;
  m.n = g.order();
  m.m = g.size();
  m.max_degree = g.max_degree();
  m.min_degree = g.min_degree();
  m.girth = girth(g);
  m.connected = is_connected(g);
  m.bipartite = is_bipartite(g);
  m.chordal = is_chordal(g);
  if (m.n > 0 && m.min_degree == m.max_degree) m.regular_degree = m.max_degree;
  return m;
}

}  // namespace pstr
