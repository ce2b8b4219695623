#pragma once

// Simple undirected graphs and the constructions used to realize the
// catalogued groups as graph automorphism groups.

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace baseset {

struct Graph {
  int vertex_count = 0;
  std::set<std::pair<int, int>> edges;  // normalized to u < v

  Graph() = default;
  explicit Graph(int n) : vertex_count(n) {
    if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
  }

  void add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("Graph: loop edge");
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
      throw std::invalid_argument("Graph: endpoint out of range");
    edges.emplace(std::min(u, v), std::max(u, v));
  }

  bool has_edge(int u, int v) const {
    return edges.count({std::min(u, v), std::max(u, v)}) > 0;
  }

  std::vector<std::vector<int>> adjacency() const {
    std::vector<std::vector<int>> adj(vertex_count);
    for (const auto& [u, v] : edges) {
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
    for (auto& row : adj) std::sort(row.begin(), row.end());
    return adj;
  }

  friend bool operator==(const Graph&, const Graph&) = default;
};

inline Graph cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle: n must be >= 3");
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

inline Graph path(int n) {
  if (n < 1) throw std::invalid_argument("path: n must be >= 1");
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

inline Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

/// b's vertices are shifted by a.vertex_count.
inline Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.vertex_count + b.vertex_count);
  g.edges = a.edges;
  for (const auto& [u, v] : b.edges)
    g.add_edge(u + a.vertex_count, v + a.vertex_count);
  return g;
}

/// A center with pendant paths of the given lengths; asymmetric (trivial
/// automorphism group) whenever the lengths are distinct and >= 1.
inline Graph spider(const std::vector<int>& leg_lengths) {
  int total = 1;
  for (int len : leg_lengths) {
    if (len < 1) throw std::invalid_argument("spider: leg length must be >= 1");
    total += len;
  }
  Graph g(total);
  int next = 1;
  for (int len : leg_lengths) {
    int prev = 0;
    for (int i = 0; i < len; ++i) {
      g.add_edge(prev, next);
      prev = next++;
    }
  }
  return g;
}

/// 3n-vertex realization of the order-2n dihedral group with a regular
/// vertex orbit (hence determining number 1): a 2n-cycle with an apex vertex
/// over every other cycle edge. The apexes mark alternate edges, leaving
/// exactly the n even rotations and the n reflections through edge midpoints.
inline Graph triangle_marked_cycle(int n) {
  if (n < 3) throw std::invalid_argument("triangle_marked_cycle: n must be >= 3");
  Graph g(3 * n);
  int m = 2 * n;
  for (int i = 0; i < m; ++i) g.add_edge(i, (i + 1) % m);
  for (int k = 0; k < n; ++k) {
    int apex = m + k;
    g.add_edge(2 * k + 1, apex);
    g.add_edge((2 * k + 2) % m, apex);
  }
  return g;
}

/// 4n-vertex realization of the order-2n dihedral group with a regular
/// vertex orbit: a 3n-ring with period [b, b, x] where every x carries a
/// pendant leaf. The marked x positions reduce the ring symmetries to the n
/// rotations by 3 and the n reflections aligning marks with marks.
inline Graph pendant_marked_cycle(int n) {
  if (n < 3) throw std::invalid_argument("pendant_marked_cycle: n must be >= 3");
  Graph g(4 * n);
  int ring = 3 * n;
  for (int i = 0; i < ring; ++i) g.add_edge(i, (i + 1) % ring);
  for (int k = 0; k < n; ++k) g.add_edge(3 * k + 2, ring + k);
  return g;
}

}  // namespace baseset
