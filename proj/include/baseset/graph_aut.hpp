#pragma once

// Graph automorphism groups by backtracking over an equitable-partition
// refinement: the initial invariant is vertex degree, cells are repeatedly
// split by the multiset of neighbor cell labels until stable, and branching
// individualizes one source vertex against every vertex of the matching
// target cell. Every candidate leaf mapping is certified edge-by-edge, so
// refinement only ever prunes.

#include <algorithm>
#include <map>
#include <vector>

#include "baseset/bases.hpp"
#include "baseset/errors.hpp"
#include "baseset/graphs.hpp"
#include "baseset/perm_group.hpp"

namespace baseset {

inline constexpr int kDefaultVertexBudget = 64;

namespace detail {

// An ordered partition; cells hold ascending vertex ids.
using Coloring = std::vector<std::vector<int>>;

inline Coloring degree_coloring(const std::vector<std::vector<int>>& adj) {
  std::map<int, std::vector<int>> by_degree;
  for (int v = 0; v < static_cast<int>(adj.size()); ++v)
    by_degree[static_cast<int>(adj[v].size())].push_back(v);
  Coloring cells;
  for (auto& [deg, vs] : by_degree) cells.push_back(std::move(vs));
  return cells;
}

/// Splits cells by the vector of neighbor counts per cell, iterated to a
/// fixpoint. The split order (by signature) is canonical, so two colorings
/// related by an automorphism refine to colorings related by the same
/// automorphism, cell for cell.
inline void refine(const std::vector<std::vector<int>>& adj, Coloring& cells) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> cell_of(n);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t c = 0; c < cells.size(); ++c)
      for (int v : cells[c]) cell_of[v] = static_cast<int>(c);
    Coloring next;
    next.reserve(cells.size());
    for (const auto& cell : cells) {
      if (cell.size() == 1) {
        next.push_back(cell);
        continue;
      }
      std::map<std::vector<int>, std::vector<int>> groups;
      for (int v : cell) {
        std::vector<int> sig(cells.size(), 0);
        for (int w : adj[v]) ++sig[cell_of[w]];
        groups[sig].push_back(v);
      }
      if (groups.size() > 1) changed = true;
      for (auto& [sig, vs] : groups) next.push_back(std::move(vs));
    }
    cells = std::move(next);
  }
}

inline Coloring individualize(const Coloring& cells, std::size_t cell_index,
                              int vertex) {
  Coloring out;
  out.reserve(cells.size() + 1);
  for (std::size_t c = 0; c < cells.size(); ++c) {
    if (c != cell_index) {
      out.push_back(cells[c]);
      continue;
    }
    out.push_back({vertex});
    std::vector<int> rest;
    for (int v : cells[c])
      if (v != vertex) rest.push_back(v);
    out.push_back(std::move(rest));
  }
  return out;
}

inline bool same_shape(const Coloring& a, const Coloring& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].size() != b[i].size()) return false;
  return true;
}

struct AutomorphismSearch {
  const Graph& graph;
  std::vector<std::vector<int>> adj;
  std::vector<Permutation> found;

  explicit AutomorphismSearch(const Graph& g) : graph(g), adj(g.adjacency()) {}

  void run() {
    Coloring start = degree_coloring(adj);
    refine(adj, start);
    descend(start, start);
    std::sort(found.begin(), found.end());
  }

  void descend(const Coloring& source, const Coloring& target) {
    std::size_t branch = source.size();
    for (std::size_t c = 0; c < source.size(); ++c)
      if (source[c].size() > 1) {
        branch = c;
        break;
      }
    if (branch == source.size()) {
      emit_leaf(source, target);
      return;
    }
    int v = source[branch].front();
    Coloring s = individualize(source, branch, v);
    refine(adj, s);
    for (int u : target[branch]) {
      Coloring t = individualize(target, branch, u);
      refine(adj, t);
      if (same_shape(s, t)) descend(s, t);
    }
  }

  void emit_leaf(const Coloring& source, const Coloring& target) {
    std::vector<int> im(adj.size());
    for (std::size_t c = 0; c < source.size(); ++c)
      im[source[c].front()] = target[c].front();
    for (const auto& [u, v] : graph.edges)
      if (!graph.has_edge(im[u], im[v])) return;
    found.emplace_back(std::move(im));
  }
};

}  // namespace detail

/// The full edge-preserving permutation group of the vertex set, returned
/// with its complete element closure. Graphs above the vertex budget signal
/// budget_error rather than risking a runaway search.
inline PermutationGroup automorphism_group(const Graph& g,
                                           int vertex_budget = kDefaultVertexBudget) {
  if (g.vertex_count < 1)
    throw std::invalid_argument("automorphism_group: graph has no vertices");
  if (g.vertex_count > vertex_budget)
    throw budget_error("automorphism_group: vertex budget exceeded");
  detail::AutomorphismSearch search(g);
  search.run();
  return PermutationGroup::from_elements(g.vertex_count, std::move(search.found));
}

/// Minimum base size of the automorphism group acting on the vertex set;
/// 0 for asymmetric graphs (and for the empty graph).
inline int determining_number(const Graph& g,
                              int vertex_budget = kDefaultVertexBudget) {
  if (g.vertex_count == 0) return 0;
  return min_base_size(automorphism_group(g, vertex_budget));
}

}  // namespace baseset
