#pragma once

// Verified graph corpora: finite evidence sets of graphs whose automorphism
// group is checked, never assumed, to be isomorphic to a target group.
// Includes the Cayley-graph gadget construction that realizes any catalogued
// group with determining number 1.

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "baseset/graph_aut.hpp"
#include "baseset/graphs.hpp"
#include "baseset/groups.hpp"

namespace baseset {

/// Standard generator catalog for a family, as elements of the regular
/// representation. Abelian groups get one generator per elementary divisor;
/// when the divisors are pairwise coprime a final "diagonal" generator is
/// appended, which generates the whole (cyclic) group on its own. Dihedral
/// groups get r and f.
inline std::vector<Permutation> generator_catalog(const AbstractGroupSpec& spec) {
  PermutationGroup reg = regular_representation(spec);
  std::vector<Permutation> catalog = reg.generators();
  if (spec.family == AbstractGroupSpec::Family::abelian && catalog.size() > 1) {
    bool coprime = true;
    for (std::size_t i = 0; i < spec.divisors.size() && coprime; ++i)
      for (std::size_t j = i + 1; j < spec.divisors.size(); ++j)
        if (std::gcd(spec.divisors[i], spec.divisors[j]) != 1) {
          coprime = false;
          break;
        }
    if (coprime) {
      Permutation diag = catalog.front();
      for (std::size_t i = 1; i < catalog.size(); ++i)
        diag = compose(diag, catalog[i]);
      catalog.push_back(std::move(diag));
    }
  }
  return catalog;
}

namespace detail {

/// Base vertices are the group elements; each directed generator edge
/// u -> u*s_j becomes the gadget u - a_1 - ... - a_{k+1} - v where
/// k = gadget_offset + j + 1, with a leaf at a_1 and a length-2 antenna at
/// a_2. The two branch types sit at unequal offsets from the tail, so no
/// reflection of the gadget (or of a ring of gadgets) can match them up,
/// and the path length recovers the generator index.
inline Graph frucht_gadget_graph(const std::vector<Permutation>& elements,
                                 const std::vector<Permutation>& generators,
                                 int gadget_offset) {
  const int m = static_cast<int>(elements.size());
  int total = m;
  for (std::size_t j = 0; j < generators.size(); ++j)
    total += m * (gadget_offset + static_cast<int>(j) + 5);
  Graph g(total);
  auto index_of = [&](const Permutation& p) {
    return static_cast<int>(
        std::lower_bound(elements.begin(), elements.end(), p) - elements.begin());
  };
  int next = m;
  for (std::size_t j = 0; j < generators.size(); ++j) {
    int k = gadget_offset + static_cast<int>(j) + 1;
    for (int u = 0; u < m; ++u) {
      int v = index_of(compose(elements[u], generators[j]));
      int prev = u;
      int first_inner = next;
      for (int step = 0; step < k + 1; ++step) {
        g.add_edge(prev, next);
        prev = next++;
      }
      g.add_edge(prev, v);
      g.add_edge(first_inner, next++);      // leaf at a_1: tail mark
      g.add_edge(first_inner + 1, next);    // antenna at a_2: head-direction mark
      g.add_edge(next, next + 1);
      next += 2;
    }
  }
  return g;
}

}  // namespace detail

/// Estimated vertex count of frucht_graph without building it.
inline int frucht_graph_size(const AbstractGroupSpec& spec,
                             const std::vector<int>& generator_indices,
                             int gadget_offset = 0) {
  int m = static_cast<int>(spec.order());
  int total = m;
  for (std::size_t j = 0; j < generator_indices.size(); ++j)
    total += m * (gadget_offset + static_cast<int>(j) + 5);
  return total;
}

/// Cayley graph of the group (on the selected catalog generators) with
/// asymmetric path gadgets replacing each directed generator edge. The
/// construction is rejected unless the computed automorphism group is
/// isomorphic to the group and acts with determining number 1.
inline Graph frucht_graph(const AbstractGroupSpec& spec,
                          const std::vector<int>& generator_indices,
                          int gadget_offset = 0,
                          std::size_t element_budget = kDefaultElementBudget) {
  if (spec.order() < 2)
    throw std::invalid_argument("frucht_graph: group must be nontrivial");
  if (gadget_offset < 0)
    throw std::invalid_argument("frucht_graph: gadget offset must be >= 0");
  auto catalog = generator_catalog(spec);
  std::vector<Permutation> gens;
  for (int i : generator_indices) {
    if (i < 0 || i >= static_cast<int>(catalog.size()))
      throw std::invalid_argument("frucht_graph: generator index out of range");
    gens.push_back(catalog[i]);
  }
  if (gens.empty()) throw std::invalid_argument("frucht_graph: no generators selected");
  PermutationGroup reg = regular_representation(spec, element_budget);
  const auto& elements = reg.elements(element_budget);
  if (subgroup_generated(reg.degree(), gens).size() != elements.size())
    throw construction_error("frucht_graph: selected generators do not generate the group");

  Graph g = detail::frucht_gadget_graph(elements, gens, gadget_offset);
  PermutationGroup aut = automorphism_group(g, g.vertex_count);
  if (!is_isomorphic_to(aut, spec, element_budget))
    throw construction_error("frucht_graph: automorphism group is not the target group");
  if (min_base_size(aut, element_budget) != 1)
    throw construction_error("frucht_graph: determining number is not 1");
  return g;
}

struct CorpusEntry {
  Graph graph;
  std::string label;
};

/// Finite evidence set standing in for "all graphs with Aut isomorphic to
/// the target". Every entry is verified; candidates that fail verification
/// or exceed the size budget are recorded in `dropped` with a reason.
struct GraphCorpus {
  AbstractGroupSpec target;
  std::vector<CorpusEntry> entries;
  std::vector<std::pair<std::string, std::string>> dropped;
};

inline GraphCorpus standard_corpus(const AbstractGroupSpec& spec, int size_budget,
                                   std::size_t element_budget = kDefaultElementBudget) {
  GraphCorpus corpus{spec, {}, {}};
  std::vector<std::pair<std::string, std::function<Graph()>>> candidates;

  if (spec.family == AbstractGroupSpec::Family::dihedral) {
    long long n = spec.n;
    if (n >= 3) {
      candidates.emplace_back("triangle-marked-cycle-" + std::to_string(n),
                              [n] { return triangle_marked_cycle(static_cast<int>(n)); });
      candidates.emplace_back("pendant-marked-cycle-" + std::to_string(n),
                              [n] { return pendant_marked_cycle(static_cast<int>(n)); });
      candidates.emplace_back("cycle-" + std::to_string(n),
                              [n] { return cycle(static_cast<int>(n)); });
      candidates.emplace_back("isolated-vertex+cycle-" + std::to_string(n), [n] {
        return disjoint_union(path(1), cycle(static_cast<int>(n)));
      });
      candidates.emplace_back("rigid-spider+cycle-" + std::to_string(n), [n] {
        return disjoint_union(spider({1, 2, 3}), cycle(static_cast<int>(n)));
      });
    }
    if (n % 2 == 0 && n / 2 >= 3 && (n / 2) % 2 == 1) {
      long long m = n / 2;
      candidates.emplace_back("path2+cycle-" + std::to_string(m), [m] {
        return disjoint_union(path(2), cycle(static_cast<int>(m)));
      });
    }
    if (frucht_graph_size(spec, {0, 1}) <= size_budget)
      candidates.emplace_back("frucht-" + spec.name(),
                              [spec, element_budget] {
                                return frucht_graph(spec, {0, 1}, 0, element_budget);
                              });
    else
      corpus.dropped.emplace_back("frucht-" + spec.name(), "over size budget");
  } else {
    // Whole-group gadget graph: the diagonal generator when the group is
    // cyclic, one gadget class per divisor otherwise.
    auto catalog_size = static_cast<int>(generator_catalog(spec).size());
    std::vector<int> whole_indices;
    if (catalog_size > static_cast<int>(spec.divisors.size()))
      whole_indices = {catalog_size - 1};  // diagonal
    else
      for (int i = 0; i < catalog_size; ++i) whole_indices.push_back(i);
    if (frucht_graph_size(spec, whole_indices) <= size_budget)
      candidates.emplace_back("frucht-" + spec.name(),
                              [spec, whole_indices, element_budget] {
                                return frucht_graph(spec, whole_indices, 0, element_budget);
                              });
    else
      corpus.dropped.emplace_back("frucht-" + spec.name(), "over size budget");

    // One component per elementary divisor: growing paths realize the
    // divisor-2 copies, gadget graphs with growing gadgets realize the rest.
    candidates.emplace_back("divisor-union-" + spec.name(), [spec, element_budget] {
      Graph acc(0);
      int path_len = 2;
      std::map<long long, int> copies;
      for (long long d : spec.divisors) {
        Graph comp =
            d == 2 ? path(path_len++)
                   : frucht_graph(AbstractGroupSpec::abelian({d}), {0},
                                  copies[d], element_budget);
        ++copies[d];
        acc = disjoint_union(acc, comp);
      }
      return acc;
    });
    candidates.emplace_back("divisor-union+rigid-spider-" + spec.name(),
                            [spec, element_budget] {
                              Graph acc = spider({1, 2, 3});
                              int path_len = 2;
                              std::map<long long, int> copies;
                              for (long long d : spec.divisors) {
                                Graph comp = d == 2
                                                 ? path(path_len++)
                                                 : frucht_graph(AbstractGroupSpec::abelian({d}),
                                                                {0}, copies[d], element_budget);
                                ++copies[d];
                                acc = disjoint_union(acc, comp);
                              }
                              return acc;
                            });
  }

  for (const auto& [label, build] : candidates) {
    Graph g;
    try {
      g = build();
    } catch (const construction_error& e) {
      corpus.dropped.emplace_back(label, e.what());
      continue;
    }
    if (g.vertex_count > size_budget) {
      corpus.dropped.emplace_back(label, "over size budget");
      continue;
    }
    bool duplicate = false;
    for (const auto& entry : corpus.entries)
      if (entry.graph == g) {
        corpus.dropped.emplace_back(label, "duplicate of " + entry.label);
        duplicate = true;
        break;
      }
    if (duplicate) continue;
    PermutationGroup aut = automorphism_group(g, g.vertex_count);
    if (!is_isomorphic_to(aut, spec, element_budget)) {
      corpus.dropped.emplace_back(label, "automorphism group mismatch");
      continue;
    }
    corpus.entries.push_back({std::move(g), label});
  }

  if (corpus.entries.empty())
    throw budget_error("standard_corpus: no verified entries within size budget");
  return corpus;
}

/// Determining numbers achieved over a corpus, smallest first.
inline std::set<int> corpus_determining_numbers(const GraphCorpus& corpus) {
  std::set<int> out;
  for (const auto& entry : corpus.entries)
    out.insert(determining_number(entry.graph, entry.graph.vertex_count));
  return out;
}

}  // namespace baseset
