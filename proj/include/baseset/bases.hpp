#pragma once

// Base testing, the greedy upper bound, exact minimum base search, and the
// structural bounds on base size. The exact search runs over candidate sets
// of increasing size, restricting the next point to one representative per
// nontrivial orbit of the current partial stabilizer; orbit-equivalent
// points yield conjugate stabilizers of equal order, so no minimum is lost.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "baseset/arith.hpp"
#include "baseset/perm_group.hpp"

namespace baseset {

/// A base together with the stabilizer-chain orders it certifies:
/// witness_chain = |G| > |stab(b_1)| > ... > 1.
struct Base {
  std::vector<int> points;
  std::vector<long long> witness_chain;
};

namespace detail {

/// Orbit partition of {0,...,degree-1} under a closed element set.
inline std::vector<std::vector<int>> element_orbits(
    int degree, const std::vector<Permutation>& elements) {
  std::vector<char> seen(degree, 0);
  std::vector<std::vector<int>> blocks;
  for (int v = 0; v < degree; ++v) {
    if (seen[v]) continue;
    std::vector<char> in_orbit(degree, 0);
    in_orbit[v] = 1;
    std::vector<int> stack{v}, block{v};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (const auto& e : elements) {
        int y = e(x);
        if (!in_orbit[y]) {
          in_orbit[y] = 1;
          stack.push_back(y);
          block.push_back(y);
        }
      }
    }
    std::sort(block.begin(), block.end());
    for (int x : block) seen[x] = 1;
    blocks.push_back(std::move(block));
  }
  return blocks;
}

inline std::vector<Permutation> fix_point(const std::vector<Permutation>& elements,
                                          int point) {
  std::vector<Permutation> out;
  for (const auto& e : elements)
    if (e(point) == point) out.push_back(e);
  return out;
}

/// Depth-first search for a base of exactly `remaining` further points.
/// Candidate points are the minimum elements of the nontrivial orbits of the
/// current stabilizer, in ascending order.
inline bool min_base_dfs(int degree, const std::vector<Permutation>& elements,
                         int remaining, std::vector<int>& prefix) {
  if (elements.size() == 1) return true;
  if (remaining == 0) return false;
  auto blocks = element_orbits(degree, elements);
  std::size_t largest = 0;
  for (const auto& b : blocks) largest = std::max(largest, b.size());
  // Each fixed point shrinks the stabilizer by at most its orbit size, and
  // stabilizer orbits only refine, so `largest^remaining` bounds the
  // reachable index.
  double reachable = 1.0;
  for (int i = 0; i < remaining; ++i) {
    reachable *= static_cast<double>(largest);
    if (reachable >= static_cast<double>(elements.size())) break;
  }
  if (reachable < static_cast<double>(elements.size())) return false;
  for (const auto& block : blocks) {
    if (block.size() < 2) continue;
    int rep = block.front();
    prefix.push_back(rep);
    if (min_base_dfs(degree, fix_point(elements, rep), remaining - 1, prefix))
      return true;
    prefix.pop_back();
  }
  return false;
}

inline Base make_base(const PermutationGroup& g, const std::vector<int>& points,
                      std::size_t element_budget) {
  Base base;
  base.points = points;
  std::vector<Permutation> current = g.elements(element_budget);
  base.witness_chain.push_back(static_cast<long long>(current.size()));
  for (int p : points) {
    current = fix_point(current, p);
    base.witness_chain.push_back(static_cast<long long>(current.size()));
  }
  return base;
}

}  // namespace detail

/// True iff the pointwise stabilizer of `points` is trivial.
inline bool is_base(const PermutationGroup& g, const std::vector<int>& points,
                    std::size_t element_budget = kDefaultElementBudget) {
  for (int p : points)
    if (p < 0 || p >= g.degree())
      throw std::invalid_argument("is_base: point out of range");
  for (const auto& e : g.elements(element_budget)) {
    if (e.is_identity()) continue;
    bool fixes_all = true;
    for (int p : points)
      if (e(p) != p) {
        fixes_all = false;
        break;
      }
    if (fixes_all) return false;
  }
  return true;
}

/// Upper-bound heuristic: repeatedly fix the lowest-numbered point of a
/// largest nontrivial orbit of the current stabilizer.
inline Base greedy_base(const PermutationGroup& g,
                        std::size_t element_budget = kDefaultElementBudget) {
  std::vector<Permutation> current = g.elements(element_budget);
  std::vector<int> points;
  while (current.size() > 1) {
    auto blocks = detail::element_orbits(g.degree(), current);
    const std::vector<int>* best = nullptr;
    for (const auto& b : blocks) {
      if (b.size() < 2) continue;
      if (!best || b.size() > best->size()) best = &b;
    }
    points.push_back(best->front());
    current = detail::fix_point(current, points.back());
  }
  return detail::make_base(g, points, element_budget);
}

/// Exact minimum base, found by iterative deepening over the pruned search.
/// The empty set is the (unique) minimum base of the trivial group.
inline Base min_base(const PermutationGroup& g,
                     std::size_t element_budget = kDefaultElementBudget) {
  const auto& elements = g.elements(element_budget);
  for (int k = 0;; ++k) {
    std::vector<int> prefix;
    if (detail::min_base_dfs(g.degree(), elements, k, prefix))
      return detail::make_base(g, prefix, element_budget);
  }
}

inline int min_base_size(const PermutationGroup& g,
                         std::size_t element_budget = kDefaultElementBudget) {
  return static_cast<int>(min_base(g, element_budget).points.size());
}

/// Number of prime factors of the group order, counted with multiplicity.
/// Every base size of every faithful action is bounded by this value.
inline int length_upper_bound(long long group_order) {
  if (group_order < 2)
    throw std::invalid_argument("length_upper_bound: order must be >= 2");
  return prime_factor_count(group_order);
}

/// Bound j+1 with j = Omega(group_order / prime_power), valid whenever the
/// group has an element of order `prime_power` (the caller's claim; asserted
/// where a concrete group is available).
inline int corollary_bound(long long group_order, long long prime_power) {
  if (!as_prime_power(prime_power))
    throw std::invalid_argument("corollary_bound: not a prime power");
  if (group_order < 2 || group_order % prime_power != 0)
    throw std::invalid_argument("corollary_bound: prime power must divide order");
  long long rest = group_order / prime_power;
  return rest == 1 ? 1 : prime_factor_count(rest) + 1;
}

}  // namespace baseset
