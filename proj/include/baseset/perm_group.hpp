#pragma once

// Permutation groups given by generators, with a lazily computed full
// element closure. All in-scope groups are small (order <= ~10^4), so the
// closure is exact and stabilizers are computed by filtering it.

#include <algorithm>
#include <memory>
#include <mutex>
#include <set>
#include <stdexcept>
#include <vector>

#include "baseset/errors.hpp"
#include "baseset/perm.hpp"

namespace baseset {

inline constexpr std::size_t kDefaultElementBudget = 1'000'000;

class PermutationGroup {
 public:
  PermutationGroup(int degree, std::vector<Permutation> generators)
      : degree_(degree),
        generators_(std::move(generators)),
        cache_(std::make_shared<Cache>()) {
    if (degree_ < 1)
      throw std::invalid_argument("PermutationGroup: degree must be >= 1");
    if (generators_.empty())
      throw std::invalid_argument("PermutationGroup: generator list is empty");
    for (const auto& g : generators_)
      if (g.degree() != degree_)
        throw std::invalid_argument("PermutationGroup: generator degree mismatch");
  }

  static PermutationGroup trivial(int degree) {
    return PermutationGroup(degree, {Permutation::identity(degree)});
  }

  /// Wraps an already-closed element set (must contain the identity and be
  /// closed under composition and inverse); the set becomes both the
  /// generator list and the cached closure.
  static PermutationGroup from_elements(int degree,
                                        std::vector<Permutation> elements) {
    std::sort(elements.begin(), elements.end());
    PermutationGroup g(degree, elements);
    g.cache_->elements = std::move(elements);
    g.cache_->ready = true;
    return g;
  }

  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }

  /// The full group generated, sorted by image table. Computed once under a
  /// once-only contract: concurrent readers observe either "absent" or the
  /// complete set. Throws budget_error when the closure would exceed
  /// `element_budget`; a failed attempt is not cached.
  const std::vector<Permutation>& elements(
      std::size_t element_budget = kDefaultElementBudget) const {
    if (!cache_->ready)
      std::call_once(cache_->flag, [&] {
        cache_->elements = close_generators(element_budget);
        cache_->ready = true;
      });
    return cache_->elements;
  }

  long long order(std::size_t element_budget = kDefaultElementBudget) const {
    return static_cast<long long>(elements(element_budget).size());
  }

  bool contains(const Permutation& p,
                std::size_t element_budget = kDefaultElementBudget) const {
    const auto& el = elements(element_budget);
    return std::binary_search(el.begin(), el.end(), p);
  }

  bool has_cached_elements() const { return cache_->ready; }

 private:
  struct Cache {
    std::once_flag flag;
    std::vector<Permutation> elements;
    bool ready = false;
  };

  std::vector<Permutation> close_generators(std::size_t budget) const {
    std::set<Permutation> elements;
    elements.insert(Permutation::identity(degree_));
    std::vector<Permutation> frontier(elements.begin(), elements.end());
    while (!frontier.empty()) {
      std::vector<Permutation> next;
      for (const auto& e : frontier) {
        for (const auto& g : generators_) {
          Permutation product = compose(g, e);
          if (elements.insert(product).second) {
            if (elements.size() > budget)
              throw budget_error("closure: element budget exceeded");
            next.push_back(std::move(product));
          }
        }
      }
      frontier = std::move(next);
    }
    return {elements.begin(), elements.end()};
  }

  int degree_;
  std::vector<Permutation> generators_;
  std::shared_ptr<Cache> cache_;
};

/// Closure of a generating set as a free function (spec name).
inline std::vector<Permutation> closure(
    const PermutationGroup& g, std::size_t element_budget = kDefaultElementBudget) {
  return g.elements(element_budget);
}

/// Orbit of `v` under the group, as a sorted point set. Uses the generators
/// only, so it never triggers the closure.
inline std::vector<int> orbit(const PermutationGroup& g, int v) {
  if (v < 0 || v >= g.degree())
    throw std::invalid_argument("orbit: point out of range");
  std::vector<char> in_orbit(g.degree(), 0);
  in_orbit[v] = 1;
  std::vector<int> stack{v}, result{v};
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (const auto& gen : g.generators()) {
      int y = gen(x);
      if (!in_orbit[y]) {
        in_orbit[y] = 1;
        stack.push_back(y);
        result.push_back(y);
      }
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

/// All orbits, each sorted, ordered by minimum element; a partition of
/// {0,...,degree-1}.
inline std::vector<std::vector<int>> orbits(const PermutationGroup& g) {
  std::vector<char> seen(g.degree(), 0);
  std::vector<std::vector<int>> blocks;
  for (int v = 0; v < g.degree(); ++v) {
    if (seen[v]) continue;
    auto block = orbit(g, v);
    for (int x : block) seen[x] = 1;
    blocks.push_back(std::move(block));
  }
  return blocks;
}

/// Subgroup of all elements fixing every point in `points`, returned with
/// its full element set as generators.
inline PermutationGroup pointwise_stabilizer(
    const PermutationGroup& g, const std::vector<int>& points,
    std::size_t element_budget = kDefaultElementBudget) {
  for (int p : points)
    if (p < 0 || p >= g.degree())
      throw std::invalid_argument("pointwise_stabilizer: point out of range");
  std::vector<Permutation> fixed;
  for (const auto& e : g.elements(element_budget)) {
    bool fixes = true;
    for (int p : points)
      if (e(p) != p) {
        fixes = false;
        break;
      }
    if (fixes) fixed.push_back(e);
  }
  return PermutationGroup::from_elements(g.degree(), std::move(fixed));
}

}  // namespace baseset
