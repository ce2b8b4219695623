#pragma once

// Abstract group catalog (abelian by elementary divisors, dihedral by n),
// explicit permutation realizations, subgroup enumeration up to conjugacy,
// coset actions, and the truncated base size set B_N(G).

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "baseset/arith.hpp"
#include "baseset/bases.hpp"
#include "baseset/errors.hpp"
#include "baseset/perm_group.hpp"

namespace baseset {

/// Exhaustive subgroup search is restricted to groups of at most this order.
inline constexpr long long kSubgroupOrderLimit = 500;
/// Below this order the subgroup search extends seeds to a fixpoint (finds
/// every subgroup); above it, one extension round (every <= 2-generated
/// subgroup, which is complete for dihedral groups).
inline constexpr long long kSubgroupFixpointLimit = 64;

struct AbstractGroupSpec {
  enum class Family { abelian, dihedral };

  Family family = Family::abelian;
  std::vector<long long> divisors;  // abelian only: sorted elementary divisors
  long long n = 0;                  // dihedral only: group order 2n

  /// Accepts invariant factors or arbitrary cyclic orders >= 2; the stored
  /// form is always the sorted elementary divisor list.
  static AbstractGroupSpec abelian(const std::vector<long long>& orders);
  static AbstractGroupSpec dihedral(long long n) {
    if (n < 2) throw std::invalid_argument("dihedral: n must be >= 2");
    AbstractGroupSpec s;
    s.family = Family::dihedral;
    s.n = n;
    return s;
  }

  long long order() const {
    if (family == Family::dihedral) return 2 * n;
    long long o = 1;
    for (long long d : divisors) o *= d;
    return o;
  }

  /// Descriptor form, e.g. "Z:2,2" or "D:15".
  std::string name() const {
    if (family == Family::dihedral) return "D:" + std::to_string(n);
    std::string s = "Z:";
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(divisors[i]);
    }
    return s;
  }

  friend bool operator==(const AbstractGroupSpec&, const AbstractGroupSpec&) = default;
};

/// Sorted multiset of prime powers whose grouped product recovers an
/// isomorphic abelian group; the mechanism behind "Z:12 == Z:4,3".
inline std::vector<long long> elementary_divisors(
    const std::vector<long long>& invariant_factors) {
  std::vector<long long> out;
  for (long long f : invariant_factors) {
    if (f < 2) throw std::invalid_argument("elementary_divisors: factor must be >= 2");
    for (const auto& [p, e] : factorize(f)) {
      long long pk = 1;
      for (int i = 0; i < e; ++i) pk *= p;
      out.push_back(pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline AbstractGroupSpec AbstractGroupSpec::abelian(
    const std::vector<long long>& orders) {
  if (orders.empty()) throw std::invalid_argument("abelian: divisor list is empty");
  AbstractGroupSpec s;
  s.family = Family::abelian;
  s.divisors = elementary_divisors(orders);
  return s;
}

// -- explicit realizations ---------------------------------------------------

/// Left-multiplication action on the element list; faithful, transitive,
/// every point stabilizer trivial.
inline PermutationGroup regular_representation(
    const AbstractGroupSpec& spec,
    std::size_t element_budget = kDefaultElementBudget) {
  long long order = spec.order();
  if (order > static_cast<long long>(element_budget))
    throw budget_error("regular_representation: group order exceeds element budget");
  int deg = static_cast<int>(order);
  std::vector<Permutation> gens;
  if (spec.family == AbstractGroupSpec::Family::abelian) {
    // Element index is the mixed-radix encoding of the component tuple.
    const auto& d = spec.divisors;
    std::vector<long long> stride(d.size());
    long long acc = 1;
    for (std::size_t i = 0; i < d.size(); ++i) {
      stride[i] = acc;
      acc *= d[i];
    }
    for (std::size_t i = 0; i < d.size(); ++i) {
      std::vector<int> im(deg);
      for (int x = 0; x < deg; ++x) {
        long long comp = (x / stride[i]) % d[i];
        long long bumped = (comp + 1) % d[i];
        im[x] = static_cast<int>(x + (bumped - comp) * stride[i]);
      }
      gens.emplace_back(std::move(im));
    }
  } else {
    // Element r^i f^j has index i + n*j; left multiplication by r and f.
    long long n = spec.n;
    std::vector<int> im_r(deg), im_f(deg);
    for (long long j = 0; j < 2; ++j)
      for (long long i = 0; i < n; ++i) {
        long long x = i + n * j;
        im_r[x] = static_cast<int>((i + 1) % n + n * j);
        im_f[x] = static_cast<int>((n - i) % n + n * (1 - j));
      }
    gens.emplace_back(std::move(im_r));
    gens.emplace_back(std::move(im_f));
  }
  return PermutationGroup(deg, std::move(gens));
}

/// The symmetry action of the regular n-gon on its n vertices: degree n,
/// order 2n, minimum base size 2.
inline PermutationGroup natural_dihedral_action(long long n) {
  if (n < 3) throw std::invalid_argument("natural_dihedral_action: n must be >= 3");
  int deg = static_cast<int>(n);
  std::vector<int> rot(deg), refl(deg);
  for (int i = 0; i < deg; ++i) {
    rot[i] = (i + 1) % deg;
    refl[i] = (deg - i) % deg;
  }
  return PermutationGroup(deg, {Permutation(std::move(rot)), Permutation(std::move(refl))});
}

/// The degree-(p+q) representation of the dihedral group of order 2pq:
/// r is a (p,q)-cycle pair and f an involution reversing both cycles, fixing
/// exactly the last point of each cycle.
inline PermutationGroup dpq_representation(long long p, long long q) {
  if (p == q || p < 3 || q < 3 || !is_prime(p) || !is_prime(q))
    throw std::invalid_argument("dpq_representation: p, q must be distinct odd primes");
  int ip = static_cast<int>(p), iq = static_cast<int>(q);
  int deg = ip + iq;
  std::vector<std::vector<int>> r_cycles(2);
  for (int i = 0; i < ip; ++i) r_cycles[0].push_back(i);
  for (int i = 0; i < iq; ++i) r_cycles[1].push_back(ip + i);
  Permutation r = from_cycles(deg, r_cycles);
  std::vector<std::vector<int>> f_cycles;
  for (int a = 0; 2 * a < ip - 2; ++a) f_cycles.push_back({a, ip - 2 - a});
  for (int b = 0; 2 * b < iq - 2; ++b) f_cycles.push_back({ip + b, ip + iq - 2 - b});
  Permutation f = from_cycles(deg, f_cycles);
  return PermutationGroup(deg, {std::move(r), std::move(f)});
}

// -- subgroups ---------------------------------------------------------------

/// A subgroup as its sorted full element list (always contains the identity).
using Subgroup = std::vector<Permutation>;

/// Closure of a seed set inside a finite group, as a sorted element list.
inline Subgroup subgroup_generated(int degree, const std::vector<Permutation>& seed) {
  std::set<Permutation> elements;
  elements.insert(Permutation::identity(degree));
  std::vector<Permutation> frontier(elements.begin(), elements.end());
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& e : frontier)
      for (const auto& g : seed) {
        Permutation prod = compose(g, e);
        if (elements.insert(prod).second) next.push_back(std::move(prod));
      }
    frontier = std::move(next);
  }
  return {elements.begin(), elements.end()};
}

inline Subgroup conjugate_subgroup(const Subgroup& h, const Permutation& g) {
  Subgroup out;
  out.reserve(h.size());
  Permutation gi = inverse(g);
  for (const auto& x : h) out.push_back(compose(g, compose(x, gi)));
  std::sort(out.begin(), out.end());
  return out;
}

inline Subgroup intersect_subgroups(const Subgroup& a, const Subgroup& b) {
  Subgroup out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

inline bool subgroup_contains(const Subgroup& h, const Permutation& p) {
  return std::binary_search(h.begin(), h.end(), p);
}

/// One representative per conjugacy class of subgroups, each the
/// lexicographically least member of its class, ordered by (order, element
/// list). Seeds every cyclic subgroup, then extends by single elements --
/// to a fixpoint for groups of order <= kSubgroupFixpointLimit (every
/// subgroup), one round otherwise (every <= 2-generated subgroup, complete
/// for the dihedral family).
inline std::vector<Subgroup> subgroups_up_to_conjugacy(
    const PermutationGroup& g, std::size_t element_budget = kDefaultElementBudget) {
  const auto& elems = g.elements(element_budget);
  if (static_cast<long long>(elems.size()) > kSubgroupOrderLimit)
    throw budget_error("subgroups_up_to_conjugacy: group order exceeds search limit");
  std::set<Subgroup> all;
  all.insert(Subgroup{Permutation::identity(g.degree())});
  for (const auto& a : elems) all.insert(subgroup_generated(g.degree(), {a}));
  bool to_fixpoint = static_cast<long long>(elems.size()) <= kSubgroupFixpointLimit;
  bool changed = true;
  int rounds = 0;
  while (changed && (to_fixpoint || rounds < 1)) {
    changed = false;
    ++rounds;
    std::vector<Subgroup> snapshot(all.begin(), all.end());
    for (const auto& h : snapshot) {
      if (h.size() == elems.size()) continue;
      for (const auto& x : elems) {
        if (subgroup_contains(h, x)) continue;
        std::vector<Permutation> seed = h;
        seed.push_back(x);
        if (all.insert(subgroup_generated(g.degree(), seed)).second) changed = true;
      }
    }
  }
  // Conjugacy reduction; iterating the sorted set makes the first
  // unclassified subgroup the least member of its class.
  std::vector<Subgroup> reps;
  std::set<Subgroup> classified;
  for (const auto& h : all) {
    if (classified.count(h)) continue;
    reps.push_back(h);
    for (const auto& x : elems) classified.insert(conjugate_subgroup(h, x));
  }
  std::stable_sort(reps.begin(), reps.end(),
                   [](const Subgroup& a, const Subgroup& b) {
                     if (a.size() != b.size()) return a.size() < b.size();
                     return a < b;
                   });
  return reps;
}

/// Largest normal subgroup of g contained in h: the intersection of all
/// conjugates, i.e. the kernel of the coset action on g/h.
inline Subgroup normal_core(const PermutationGroup& g, const Subgroup& h,
                            std::size_t element_budget = kDefaultElementBudget) {
  Subgroup core = h;
  for (const auto& x : g.elements(element_budget)) {
    if (core.size() == 1) break;
    core = intersect_subgroups(core, conjugate_subgroup(h, x));
  }
  return core;
}

// -- coset actions and the base size set -------------------------------------

/// A disjoint union of coset actions, encoded by the subgroups themselves.
struct ActionDescriptor {
  std::vector<Subgroup> subgroups;
  long long total_points = 0;
};

/// G acting on the disjoint union of the left-coset spaces G/H_i by left
/// multiplication. Faithful iff the intersection of the subgroups' normal
/// cores is trivial; orbit sizes are exactly the indices [G:H_i].
inline PermutationGroup coset_action(
    const PermutationGroup& g, const ActionDescriptor& d,
    std::size_t element_budget = kDefaultElementBudget) {
  const auto& elems = g.elements(element_budget);
  auto element_index = [&](const Permutation& p) {
    auto it = std::lower_bound(elems.begin(), elems.end(), p);
    if (it == elems.end() || *it != p)
      throw std::invalid_argument("coset_action: element not in group");
    return static_cast<int>(it - elems.begin());
  };

  // coset_of[i][element index] = point id of the coset containing the element
  std::vector<std::vector<int>> coset_of;
  int total = 0;
  for (const auto& h : d.subgroups) {
    for (const auto& x : h)
      if (!g.contains(x, element_budget))
        throw std::invalid_argument("coset_action: descriptor member is not a subgroup of g");
    std::vector<int> ids(elems.size(), -1);
    for (std::size_t i = 0; i < elems.size(); ++i) {
      if (ids[i] != -1) continue;
      int id = total++;
      for (const auto& x : h) ids[element_index(compose(elems[i], x))] = id;
    }
    coset_of.push_back(std::move(ids));
  }

  std::vector<Permutation> action_gens;
  for (const auto& s : g.generators()) {
    std::vector<int> im(total);
    for (std::size_t hi = 0; hi < d.subgroups.size(); ++hi) {
      for (std::size_t i = 0; i < elems.size(); ++i) {
        int from = coset_of[hi][i];
        int to = coset_of[hi][element_index(compose(s, elems[i]))];
        im[from] = to;
      }
    }
    action_gens.emplace_back(std::move(im));
  }
  return PermutationGroup(total, std::move(action_gens));
}

/// Every set of conjugacy-class representatives with total index at most
/// max_points and trivial joint core, each exactly once. Exact duplicate
/// repetitions are never emitted: a duplicated orbit cannot change the
/// minimum base size, and conjugate subgroups give permutation-equivalent
/// actions.
inline std::vector<ActionDescriptor> faithful_actions(
    const AbstractGroupSpec& spec, long long max_points,
    std::size_t element_budget = kDefaultElementBudget) {
  if (max_points < 1)
    throw std::invalid_argument("faithful_actions: max_points must be >= 1");
  PermutationGroup g = regular_representation(spec, element_budget);
  auto classes = subgroups_up_to_conjugacy(g, element_budget);
  long long group_order = g.order(element_budget);

  struct ClassInfo {
    Subgroup subgroup;
    long long index;
    Subgroup core;
  };
  std::vector<ClassInfo> info;
  for (auto& h : classes) {
    long long index = group_order / static_cast<long long>(h.size());
    info.push_back({h, index, normal_core(g, h, element_budget)});
  }
  std::stable_sort(info.begin(), info.end(),
                   [](const ClassInfo& a, const ClassInfo& b) {
                     if (a.index != b.index) return a.index < b.index;
                     return a.subgroup < b.subgroup;
                   });

  std::vector<ActionDescriptor> out;
  std::vector<int> chosen;
  Subgroup full(g.elements(element_budget));
  auto recurse = [&](auto&& self, std::size_t pos, long long used,
                     const Subgroup& joint_core) -> void {
    for (std::size_t i = pos; i < info.size(); ++i) {
      if (info[i].index > max_points - used) break;  // sorted ascending
      Subgroup next_core = intersect_subgroups(joint_core, info[i].core);
      chosen.push_back(static_cast<int>(i));
      if (next_core.size() == 1) {
        ActionDescriptor d;
        for (int c : chosen) d.subgroups.push_back(info[c].subgroup);
        for (int c : chosen) d.total_points += info[c].index;
        out.push_back(std::move(d));
      }
      self(self, i + 1, used + info[i].index, next_core);
      chosen.pop_back();
    }
  };
  recurse(recurse, 0, 0, full);
  return out;
}

/// The truncated base size set B_N(G): minimum base sizes over every
/// faithful action on at most max_points points.
inline std::set<int> base_size_set(const AbstractGroupSpec& spec, long long max_points,
                                   std::size_t element_budget = kDefaultElementBudget) {
  PermutationGroup g = regular_representation(spec, element_budget);
  std::set<int> sizes;
  for (const auto& d : faithful_actions(spec, max_points, element_budget))
    sizes.insert(min_base_size(coset_action(g, d, element_budget), element_budget));
  return sizes;
}

// -- abstract isomorphism certificates ---------------------------------------

/// Family-specific isomorphism test: dihedral groups by exhibiting the
/// defining relation, abelian groups by commutativity plus element-order
/// statistics (which determine a finite abelian group up to isomorphism).
inline bool is_isomorphic_to(const PermutationGroup& g, const AbstractGroupSpec& spec,
                             std::size_t element_budget = kDefaultElementBudget) {
  const auto& elems = g.elements(element_budget);
  if (static_cast<long long>(elems.size()) != spec.order()) return false;

  if (spec.family == AbstractGroupSpec::Family::abelian) {
    for (std::size_t i = 0; i < g.generators().size(); ++i)
      for (std::size_t j = i + 1; j < g.generators().size(); ++j) {
        const auto& a = g.generators()[i];
        const auto& b = g.generators()[j];
        if (compose(a, b) != compose(b, a)) return false;
      }
    // #{x : x^d = id} must equal prod_i gcd(d, d_i) for every divisor d.
    std::map<long long, long long> order_count;
    for (const auto& e : elems) ++order_count[order(e)];
    long long n = spec.order();
    for (long long d = 1; d <= n; ++d) {
      if (n % d != 0) continue;
      long long have = 0;
      for (const auto& [o, c] : order_count)
        if (d % o == 0) have += c;
      long long want = 1;
      for (long long di : spec.divisors) want *= std::gcd(d, di);
      if (have != want) return false;
    }
    return true;
  }

  // Dihedral: find r of order n and an involution f outside <r> with
  // f r f = r^-1; then <r,f> has order 2n = |g| and the relation certifies
  // the isomorphism type.
  long long n = spec.n;
  for (const auto& r : elems) {
    if (order(r) != n) continue;
    std::set<Permutation> r_powers;
    Permutation p = Permutation::identity(g.degree());
    for (long long k = 0; k < n; ++k) {
      r_powers.insert(p);
      p = compose(r, p);
    }
    Permutation r_inv = inverse(r);
    for (const auto& f : elems) {
      if (order(f) != 2 || r_powers.count(f)) continue;
      if (compose(f, compose(r, f)) == r_inv) return true;
    }
  }
  return false;
}

// -- what the theory pins down -----------------------------------------------

/// Best bound provable from the subgroup-chain argument alone: the minimum
/// over prime-power element orders p^k of Omega(|G|/p^k) + 1, capped by
/// Omega(|G|). Valid for every faithful action of the group.
inline int hard_upper_bound(const AbstractGroupSpec& spec) {
  int best = length_upper_bound(spec.order());
  std::vector<long long> element_orders;
  if (spec.family == AbstractGroupSpec::Family::dihedral) {
    element_orders.push_back(2);
    for (long long d = 2; d <= spec.n; ++d)
      if (spec.n % d == 0 && as_prime_power(d)) element_orders.push_back(d);
  } else {
    // Elementary divisors are prime powers; the largest per prime is the
    // largest prime-power element order for that prime.
    std::map<long long, long long> best_per_prime;
    for (long long d : spec.divisors) {
      long long p = as_prime_power(d)->first;
      best_per_prime[p] = std::max(best_per_prime[p], d);
    }
    for (const auto& [p, d] : best_per_prime) element_orders.push_back(d);
  }
  for (long long pk : element_orders)
    best = std::min(best, corollary_bound(spec.order(), pk));
  return best;
}

/// Largest value any faithful action's base size can take: the
/// elementary-divisor count for abelian groups (never worse than the chain
/// bound), the chain bound for dihedral groups.
inline int theory_upper_bound(const AbstractGroupSpec& spec) {
  if (spec.family == AbstractGroupSpec::Family::abelian)
    return std::min(static_cast<int>(spec.divisors.size()), hard_upper_bound(spec));
  return hard_upper_bound(spec);
}

/// True when theory certifies that the achieved set is all of B(G) at this
/// budget. Abelian: the achieved set is {1..n} and either the budget covers
/// the regular action plus the divisor product action (so equality is
/// guaranteed) or the chain bound already pins the maximum at n. Dihedral:
/// the p^k, 2p^k (p odd), and pq (distinct odd primes) families, when the
/// achieved set matches their characterization.
inline bool theory_certifies_completeness(const AbstractGroupSpec& spec,
                                          const std::set<int>& achieved,
                                          long long max_points) {
  auto is_range = [&](int hi) {
    std::set<int> want;
    for (int i = 1; i <= hi; ++i) want.insert(i);
    return achieved == want;
  };
  if (spec.family == AbstractGroupSpec::Family::abelian) {
    int n = static_cast<int>(spec.divisors.size());
    long long sum = 0;
    for (long long d : spec.divisors) sum += d;
    return is_range(n) &&
           (max_points >= spec.order() + sum || hard_upper_bound(spec) == n);
  }
  long long n = spec.n;
  if (as_prime_power(n)) return is_range(2);
  if (n % 2 == 0) {
    auto pk = as_prime_power(n / 2);
    if (pk && pk->first % 2 == 1) return is_range(3);
  }
  auto f = factorize(n);
  if (f.size() == 2 && f[0].second == 1 && f[1].second == 1 && f[0].first % 2 == 1)
    return is_range(3);
  return false;
}

}  // namespace baseset
