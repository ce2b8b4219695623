#pragma once

// Permutations of {0,...,n-1} stored as image tables. The composition
// convention used throughout the library is fixed here once:
// compose(a, b) maps x to a(b(x)) -- the right factor is applied first.

#include <algorithm>
#include <compare>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "baseset/arith.hpp"

namespace baseset {

class Permutation {
 public:
  /// Validates that `images` is a bijection on {0,...,n-1}.
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    if (images_.empty())
      throw std::invalid_argument("Permutation: degree must be >= 1");
    std::vector<char> seen(images_.size(), 0);
    for (int x : images_) {
      if (x < 0 || x >= static_cast<int>(images_.size()))
        throw std::invalid_argument("Permutation: image out of range");
      if (seen[x]) throw std::invalid_argument("Permutation: image repeated");
      seen[x] = 1;
    }
  }

  static Permutation identity(int degree) {
    if (degree < 1) throw std::invalid_argument("identity: degree must be >= 1");
    std::vector<int> im(degree);
    std::iota(im.begin(), im.end(), 0);
    return Permutation(std::move(im));
  }

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int point) const { return images_[point]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const {
    for (int i = 0; i < degree(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }
  friend bool operator==(const Permutation& a, const Permutation& b) = default;

 private:
  std::vector<int> images_;
};

inline Permutation identity(int degree) { return Permutation::identity(degree); }

/// compose(a, b)(x) = a(b(x)); b is applied first.
inline Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("compose: degree mismatch");
  std::vector<int> im(a.degree());
  for (int x = 0; x < a.degree(); ++x) im[x] = a(b(x));
  return Permutation(std::move(im));
}

inline Permutation inverse(const Permutation& a) {
  std::vector<int> im(a.degree());
  for (int x = 0; x < a.degree(); ++x) im[a(x)] = x;
  return Permutation(std::move(im));
}

/// Canonical cycle form: every cycle starts at its minimum element, cycles
/// are ordered by first element, and together with fixed_points they
/// partition {0,...,degree-1}.
struct CycleDecomposition {
  std::vector<std::vector<int>> cycles;  // each of length >= 2
  std::vector<int> fixed_points;
};

inline CycleDecomposition cycle_decomposition(const Permutation& a) {
  CycleDecomposition dec;
  std::vector<char> seen(a.degree(), 0);
  for (int start = 0; start < a.degree(); ++start) {
    if (seen[start]) continue;
    std::vector<int> cyc;
    int x = start;
    do {
      seen[x] = 1;
      cyc.push_back(x);
      x = a(x);
    } while (x != start);
    if (cyc.size() == 1)
      dec.fixed_points.push_back(start);
    else
      dec.cycles.push_back(std::move(cyc));
  }
  return dec;
}

/// Least m >= 1 with a^m = identity; the lcm of the cycle lengths.
inline long long order(const Permutation& a) {
  long long m = 1;
  for (const auto& cyc : cycle_decomposition(a).cycles)
    m = lcm_ll(m, static_cast<long long>(cyc.size()));
  return m;
}

/// Builds a permutation of the given degree from disjoint cycles; points not
/// mentioned are fixed. Rejects out-of-range and repeated points.
inline Permutation from_cycles(int degree,
                               const std::vector<std::vector<int>>& cycles) {
  if (degree < 1) throw std::invalid_argument("from_cycles: degree must be >= 1");
  std::vector<int> im(degree);
  std::iota(im.begin(), im.end(), 0);
  std::vector<char> used(degree, 0);
  for (const auto& cyc : cycles) {
    for (int p : cyc) {
      if (p < 0 || p >= degree)
        throw std::invalid_argument("from_cycles: point out of range");
      if (used[p]) throw std::invalid_argument("from_cycles: repeated point");
      used[p] = 1;
    }
    if (cyc.size() < 2) continue;  // singleton cycles are fixed points
    for (std::size_t i = 0; i < cyc.size(); ++i)
      im[cyc[i]] = cyc[(i + 1) % cyc.size()];
  }
  return Permutation(std::move(im));
}

}  // namespace baseset
