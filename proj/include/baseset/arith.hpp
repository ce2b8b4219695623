#pragma once

#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace baseset {

/// Prime factorization by trial division, as (prime, exponent) pairs in
/// ascending prime order. Intended for the small orders this library works
/// with (well below 2^40).
inline std::vector<std::pair<long long, int>> factorize(long long n) {
  if (n < 1) throw std::invalid_argument("factorize: argument must be >= 1");
  std::vector<std::pair<long long, int>> factors;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    factors.emplace_back(p, e);
  }
  if (n > 1) factors.emplace_back(n, 1);
  return factors;
}

/// Number of prime factors counted with multiplicity (big Omega).
inline int prime_factor_count(long long n) {
  if (n < 2) throw std::invalid_argument("prime_factor_count: argument must be >= 2");
  int count = 0;
  for (const auto& [p, e] : factorize(n)) count += e;
  return count;
}

inline bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

/// Returns (p, k) when n = p^k for a prime p and k >= 1.
inline std::optional<std::pair<long long, int>> as_prime_power(long long n) {
  if (n < 2) return std::nullopt;
  auto factors = factorize(n);
  if (factors.size() != 1) return std::nullopt;
  return factors.front();
}

inline long long lcm_ll(long long a, long long b) { return std::lcm(a, b); }

}  // namespace baseset
