#pragma once

// Smallest candidate order (p^n)^3 (p^n - 1)/(p^(n/d) - 1) d for a diameter-three group
// with the parameters allowed by the structure theorem: d | n, d > 1, gcd(d, p^n - 1) = 1
// and d divisible by two distinct odd primes.

#include <numeric>
#include <optional>

#include "numtheory.hpp"

namespace cdg {

struct OrderCandidate {
  u64 p = 0;
  unsigned n = 0;
  unsigned d = 0;
  BigInt order;
};

inline BigInt candidate_order(u64 p, unsigned n, unsigned d) {
  BigInt q = big_pow(p, n);
  return q * q * q * ((q - 1) / (big_pow(p, n / d) - 1)) * d;
}

inline bool admissible_d(u64 p, unsigned n, unsigned d) {
  if (d < 2 || n % d != 0) return false;
  std::size_t odd = 0;
  for (u64 r : prime_divisors(d)) odd += r % 2;
  if (odd < 2) return false;
  const u64 q1 = checked_pow(p, n) - 1;
  return std::gcd<u64, u64>(d, q1) == 1;
}

/// Minimum over all admissible (p, n, d) with p^n <= bound; nullopt when none exists.
/// Ties (none occur in range) go to the smaller p^n.
inline std::optional<OrderCandidate> minimal_order_search(u64 bound) {
  std::optional<OrderCandidate> best;
  for (unsigned n = 1; n < 64; ++n) {
    std::size_t odd = 0;
    for (u64 r : prime_divisors(n)) odd += r % 2;
    if (odd < 2) continue;  // no admissible d divides n
    for (u64 p = 2;; p = p == 2 ? 3 : p + 2) {
      if (!is_prime(p)) continue;
      // p^n <= bound, without overflow
      u64 q = 1;
      bool over = false;
      for (unsigned i = 0; i < n && !over; ++i) {
        if (q > bound / p) over = true;
        else q *= p;
      }
      if (over) break;
      for (u64 dd : divisors(n)) {
        const auto d = static_cast<unsigned>(dd);
        if (!admissible_d(p, n, d)) continue;
        BigInt ord = candidate_order(p, n, d);
        if (!best || ord < best->order) best = OrderCandidate{p, n, d, ord};
      }
    }
  }
  return best;
}

}  // namespace cdg
