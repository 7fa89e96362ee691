#pragma once

#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "bswidth/error.hpp"

namespace bsw {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Distinct prime divisors, ascending.
inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw MathError("integer overflow in group order");
  return r;
}

inline std::uint64_t ipow(std::uint64_t base, unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) r = checked_mul(r, base);
  return r;
}

/// If q is a prime power p^k, returns {p, k}; otherwise {0, 0}.
inline std::pair<std::uint64_t, unsigned> prime_power(std::uint64_t q) {
  if (q < 2) return {0, 0};
  auto ps = prime_divisors(q);
  if (ps.size() != 1) return {0, 0};
  unsigned k = 0;
  while (q > 1) {
    q /= ps[0];
    ++k;
  }
  return {ps[0], k};
}

}  // namespace bsw
