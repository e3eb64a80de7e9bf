#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "error.hpp"

namespace cutgroup {

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw Error(ErrorCode::overflow, "64-bit overflow in integer product");
  }
  return out;
}

inline std::uint64_t checked_lcm(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return checked_mul(a / std::gcd(a, b), b);
}

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

// Modular inverse for prime modulus.
inline std::uint64_t inv_mod_prime(std::uint64_t a, std::uint64_t p) {
  return pow_mod(a, p - 2, p);
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

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

// Largest power of p dividing n.
inline std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t part = 1;
  while (n % p == 0) {
    n /= p;
    part *= p;
  }
  return part;
}

inline bool is_power_of(std::uint64_t n, std::uint64_t p) {
  return n >= 1 && p_part(n, p) == n;
}

inline std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t result = n;
  for (auto q : prime_divisors(n)) result = result / q * (q - 1);
  return result;
}

// Units of Z/e in increasing order, represented in [1, e); for e = 1 this is {1}.
inline std::vector<std::uint64_t> units_mod(std::uint64_t e) {
  std::vector<std::uint64_t> out;
  if (e == 1) {
    out.push_back(1);
    return out;
  }
  for (std::uint64_t k = 1; k < e; ++k) {
    if (std::gcd(k, e) == 1) out.push_back(k);
  }
  return out;
}

inline std::uint64_t least_primitive_root(std::uint64_t p) {
  if (p == 2) return 1;
  const auto factors = prime_divisors(p - 1);
  for (std::uint64_t g = 2; g < p; ++g) {
    bool ok = true;
    for (auto q : factors) {
      if (pow_mod(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw Error(ErrorCode::internal, "no primitive root found");
}

}  // namespace cutgroup
