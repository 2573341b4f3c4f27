#pragma once

#include <cstdint>

#include "ladder/errors.hpp"

namespace ladder {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;

// Residues live in [0, p). Products go through a 64-bit intermediate, so
// every modulus below 2^31 is safe; the target range (p < 25,000) has a
// huge margin. No floating point anywhere.

inline u32 add_mod(u32 a, u32 b, u32 p) {
  u32 s = a + b;
  return s >= p ? s - p : s;
}

inline u32 sub_mod(u32 a, u32 b, u32 p) { return a >= b ? a - b : a + p - b; }

inline u32 neg_mod(u32 a, u32 p) { return a == 0 ? 0 : p - a; }

inline u32 mul_mod(u32 a, u32 b, u32 p) {
  return static_cast<u32>(static_cast<u64>(a) * b % p);
}

// Reduce an arbitrary signed integer into [0, p).
inline u32 norm_mod(i64 x, u32 p) {
  i64 r = x % static_cast<i64>(p);
  if (r < 0) r += p;
  return static_cast<u32>(r);
}

// base^exponent mod p, p prime. Negative exponents go through the
// modular inverse; throws ZeroToNegativePower when base == 0 mod p.
inline u32 pow_mod(u32 base, i64 exponent, u32 p) {
  base %= p;
  u64 e;
  if (exponent < 0) {
    if (base == 0) throw ZeroToNegativePower();
    // a^(-n) = (a^(p-2))^n for prime p.
    u64 n = static_cast<u64>(-(exponent + 1)) + 1;
    e = (n % (p - 1)) * static_cast<u64>(p - 2) % (p - 1);
  } else {
    e = static_cast<u64>(exponent);
  }
  u64 r = 1, b = base;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<u32>(r);
}

inline u32 inv_mod(u32 a, u32 p) { return pow_mod(a, -1, p); }

inline bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d : {2ull, 3ull, 5ull}) {
    if (n % d == 0) return n == d;
  }
  // wheel over residues coprime to 30
  static const u64 wheel[] = {1, 7, 11, 13, 17, 19, 23, 29};
  for (u64 base = 0;; base += 30) {
    for (u64 off : wheel) {
      u64 d = base + off;
      if (d < 7) continue;
      if (d * d > n) return true;
      if (n % d == 0) return false;
    }
  }
}

// Smallest prime strictly greater than n.
inline u64 next_prime(u64 n) {
  u64 m = n + 1;
  while (!is_prime(m)) ++m;
  return m;
}

}  // namespace ladder
