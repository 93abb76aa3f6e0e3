#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>

namespace pq {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

inline u64 mulmod(u64 a, u64 b, u64 m) { return u64((u128)a * b % m); }

// Square-and-multiply on residues; powmod(_, _, 1) == 0.
inline u64 powmod(u64 base, u64 exp, u64 mod) {
  if (mod == 1) return 0;
  u64 r = 1;
  base %= mod;
  while (exp) {
    if (exp & 1) r = mulmod(r, base, mod);
    base = mulmod(base, base, mod);
    exp >>= 1;
  }
  return r;
}

// Reduce a (possibly negative) multiplier times num into [0, mod).
inline u64 mulmod_signed(i64 a, u64 num, u64 mod) {
  i128 v = (i128)a * (i128)num % (i128)mod;
  if (v < 0) v += mod;
  return u64(v);
}

// lcm on values that stay below 2^63; intermediate quotient avoids overflow.
inline u64 lcm_u64(u64 a, u64 b) {
  if (a == 0 || b == 0) return 0;
  return a / std::gcd(a, b) * b;
}

// Convention used by every threshold and comparator: log x = max(ln x, 1).
inline double conv_log(double x) { return std::max(std::log(x), 1.0); }

}  // namespace pq
