#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "core/ints.hpp"

namespace pq::arith {

// Exact prime-power decomposition, primes strictly increasing.
// factors empty exactly when value == 1.
struct Factorization {
  u64 value = 1;
  std::vector<std::pair<u64, u32>> factors;

  u64 reconstruct() const {
    u64 n = 1;
    for (auto [p, e] : factors)
      for (u32 i = 0; i < e; ++i) n *= p;
    return n;
  }
};

// Deterministic Miller-Rabin, valid for all n < 2^64.
bool is_prime(u64 n);

// Trial division for small factors, Brent-Pollard rho above; rejects n = 0.
Factorization factor(u64 n);

// Largest/smallest prime factor tables for 1..limit, lpf[1] = spf[1] = 1.
class LpfSieve {
 public:
  explicit LpfSieve(u64 limit);

  u64 limit() const { return limit_; }
  u64 lpf(u64 n) const { return lpf_[n]; }
  u64 spf(u64 n) const { return spf_[n]; }
  bool is_prime(u64 n) const { return n >= 2 && spf_[n] == n; }
  bool is_composite(u64 n) const { return n >= 4 && spf_[n] != n; }

  // Walks the spf table; n must be <= limit.
  Factorization factor(u64 n) const;

  // Cache file: "LPFSIEVE" magic, u32 version, u64 limit, lpf[1..limit] as
  // little-endian u64. Loader checks magic/version and spot-checks 100
  // entries against recomputation; spf is rebuilt on load.
  void save(const std::string& path) const;
  static LpfSieve load(const std::string& path);

 private:
  LpfSieve() = default;
  void rebuild_spf();

  u64 limit_ = 0;
  std::vector<u32> lpf_;
  std::vector<u32> spf_;
};

// P(n); P(1) = 1. Sieve lookup when available, factorization otherwise.
u64 largest_prime_factor(u64 n, const LpfSieve* sieve = nullptr);

// (rho, s): rho the largest squarefree unitary divisor, s = n/rho powerful.
std::pair<u64, u64> rho_and_powerful(u64 n);
std::pair<u64, u64> rho_and_powerful(const Factorization& f);

// gamma(n) = prod_{p|n} gcd(n-1, p-1), the count of false witnesses mod n.
u64 gamma_false_witness(u64 n);
u64 gamma_false_witness(const Factorization& f);

// Carmichael function; lambda(2^a) = 2^{a-2} for a >= 3, lambda(1) = 1.
u64 carmichael_lambda(u64 n);
u64 carmichael_lambda(const Factorization& f);

u64 euler_phi(u64 n);
u64 euler_phi(const Factorization& f);
u64 tau(u64 n);

// Least t >= 1 with g^t = 1 mod p; factors p-1 and strips prime factors.
// Rejects non-prime p and p | g.
u64 mult_order(u64 g, u64 p);

}  // namespace pq::arith
