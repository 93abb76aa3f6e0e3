#pragma once

#include <complex>
#include <string>
#include <utility>

#include "core/arith.hpp"
#include "core/csum.hpp"
#include "core/fracpart.hpp"

namespace pq::expsum {

// Single sums over composite n <= N: S uses h_g, STilde uses h~_g, and the
// open-problem sums TOpen / TTildeOpen use f_g / f~_g.
enum class SumKind { S, STilde, TOpen, TTildeOpen };

// Double sums over composite n <= N and units g mod n.
enum class WSumKind { W, WTilde };

struct SumReport {
  std::string kind;
  u64 g = 0;  // 0 for double sums
  i64 a = 0;
  u64 limit = 0;
  std::complex<double> value;
  u64 term_count = 0;
  bool include_primes = false;
  double elapsed_s = 0.0;
};

// Sum of e(a * quotient(g, n)) over composite n <= limit (primes too when
// include_primes). Rejects a = 0 and g < 2.
SumReport single_sum(SumKind kind, u64 g, i64 a, u64 limit,
                     const arith::LpfSieve& sieve, bool include_primes = false,
                     unsigned threads = 1);

// Sum over composite n <= limit and g in [1,n] coprime to n of e(a f_g(n))
// (W) or e(a f~_g(n)) (WTilde); one modular exponentiation per (n, g).
// term_count is the number of accumulated (n, g) pairs. Rejects a = 0.
SumReport double_sum(WSumKind kind, i64 a, u64 limit,
                     const arith::LpfSieve& sieve, unsigned threads = 1);

// Complete sum over units: sum_{g mod n, gcd(g,n)=1} e(a g^k / n).
// Definition path for n <= 10^4, CRT product path above; both are exposed
// so tests can cross-check them.
std::complex<double> complete_power_sum(i64 a, u64 k, u64 n);
std::complex<double> complete_power_sum_direct(i64 a, u64 k, u64 n);
std::complex<double> complete_power_sum_crt(i64 a, u64 k, u64 n);

// Proof-level bound s * prod_{p | rho(n), p∤a} gcd(k,p-1) sqrt(p)
//                     * prod_{p | rho(n), p|a} p,
// and the statement-level value n sqrt(gcd(a,n)) gamma(n) / sqrt(rho(n)).
// Assertions elsewhere use proof_bound; both are reported.
struct WeilCrtBound {
  double proof_bound = 0.0;
  double statement_bound = 0.0;
};
WeilCrtBound weil_crt_bound(i64 a, u64 k, u64 n);

// sum_{m=1..len} e(a g^m / p) by iterated residue multiplication.
std::complex<double> short_sum(i64 a, u64 g, u64 p, u64 len);

// R_{p,s}(K, lambda): tuples (r_1..r_s) in [1,K]^s with sum g^{r_i} = lambda
// mod p. Direct enumeration; rejects runs with s * K^s > 10^8.
u64 count_r(u64 p, u32 s, u64 k_range, u64 lambda, u64 g);

// T_{p,s}(K): tuples in [1,K]^{2s} with alternating-sign power sum = 0 mod p.
u64 count_t(u64 p, u32 s, u64 k_range, u64 g);

// L_a(n,s) = #{x unit mod n : a x^s = a}, M_a(n,s) = #{(x,y) units :
// a x^s = a y^s}. M is counted independently (value histogram), so the
// identity M = phi(n) L is testable rather than built in.
u64 count_l(i64 a, u64 n, u64 s);
u64 count_m(i64 a, u64 n, u64 s);

// (d_n, s_n) with d_n = gcd(n, lambda(n)), s_n = lambda(n)/d_n.
std::pair<u64, u64> ds_pair(u64 n);

}  // namespace pq::expsum
