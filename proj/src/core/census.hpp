#pragma once

#include <vector>

#include "core/arith.hpp"
#include "core/fracpart.hpp"
#include "core/ints.hpp"

namespace pq::census {

// Census counts come with a reference comparator where the classical
// estimate suggests one; comparators are reported, never asserted (their
// implied constants are unspecified).

struct SmoothReport {
  u64 count = 0;
  double u = 0.0;          // log x / log y, log = max(ln, 1)
  double reference = 0.0;  // x * u^{-u}
};

// Exact Psi(x, y) = #{n <= x : P(n) <= y}; includes n = 1.
SmoothReport psi_smooth(u64 x, u64 y, const arith::LpfSieve& sieve);

struct CountReport {
  u64 count = 0;
  double comparator = 0.0;
};

// #{n <= x : rho(n) <= n/y}, comparator x / sqrt(y).
CountReport rho_exceptional_count(u64 x, double y, const arith::LpfSieve& sieve);

// #{composite n <= x : gamma(n) > z} (all n when composite_only is false),
// comparator x * exp(-sqrt(0.5 log z log log z)).
CountReport gamma_exceedance_count(u64 x, u64 z, const arith::LpfSieve& sieve,
                                   bool composite_only = true);

// #{n <= x : y < P(n) <= y(1+delta)}, comparator x log(1+delta)/log y.
CountReport lpf_interval_count(u64 x, u64 y, double delta, const arith::LpfSieve& sieve);

// Thresholds for the prime classes: p is in Q when
//   tau(p-1) <= (log p)^c1  and  t_p > p^theta (log p)^beta,
// log = max(ln, 1). The default thresholds (2, 1/2, 10) leave Q empty at
// any reachable scale, so relaxed parameters are first-class.
struct PrimeClassParams {
  double tau_exponent = 2.0;    // c1
  double order_root = 0.5;      // theta
  double order_log_exp = 10.0;  // beta
};

struct PrimeClassRecord {
  u64 p = 0;
  u64 tau_pm1 = 0;
  u64 t_p = 0;
  bool in_q = false;
};

struct PrimeClassCensus {
  u64 x = 0;
  u64 g = 0;
  PrimeClassParams params;
  std::vector<PrimeClassRecord> records;  // primes p <= x with p not dividing g
  u64 n_primes = 0;                       // pi(x)
  u64 n_skipped = 0;                      // primes dividing g (classified into R)
  u64 n_in_q = 0;
  u64 n_in_r = 0;  // n_primes - n_in_q
};

PrimeClassCensus prime_class_census(u64 x, u64 g, PrimeClassParams params,
                                    const arith::LpfSieve& sieve);

// Sorted composite n <= limit with g^{n-1} = 1 mod n.
std::vector<u64> pseudoprime_census(u64 limit, u64 g, const arith::LpfSieve& sieve);

// Korselt criterion: composite, squarefree, p-1 | n-1 for every p | n.
std::vector<u64> carmichael_list(u64 limit, const arith::LpfSieve& sieve);

struct TsetMember {
  u64 m = 0;
  u64 p = 0;
  u64 n = 0;  // n = m * p
  fracpart::UnitFrac frac_h;
};

struct TsetRecord {
  u64 limit = 0;
  u64 g = 0;
  u64 m_max = 0;            // floor(ln N / (6 ln g))
  double frac_bound = 0.0;  // N^{-1/2}
  std::vector<TsetMember> members;
  bool all_below_bound = true;
};

// The lower-bound construction: all n = m p <= N with m <= ln N/(6 ln g)
// and N^{2/3} < p <= N/m; membership fractions {h_g(mp)} are recorded and
// checked against N^{-1/2}. Empty T is a valid (warned) outcome.
TsetRecord build_tset(u64 limit, u64 g, const arith::LpfSieve& sieve);

}  // namespace pq::census
