#include "core/expsum.hpp"

#include <chrono>
#include <stdexcept>
#include <numeric>
#include <vector>

namespace pq::expsum {

namespace {

using fracpart::QuotientKind;
using fracpart::UnitFrac;

QuotientKind quotient_for(SumKind kind) {
  switch (kind) {
    case SumKind::S: return QuotientKind::H;
    case SumKind::STilde: return QuotientKind::HTilde;
    case SumKind::TOpen: return QuotientKind::F;
    default: return QuotientKind::FTilde;
  }
}

const char* name_of(SumKind kind) {
  switch (kind) {
    case SumKind::S: return "S";
    case SumKind::STilde: return "Stilde";
    case SumKind::TOpen: return "Topen";
    default: return "Ttildeopen";
  }
}

double now_seconds() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

}  // namespace

SumReport single_sum(SumKind kind, u64 g, i64 a, u64 limit,
                     const arith::LpfSieve& sieve, bool include_primes,
                     unsigned threads) {
  if (a == 0) throw std::invalid_argument("single_sum: a must be nonzero");
  if (g < 2) throw std::invalid_argument("single_sum: g must be >= 2");
  if (limit < 2 || limit > sieve.limit())
    throw std::invalid_argument("single_sum: limit out of sieve range");

  double t0 = now_seconds();
  QuotientKind q = quotient_for(kind);
  CSum total = chunked_reduce(1, limit, threads, [&](u64 first, u64 last, CSum& acc) {
    for (u64 n = first; n <= last; ++n) {
      if (!sieve.is_composite(n) && !(include_primes && sieve.is_prime(n))) continue;
      acc.add(fracpart::unit_e_scaled(a, fracpart::frac_quotient(q, g, n, &sieve)));
    }
  });

  SumReport r;
  r.kind = name_of(kind);
  r.g = g;
  r.a = a;
  r.limit = limit;
  r.value = total.value();
  r.term_count = total.terms;
  r.include_primes = include_primes;
  r.elapsed_s = now_seconds() - t0;
  return r;
}

SumReport double_sum(WSumKind kind, i64 a, u64 limit,
                     const arith::LpfSieve& sieve, unsigned threads) {
  if (a == 0) throw std::invalid_argument("double_sum: a must be nonzero");
  if (limit < 2 || limit > sieve.limit())
    throw std::invalid_argument("double_sum: limit out of sieve range");

  double t0 = now_seconds();
  bool tilde = kind == WSumKind::WTilde;
  CSum total = chunked_reduce(1, limit, threads, [&](u64 first, u64 last, CSum& acc) {
    for (u64 n = first; n <= last; ++n) {
      if (!sieve.is_composite(n)) continue;
      for (u64 g = 1; g < n; ++g) {
        if (std::gcd(g, n) != 1) continue;
        u64 t = powmod(g, n - 1, n);  // the one exponentiation per (n, g)
        u64 num = tilde ? (mulmod(t, g, n) + n - g) % n : (t + n - 1) % n;
        acc.add(fracpart::unit_e_scaled(a, UnitFrac{num, n}));
      }
    }
  });

  SumReport r;
  r.kind = tilde ? "Wtilde" : "W";
  r.a = a;
  r.limit = limit;
  r.value = total.value();
  r.term_count = total.terms;
  r.elapsed_s = now_seconds() - t0;
  return r;
}

std::complex<double> complete_power_sum_direct(i64 a, u64 k, u64 n) {
  if (n < 2) throw std::invalid_argument("complete_power_sum: n must be >= 2");
  if (k < 1) throw std::invalid_argument("complete_power_sum: k must be >= 1");
  u64 mult = u64(((a % i64(n)) + i64(n)) % i64(n));
  CSum acc;
  for (u64 g = 1; g < n; ++g) {
    if (std::gcd(g, n) != 1) continue;
    acc.add(fracpart::unit_e({mulmod(mult, powmod(g, k, n), n), n}));
  }
  return acc.value();
}

namespace {

u64 inverse_mod(u64 a, u64 m) {
  i64 t = 0, new_t = 1;
  i64 r = i64(m), new_r = i64(a % m);
  while (new_r != 0) {
    i64 q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) throw std::invalid_argument("inverse_mod: not invertible");
  return u64(t < 0 ? t + i64(m) : t);
}

}  // namespace

std::complex<double> complete_power_sum_crt(i64 a, u64 k, u64 n) {
  if (n < 2) throw std::invalid_argument("complete_power_sum: n must be >= 2");
  auto f = arith::factor(n);
  std::complex<double> product{1.0, 0.0};
  for (auto [p, e] : f.factors) {
    u64 part = 1;
    for (u32 i = 0; i < e; ++i) part *= p;
    u64 cofactor = n / part;
    u64 twist = cofactor == 1 ? 1 : inverse_mod(cofactor % part, part);
    u64 mult = mulmod(u64(((a % i64(part)) + i64(part)) % i64(part)), twist, part);
    product *= complete_power_sum_direct(i64(mult), k, part);
  }
  return product;
}

std::complex<double> complete_power_sum(i64 a, u64 k, u64 n) {
  if (n > 10'000'000ull) throw std::invalid_argument("complete_power_sum: n exceeds 10^7");
  return n > 10'000 ? complete_power_sum_crt(a, k, n) : complete_power_sum_direct(a, k, n);
}

WeilCrtBound weil_crt_bound(i64 a, u64 k, u64 n) {
  if (n < 2) throw std::invalid_argument("weil_crt_bound: n must be >= 2");
  auto f = arith::factor(n);
  auto [rho, s] = arith::rho_and_powerful(f);
  u64 abs_a = a < 0 ? u64(-a) : u64(a);

  double proof = double(s);
  for (auto [p, e] : f.factors) {
    if (e != 1) continue;  // only primes of rho(n)
    if (abs_a % p == 0)
      proof *= double(p);
    else
      proof *= double(std::gcd(k, p - 1)) * std::sqrt(double(p));
  }

  u64 d = abs_a == 0 ? n : std::gcd(abs_a, n);
  double statement = double(n) * std::sqrt(double(d)) *
                     double(arith::gamma_false_witness(f)) / std::sqrt(double(rho));
  return {proof, statement};
}

std::complex<double> short_sum(i64 a, u64 g, u64 p, u64 len) {
  if (!arith::is_prime(p)) throw std::invalid_argument("short_sum: p must be prime");
  if (g % p == 0) throw std::invalid_argument("short_sum: p divides g");
  if (g < 2) throw std::invalid_argument("short_sum: g must be >= 2");
  u64 r = g % p;
  u64 cur = r;
  CSum acc;
  for (u64 m = 1; m <= len; ++m) {
    acc.add(fracpart::unit_e_scaled(a, UnitFrac{cur, p}));
    cur = mulmod(cur, r, p);
  }
  return acc.value();
}

namespace {

void check_counter_budget(u64 tuple_positions, u64 k_range) {
  long double cost = (long double)tuple_positions;
  for (u64 i = 0; i < tuple_positions; ++i) cost *= (long double)k_range;
  if (cost > 1e8L) throw std::length_error("counter budget exceeded: s*K^s > 10^8");
}

// Odometer over (r_1..r_s) in [1,K]^s; calls visit(sum of signed powers mod p).
template <typename Visit>
void enumerate_power_tuples(u64 p, u32 positions, u64 k_range, u64 g, bool alternating,
                            Visit visit) {
  std::vector<u64> pw(k_range + 1);
  pw[0] = 1 % p;
  for (u64 r = 1; r <= k_range; ++r) pw[r] = mulmod(pw[r - 1], g % p, p);

  std::vector<u64> idx(positions, 1);
  auto signed_term = [&](u32 i, u64 r) {
    // (-1)^i with 1-based i: odd positions negative.
    u64 v = pw[r];
    return (alternating && (i % 2 == 0)) ? (p - v) % p : v;
  };
  u64 sum = 0;
  for (u32 i = 0; i < positions; ++i) sum = (sum + signed_term(i, 1)) % p;
  while (true) {
    visit(sum);
    u32 i = 0;
    for (; i < positions; ++i) {
      sum = (sum + p - signed_term(i, idx[i])) % p;
      if (idx[i] < k_range) {
        ++idx[i];
        sum = (sum + signed_term(i, idx[i])) % p;
        break;
      }
      idx[i] = 1;
      sum = (sum + signed_term(i, 1)) % p;
    }
    if (i == positions) return;
  }
}

}  // namespace

u64 count_r(u64 p, u32 s, u64 k_range, u64 lambda, u64 g) {
  if (!arith::is_prime(p)) throw std::invalid_argument("count_r: p must be prime");
  if (g % p == 0) throw std::invalid_argument("count_r: p divides g");
  if (s < 1 || k_range < 1) throw std::invalid_argument("count_r: s and K must be >= 1");
  if (lambda >= p) throw std::invalid_argument("count_r: lambda must be a residue mod p");
  check_counter_budget(s, k_range);
  u64 count = 0;
  enumerate_power_tuples(p, s, k_range, g, false, [&](u64 sum) {
    if (sum == lambda) ++count;
  });
  return count;
}

u64 count_t(u64 p, u32 s, u64 k_range, u64 g) {
  if (!arith::is_prime(p)) throw std::invalid_argument("count_t: p must be prime");
  if (g % p == 0) throw std::invalid_argument("count_t: p divides g");
  if (s < 1 || k_range < 1) throw std::invalid_argument("count_t: s and K must be >= 1");
  check_counter_budget(2 * u64(s), k_range);
  u64 count = 0;
  enumerate_power_tuples(p, 2 * s, k_range, g, true, [&](u64 sum) {
    if (sum == 0) ++count;
  });
  return count;
}

u64 count_l(i64 a, u64 n, u64 s) {
  if (n < 2) throw std::invalid_argument("count_l: n must be >= 2");
  if (n > 1'000'000ull) throw std::invalid_argument("count_l: n exceeds enumeration bound");
  u64 am = u64(((a % i64(n)) + i64(n)) % i64(n));
  u64 count = 0;
  for (u64 x = 1; x < n; ++x) {
    if (std::gcd(x, n) != 1) continue;
    if (mulmod(am, powmod(x, s, n), n) == am) ++count;
  }
  return count;
}

u64 count_m(i64 a, u64 n, u64 s) {
  if (n < 2) throw std::invalid_argument("count_m: n must be >= 2");
  if (n > 1'000'000ull) throw std::invalid_argument("count_m: n exceeds enumeration bound");
  u64 am = u64(((a % i64(n)) + i64(n)) % i64(n));
  // Histogram of a x^s over units; pairs with equal value are exactly the
  // solutions of a x^s = a y^s.
  std::vector<u64> hits(n, 0);
  for (u64 x = 1; x < n; ++x) {
    if (std::gcd(x, n) != 1) continue;
    ++hits[mulmod(am, powmod(x, s, n), n)];
  }
  u64 pairs = 0;
  for (u64 v : hits) pairs += v * v;
  return pairs;
}

std::pair<u64, u64> ds_pair(u64 n) {
  if (n < 2) throw std::invalid_argument("ds_pair: n must be >= 2");
  u64 lam = arith::carmichael_lambda(n);
  u64 d = std::gcd(n, lam);
  return {d, lam / d};
}

}  // namespace pq::expsum
