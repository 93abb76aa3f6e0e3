#include "core/census.hpp"

#include <cmath>
#include <stdexcept>

namespace pq::census {

SmoothReport psi_smooth(u64 x, u64 y, const arith::LpfSieve& sieve) {
  if (x < 2 || y < 2) throw std::invalid_argument("psi_smooth: x and y must be >= 2");
  if (x > sieve.limit()) throw std::invalid_argument("psi_smooth: x exceeds sieve limit");
  SmoothReport r;
  for (u64 n = 1; n <= x; ++n)
    if (sieve.lpf(n) <= y) ++r.count;
  r.u = conv_log(double(x)) / conv_log(double(y));
  r.reference = double(x) * std::pow(r.u, -r.u);
  return r;
}

CountReport rho_exceptional_count(u64 x, double y, const arith::LpfSieve& sieve) {
  if (x < 1 || y < 1.0) throw std::invalid_argument("rho_exceptional_count: need x >= y >= 1");
  if (x > sieve.limit()) throw std::invalid_argument("rho_exceptional_count: x exceeds sieve limit");
  CountReport r;
  for (u64 n = 1; n <= x; ++n) {
    auto [rho, s] = arith::rho_and_powerful(sieve.factor(n));
    // rho <= n/y  <=>  powerful part s >= y
    if (double(s) >= y) ++r.count;
  }
  r.comparator = double(x) / std::sqrt(y);
  return r;
}

CountReport gamma_exceedance_count(u64 x, u64 z, const arith::LpfSieve& sieve,
                                   bool composite_only) {
  if (x < 2) throw std::invalid_argument("gamma_exceedance_count: x must be >= 2");
  if (x > sieve.limit()) throw std::invalid_argument("gamma_exceedance_count: x exceeds sieve limit");
  CountReport r;
  for (u64 n = 2; n <= x; ++n) {
    if (composite_only && !sieve.is_composite(n)) continue;
    if (arith::gamma_false_witness(sieve.factor(n)) > z) ++r.count;
  }
  double lz = conv_log(double(z));
  r.comparator = double(x) * std::exp(-std::sqrt(0.5 * lz * conv_log(lz)));
  return r;
}

CountReport lpf_interval_count(u64 x, u64 y, double delta, const arith::LpfSieve& sieve) {
  if (x > sieve.limit()) throw std::invalid_argument("lpf_interval_count: x exceeds sieve limit");
  if (y < 2 || delta <= 0.0) throw std::invalid_argument("lpf_interval_count: need y >= 2, delta > 0");
  double hi = double(y) * (1.0 + delta);
  CountReport r;
  for (u64 n = 1; n <= x; ++n) {
    u64 p = sieve.lpf(n);
    if (double(p) > double(y) && double(p) <= hi) ++r.count;
  }
  r.comparator = double(x) * std::log1p(delta) / conv_log(double(y));
  return r;
}

PrimeClassCensus prime_class_census(u64 x, u64 g, PrimeClassParams params,
                                    const arith::LpfSieve& sieve) {
  if (x > sieve.limit()) throw std::invalid_argument("prime_class_census: x exceeds sieve limit");
  if (x > 10'000'000ull) throw std::invalid_argument("prime_class_census: x exceeds 10^7");
  if (g < 2) throw std::invalid_argument("prime_class_census: g must be >= 2");
  PrimeClassCensus c;
  c.x = x;
  c.g = g;
  c.params = params;
  for (u64 p = 2; p <= x; ++p) {
    if (!sieve.is_prime(p)) continue;
    ++c.n_primes;
    if (g % p == 0) {
      ++c.n_skipped;  // t_p undefined; p lands in R
      continue;
    }
    PrimeClassRecord rec;
    rec.p = p;
    auto pm1 = sieve.factor(p - 1);
    rec.tau_pm1 = 1;
    for (auto [q, e] : pm1.factors) rec.tau_pm1 *= e + 1;
    // Same order algorithm as arith::mult_order, with the sieve doing the
    // factoring of p-1.
    u64 t = p - 1;
    for (auto [q, e] : pm1.factors)
      for (u32 i = 0; i < e; ++i) {
        if (powmod(g, t / q, p) == 1)
          t /= q;
        else
          break;
      }
    rec.t_p = t;
    double lp = conv_log(double(p));
    rec.in_q = double(rec.tau_pm1) <= std::pow(lp, params.tau_exponent) &&
               double(rec.t_p) > std::pow(double(p), params.order_root) *
                                     std::pow(lp, params.order_log_exp);
    if (rec.in_q) ++c.n_in_q;
    c.records.push_back(rec);
  }
  c.n_in_r = c.n_primes - c.n_in_q;
  return c;
}

std::vector<u64> pseudoprime_census(u64 limit, u64 g, const arith::LpfSieve& sieve) {
  if (limit > sieve.limit()) throw std::invalid_argument("pseudoprime_census: limit exceeds sieve");
  if (g < 2) throw std::invalid_argument("pseudoprime_census: g must be >= 2");
  std::vector<u64> out;
  for (u64 n = 4; n <= limit; ++n)
    if (sieve.is_composite(n) && powmod(g, n - 1, n) == 1) out.push_back(n);
  return out;
}

std::vector<u64> carmichael_list(u64 limit, const arith::LpfSieve& sieve) {
  if (limit > sieve.limit()) throw std::invalid_argument("carmichael_list: limit exceeds sieve");
  std::vector<u64> out;
  for (u64 n = 4; n <= limit; ++n) {
    if (!sieve.is_composite(n)) continue;
    bool ok = true;
    u64 rest = n;
    while (rest > 1 && ok) {
      u64 p = sieve.spf(rest);
      rest /= p;
      if (rest % p == 0 || (n - 1) % (p - 1) != 0) ok = false;
    }
    if (ok) out.push_back(n);
  }
  return out;
}

TsetRecord build_tset(u64 limit, u64 g, const arith::LpfSieve& sieve) {
  if (g < 2) throw std::invalid_argument("build_tset: g must be >= 2");
  if (limit < 2 || limit > sieve.limit()) throw std::invalid_argument("build_tset: bad limit");
  TsetRecord t;
  t.limit = limit;
  t.g = g;
  // Plain natural logs here: the construction's m-range must not be
  // clamped by the log >= 1 convention or small bases would lose members.
  t.m_max = u64(std::floor(std::log(double(limit)) / (6.0 * std::log(double(g)))));
  t.frac_bound = 1.0 / std::sqrt(double(limit));
  double p_lo = std::pow(double(limit), 2.0 / 3.0);
  for (u64 m = 1; m <= t.m_max; ++m) {
    u64 p_hi = limit / m;
    for (u64 p = u64(p_lo) + 1; p <= p_hi; ++p) {
      if (!sieve.is_prime(p)) continue;
      if (double(p) <= p_lo) continue;
      TsetMember mem;
      mem.m = m;
      mem.p = p;
      mem.n = m * p;
      mem.frac_h = fracpart::frac_quotient(fracpart::QuotientKind::H, g, mem.n, &sieve);
      if (mem.frac_h.value() >= t.frac_bound) t.all_below_bound = false;
      t.members.push_back(mem);
    }
  }
  return t;
}

}  // namespace pq::census
