#include "verify/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdarg>
#include <cstdio>
#include <map>
#include <memory>
#include <numeric>
#include <random>
#include <span>
#include <thread>

#include "core/arith.hpp"
#include "core/census.hpp"
#include "core/equidist.hpp"
#include "core/expsum.hpp"
#include "core/fracpart.hpp"
#include "verify/goldens.hpp"

namespace pq::verify {

namespace {

using arith::LpfSieve;
using fracpart::QuotientKind;
using fracpart::UnitFrac;

double now() {
  return std::chrono::duration<double>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

// Sieves shared across suites of one run.
struct Context {
  std::map<u64, std::unique_ptr<LpfSieve>> sieves;

  const LpfSieve& sieve(u64 limit) {
    auto& slot = sieves[limit];
    if (!slot) slot = std::make_unique<LpfSieve>(limit);
    return *slot;
  }
};

std::string fmt(const char* f, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof buf, f, ap);
  va_end(ap);
  return buf;
}

// The fractional parts {h_g(n)} over composite n <= limit.
std::vector<UnitFrac> h_sequence(u64 g, u64 limit, const LpfSieve& sieve) {
  std::vector<UnitFrac> pts;
  for (u64 n = 4; n <= limit; ++n)
    if (sieve.is_composite(n))
      pts.push_back(fracpart::frac_quotient(QuotientKind::H, g, n, &sieve));
  return pts;
}

// ---- criterion 1 ------------------------------------------------------

CriterionResult c01_gamma_oracle(Context& ctx, const Options&) {
  double t0 = now();
  const auto& sieve = ctx.sieve(5000);
  u64 checked = 0, bad = 0;
  for (u64 n = 4; n <= 5000; ++n) {
    if (!sieve.is_composite(n)) continue;
    u64 brute = 0;
    for (u64 u = 1; u < n; ++u)
      if (powmod(u, n - 1, n) == 1) ++brute;
    if (brute != arith::gamma_false_witness(sieve.factor(n))) ++bad;
    ++checked;
  }
  double dt = now() - t0;
  return {1, "gamma-oracle", bad == 0 && dt < 60.0,
          fmt("%llu composite n <= 5000, %llu mismatches, %.2fs",
              (unsigned long long)checked, (unsigned long long)bad, dt)};
}

// ---- criterion 2 ------------------------------------------------------

CriterionResult c02_integrality(Context& ctx, const Options&) {
  const auto& sieve = ctx.sieve(100000);
  auto psp = census::pseudoprime_census(100000, 2, sieve);
  u64 bad = 0;
  for (u64 n : psp) {
    if (fracpart::frac_quotient(QuotientKind::F, 2, n, &sieve).num != 0) ++bad;
    if (fracpart::frac_quotient(QuotientKind::H, 2, n, &sieve).num != 0) ++bad;
  }
  auto carmichael = census::carmichael_list(100000, sieve);
  std::mt19937_64 rng(0x1729);
  u64 bases = 0;
  for (u64 n : carmichael) {
    for (int i = 0; i < 50; ++i) {
      u64 g;
      do {
        g = 2 + rng() % (n - 3);
      } while (std::gcd(g, n) != 1);
      ++bases;
      if (fracpart::frac_quotient(QuotientKind::F, g, n, &sieve).num != 0) ++bad;
      if (fracpart::frac_quotient(QuotientKind::H, g, n, &sieve).num != 0) ++bad;
    }
  }
  return {2, "integrality", bad == 0,
          fmt("%zu base-2 pseudoprimes and %llu random Carmichael bases, %llu nonzero numerators",
              psp.size(), (unsigned long long)bases, (unsigned long long)bad)};
}

// ---- criterion 3 ------------------------------------------------------

CriterionResult c03_carmichael(Context& ctx, const Options&) {
  const auto& sieve = ctx.sieve(100000);
  auto live = census::carmichael_list(100000, sieve);
  bool ok = live.size() == std::size(kCarmichael100k) &&
            std::equal(live.begin(), live.end(), std::begin(kCarmichael100k));
  return {3, "carmichael-census", ok,
          fmt("%zu Carmichael numbers <= 1e5 vs frozen list of %zu", live.size(),
              std::size(kCarmichael100k))};
}

// ---- criterion 4 ------------------------------------------------------

CriterionResult c04_stilde_identity(Context& ctx, const Options& opt) {
  const auto& sieve = ctx.sieve(10000);
  u64 cases = 0, bad = 0;
  for (u64 g : {2ull, 3ull, 10ull})
    for (i64 a = 1; a <= 10; ++a)
      for (u64 n : {1000ull, 10000ull}) {
        auto tilde = expsum::single_sum(expsum::SumKind::STilde, g, a, n, sieve,
                                        false, opt.threads);
        auto plain = expsum::single_sum(expsum::SumKind::S, g, a * i64(g), n, sieve,
                                        false, opt.threads);
        ++cases;
        if (tilde.value.real() != plain.value.real() ||
            tilde.value.imag() != plain.value.imag() ||
            tilde.term_count != plain.term_count)
          ++bad;
      }
  return {4, "stilde-identity", bad == 0,
          fmt("%llu (g,a,N) cases compared bit-for-bit, %llu differed",
              (unsigned long long)cases, (unsigned long long)bad)};
}

// ---- criterion 5 ------------------------------------------------------

CriterionResult c05_weil_domination(Context& ctx, const Options&) {
  const auto& sieve = ctx.sieve(5000);
  u64 cases = 0, violations = 0;
  double worst_margin = 1e300;
  for (u64 n = 4; n <= 2000; ++n) {
    if (!sieve.is_composite(n)) continue;
    for (u64 k = 1; k <= 6; ++k)
      for (i64 a = 1; a <= 20; ++a) {
        double mag = std::abs(expsum::complete_power_sum(a, k, n));
        double bound = expsum::weil_crt_bound(a, k, n).proof_bound;
        ++cases;
        worst_margin = std::min(worst_margin, bound - mag);
        if (mag > bound + 1e-6) ++violations;
      }
  }
  return {5, "weil-crt-domination", violations == 0,
          fmt("%llu (a,k,n) cases, %llu violations, smallest bound-|sum| margin %.3g",
              (unsigned long long)cases, (unsigned long long)violations, worst_margin)};
}

// ---- criterion 6 ------------------------------------------------------

u64 egcd_inverse(u64 a, u64 m) {
  i64 t = 0, nt = 1, r = i64(m), nr = i64(a % m);
  while (nr != 0) {
    i64 q = r / nr;
    t = std::exchange(nt, t - q * nt);
    r = std::exchange(nr, r - q * nr);
  }
  return u64(t < 0 ? t + i64(m) : t);
}

CriterionResult c06_crt(Context&, const Options&) {
  std::mt19937_64 rng(0xc127);
  u64 bad = 0;
  double worst = 0.0;
  for (int trial = 0; trial < 500; ++trial) {
    u64 n1, n2;
    do {
      n1 = 2 + rng() % 99;
      n2 = 2 + rng() % (3000 / n1 - 1);
    } while (std::gcd(n1, n2) != 1);
    u64 n = n1 * n2;
    i64 a = 1 + i64(rng() % 20);
    u64 k = 1 + rng() % 6;

    auto direct = expsum::complete_power_sum_direct(a, k, n);
    // Implementation product path.
    double err1 = std::abs(expsum::complete_power_sum_crt(a, k, n) - direct);
    // Lemma-level two-factor split with explicit inverses.
    u64 r1 = egcd_inverse(n2 % n1, n1);
    u64 r2 = egcd_inverse(n1 % n2, n2);
    auto split = expsum::complete_power_sum_direct(i64(mulmod(r1, u64(a) % n1, n1)), k, n1) *
                 expsum::complete_power_sum_direct(i64(mulmod(r2, u64(a) % n2, n2)), k, n2);
    double err2 = std::abs(split - direct);
    worst = std::max({worst, err1, err2});
    if (err1 > 1e-8 || err2 > 1e-8) ++bad;
  }
  return {6, "crt-factorization", bad == 0,
          fmt("500 random coprime splits, %llu beyond 1e-8, worst error %.3g",
              (unsigned long long)bad, worst)};
}

// ---- criterion 7 ------------------------------------------------------

CriterionResult c07_rt_identities(Context&, const Options&) {
  u64 cases = 0, bad = 0;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull})
    for (u64 g : {2ull, 3ull}) {
      if (g % p == 0) continue;
      for (u32 s = 1; s <= 2; ++s)
        for (u64 K = 1; K <= 8; ++K) {
          u64 sum_r = 0, sum_r2 = 0;
          for (u64 lam = 0; lam < p; ++lam) {
            u64 r = expsum::count_r(p, s, K, lam, g);
            sum_r += r;
            sum_r2 += r * r;
          }
          u64 ks = 1;
          for (u32 i = 0; i < s; ++i) ks *= K;
          ++cases;
          if (sum_r != ks || sum_r2 != expsum::count_t(p, s, K, g)) ++bad;
        }
    }
  return {7, "rt-identities", bad == 0,
          fmt("%llu (p,g,s,K) grid points, %llu identity failures",
              (unsigned long long)cases, (unsigned long long)bad)};
}

// ---- criterion 8 ------------------------------------------------------

CriterionResult c08_m_phi_l(Context&, const Options&) {
  u64 cases = 0, bad = 0;
  for (u64 n = 2; n <= 1000; ++n) {
    u64 phi = arith::euler_phi(n);
    for (u64 s = 1; s <= 6; ++s)
      for (i64 a : {i64(0), i64(1), i64(2), i64(n - 1)}) {
        ++cases;
        if (expsum::count_m(a, n, s) != phi * expsum::count_l(a, n, s)) ++bad;
      }
  }
  return {8, "m-phi-l", bad == 0,
          fmt("%llu (n,s,a) cases, %llu failures of M = phi*L",
              (unsigned long long)cases, (unsigned long long)bad)};
}

// ---- criterion 9 ------------------------------------------------------

// Breakpoint oracle: sup over one-sided values at every jump.
double dstar_breakpoint(std::vector<double> x) {
  std::sort(x.begin(), x.end());
  double m = double(x.size());
  double best = 0.0;
  for (size_t i = 0; i < x.size(); ++i) {
    best = std::max(best, std::abs(double(i) / m - x[i]));
    best = std::max(best, std::abs(double(i + 1) / m - x[i]));
  }
  return best;
}

CriterionResult c09_discrepancy(Context& ctx, const Options& opt) {
  std::mt19937_64 rng(0xd157);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  u64 bad = 0;
  double worst = 0.0;
  for (int set = 0; set < 1000; ++set) {
    size_t n = 1 + rng() % 500;
    std::vector<double> pts(n);
    for (auto& v : pts) v = unit(rng);
    double lhs = equidist::star_discrepancy(pts);
    double rhs = dstar_breakpoint(pts);
    worst = std::max(worst, std::abs(lhs - rhs));
    if (std::abs(lhs - rhs) > 1e-12) ++bad;
  }

  u64 dominated_bad = 0;
  std::string et_detail;
  const auto& sieve = ctx.sieve(100000);
  for (u64 n : {1000ull, 10000ull, 100000ull}) {
    auto pts = h_sequence(2, n, sieve);
    double dstar = equidist::star_discrepancy(pts);
    std::vector<double> mags;
    for (i64 a = 1; a <= 100; ++a)
      mags.push_back(std::abs(
          expsum::single_sum(expsum::SumKind::S, 2, a, n, sieve, false, opt.threads).value));
    for (size_t h : {size_t(10), size_t(100)}) {
      double bound = equidist::erdos_turan_bound(
          std::span<const double>(mags.data(), h), pts.size());
      if (bound < dstar - 1e-9) ++dominated_bad;
      if (n == 100000)
        et_detail += fmt(" H=%zu: D*=%.4f ET=%.4f", h, dstar, bound);
    }
  }
  return {9, "discrepancy-oracle", bad == 0 && dominated_bad == 0,
          fmt("1000 random sets vs breakpoint oracle (worst gap %.2g), "
              "%llu domination failures;%s",
              worst, (unsigned long long)dominated_bad, et_detail.c_str())};
}

// ---- criterion 10 -----------------------------------------------------

CriterionResult c10_trend(Context& ctx, const Options&) {
  const auto& sieve = ctx.sieve(100000);
  double d[3];
  u64 limits[3] = {1000, 10000, 100000};
  for (int i = 0; i < 3; ++i)
    d[i] = equidist::star_discrepancy(h_sequence(2, limits[i], sieve));
  bool match = true;
  for (int i = 0; i < 3; ++i)
    if (std::abs(d[i] - kDstarH2[i]) > 1e-12) match = false;
  bool decreasing = d[0] > d[1] && d[1] > d[2];
  return {10, "equidistribution-trend", match && decreasing,
          fmt("D* = %.6f -> %.6f -> %.6f (frozen %.6f/%.6f/%.6f)", d[0], d[1], d[2],
              kDstarH2[0], kDstarH2[1], kDstarH2[2])};
}

// ---- criterion 11 -----------------------------------------------------

CriterionResult c11_tset(Context& ctx, const Options& opt) {
  const u64 n = 100000;
  const auto& sieve = ctx.sieve(n);
  auto tset = census::build_tset(n, 2, sieve);

  bool members_ok = tset.all_below_bound;
  for (const auto& mem : tset.members)
    if (mem.frac_h.value() >= tset.frac_bound) members_ok = false;
  bool count_ok = tset.members.size() == kTset100kCount;

  // Composite-only sums: the frozen argmax must reproduce.
  u64 h = u64(std::floor(conv_log(double(n))));
  int argmax = 0;
  double best = -1.0;
  for (i64 a = 1; a <= i64(h); ++a) {
    auto rep = expsum::single_sum(expsum::SumKind::S, 2, a, n, sieve, false, opt.threads);
    double mag = std::abs(rep.value);
    if (mag > best) {
      best = mag;
      argmax = int(a);
    }
  }
  bool argmax_ok = argmax == kArgmaxA100k && std::abs(best - kMaxAbsS2100k) < 1e-6;

  // Erdos-Turan chain with the pinned constants, over the full sequence
  // (T contains prime members, so primes must be in the point set):
  //   max_a |S(a)| >= (#T - gamma*M - M/(H+1)) / (3 * H_H).
  double m_pts = double(n - 1);
  double gamma = tset.frac_bound;
  double harmonic = 0.0;
  for (u64 a = 1; a <= h; ++a) harmonic += 1.0 / double(a);
  double floor_needed =
      (double(tset.members.size()) - gamma * m_pts - m_pts / double(h + 1)) /
      (3.0 * harmonic);
  double max_all = 0.0;
  for (i64 a = 1; a <= i64(h); ++a)
    max_all = std::max(max_all,
                       std::abs(expsum::single_sum(expsum::SumKind::S, 2, a, n, sieve,
                                                   true, opt.threads)
                                    .value));
  bool chain_ok = max_all >= floor_needed;

  return {11, "tset-lower-bound",
          members_ok && count_ok && argmax_ok && chain_ok,
          fmt("#T=%zu (frozen %llu), all fracs < N^-1/2: %s, argmax a=%d |S|=%.6f "
              "(frozen a=%d |S|=%.6f), ET chain: max|S_incl|=%.1f >= %.1f",
              tset.members.size(), (unsigned long long)kTset100kCount,
              members_ok ? "yes" : "no", argmax, best, kArgmaxA100k, kMaxAbsS2100k,
              max_all, floor_needed)};
}

// ---- criterion 12 -----------------------------------------------------

CriterionResult c12_performance(Context& ctx, const Options&) {
  const auto& sieve = ctx.sieve(1000000);
  auto run = [&](unsigned threads) {
    double best = 1e300;
    expsum::SumReport rep;
    for (int i = 0; i < 3; ++i) {
      rep = expsum::single_sum(expsum::SumKind::S, 2, 1, 1000000, sieve, false, threads);
      best = std::min(best, rep.elapsed_s);
    }
    rep.elapsed_s = best;
    return rep;
  };
  auto r1 = run(1);
  auto r4 = run(4);
  bool identical = r1.value.real() == r4.value.real() &&
                   r1.value.imag() == r4.value.imag() && r1.term_count == r4.term_count;
  double speedup = r1.elapsed_s / r4.elapsed_s;

  auto w = expsum::double_sum(expsum::WSumKind::W, 1, 10000, sieve, 1);

  bool ok = r1.elapsed_s <= 10.0 && identical && speedup >= 2.0 && w.elapsed_s <= 60.0;
  return {12, "performance", ok,
          fmt("single_sum(S,2,1,1e6): 1 thread %.2fs, 4 threads %.2fs (%.2fx, "
              "%u hardware cores), bit-identical: %s; double_sum(W,1,1e4): %.2fs",
              r1.elapsed_s, r4.elapsed_s, speedup,
              std::thread::hardware_concurrency(), identical ? "yes" : "no",
              w.elapsed_s)};
}

// ---- registry ---------------------------------------------------------

using SuiteFn = CriterionResult (*)(Context&, const Options&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> reg = {
      {"gamma-oracle", c01_gamma_oracle},
      {"integrality", c02_integrality},
      {"carmichael-census", c03_carmichael},
      {"stilde-identity", c04_stilde_identity},
      {"weil-crt-domination", c05_weil_domination},
      {"crt-factorization", c06_crt},
      {"rt-identities", c07_rt_identities},
      {"m-phi-l", c08_m_phi_l},
      {"discrepancy-oracle", c09_discrepancy},
      {"equidistribution-trend", c10_trend},
      {"tset-lower-bound", c11_tset},
      {"performance", c12_performance},
  };
  return reg;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, fn] : registry()) v.push_back(name);
    return v;
  }();
  return names;
}

bool run_suite(const std::string& name, const Options& options,
               std::vector<CriterionResult>& results, std::FILE* stream) {
  Context ctx;
  bool found = false;
  for (const auto& [suite, fn] : registry()) {
    if (name != "all" && name != suite) continue;
    found = true;
    CriterionResult r = fn(ctx, options);
    results.push_back(r);
    if (stream)
      std::fprintf(stream, "[%s] %02d %s: %s\n", r.passed ? "PASS" : "FAIL", r.id,
                   r.name.c_str(), r.detail.c_str());
  }
  return found;
}

}  // namespace pq::verify
