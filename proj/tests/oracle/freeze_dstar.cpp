// Second oracle run: star discrepancies of {h_2(n)} over composite n and
// the short table of |S_2(a;1e5)|, computed with deliberately independent
// machinery (trial-division lpf, breakpoint-formula D*, naive long-double
// accumulation). Values printed here are frozen into the verify suites.
//   g++ -O2 -std=c++20 -o freeze_dstar freeze_dstar.cpp && ./freeze_dstar

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <vector>

using u64 = std::uint64_t;
using u128 = unsigned __int128;

static u64 mulmod(u64 a, u64 b, u64 m) { return (u128)a * b % m; }
static u64 powmod(u64 b, u64 e, u64 m) {
  if (m == 1) return 0;
  u64 r = 1;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

int main() {
  const u64 N = 100000;
  // lpf by trial division, 0 marks primes (lpf = n itself).
  std::vector<u64> lpf(N + 1, 0);
  lpf[1] = 1;
  for (u64 n = 2; n <= N; ++n) {
    u64 m = n, last = 0;
    for (u64 d = 2; d * d <= m; ++d)
      while (m % d == 0) { last = d; m /= d; }
    if (m > 1) last = m;
    lpf[n] = last;
  }

  auto is_composite = [&](u64 n) { return n >= 4 && lpf[n] != n; };

  // Breakpoint-formula star discrepancy: sup over candidate gamma of both
  // one-sided values of |#{x<gamma}/M - gamma|.
  auto dstar_breakpoint = [](std::vector<double> x) {
    std::sort(x.begin(), x.end());
    size_t m = x.size();
    double best = 0.0;
    for (size_t i = 0; i < m; ++i) {
      double below = double(i) / double(m);        // #{x < x[i]} ignoring ties handled by order
      double at_or_below = double(i + 1) / double(m);
      best = std::max(best, std::abs(below - x[i]));
      best = std::max(best, std::abs(at_or_below - x[i]));
    }
    best = std::max(best, std::abs(1.0 - 1.0));  // gamma -> 1 endpoint: |M/M - 1| = 0
    return best;
  };

  for (u64 limit : {u64(1000), u64(10000), u64(100000)}) {
    std::vector<double> pts;
    for (u64 n = 4; n <= limit; ++n) {
      if (!is_composite(n)) continue;
      u64 p = lpf[n];
      u64 num = (powmod(2, n - 1, p) + p - 1) % p;
      pts.push_back(double(num) / double(p));
    }
    std::printf("dstar_h2(%llu) = %.17g  (M=%zu)\n", (unsigned long long)limit,
                dstar_breakpoint(pts), pts.size());
  }

  // |S_2(a;1e5)| for a = 1..11 with naive long-double accumulation.
  const long double tau = 6.283185307179586476925286766559L;
  int argmax = 0;
  long double best = -1.0L;
  for (int a = 1; a <= 11; ++a) {
    long double re = 0.0L, im = 0.0L;
    for (u64 n = 4; n <= N; ++n) {
      if (!is_composite(n)) continue;
      u64 p = lpf[n];
      u64 num = (powmod(2, n - 1, p) + p - 1) % p;
      u64 r = mulmod(u64(a), num, p);
      long double ang = tau * (long double)r / (long double)p;
      re += cosl(ang);
      im += sinl(ang);
    }
    long double mag = sqrtl(re * re + im * im);
    std::printf("S_2(%d;1e5): re=%.17g im=%.17g |S|=%.17g\n", a, double(re), double(im),
                double(mag));
    if (mag > best) { best = mag; argmax = a; }
  }
  std::printf("argmax_a |S_2(a;1e5)| = %d, |S| = %.17g\n", argmax, double(best));
  return 0;
}
