#include "core/arith.hpp"

#include <algorithm>
#include <cstring>
#include <fstream>
#include <numeric>
#include <stdexcept>

namespace pq::arith {

namespace {

bool miller_rabin_witness(u64 n, u64 a, u64 d, int r) {
  u64 x = powmod(a % n, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < r; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  u64 d = n - 1;
  int r = 0;
  while ((d & 1) == 0) { d >>= 1; ++r; }
  // Deterministic base set for n < 2^64.
  for (u64 a : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull, 1795265022ull})
    if (a % n != 0 && !miller_rabin_witness(n, a, d, r)) return false;
  return true;
}

namespace {

// Floyd cycle detection with a deterministic polynomial sequence, so
// factor() always returns the same decomposition for the same input.
u64 pollard_rho(u64 n) {
  if (n % 2 == 0) return 2;
  for (u64 c = 1;; ++c) {
    auto step = [n, c](u64 x) {
      u64 s = mulmod(x, x, n) + c;
      return s >= n ? s - n : s;
    };
    u64 x = 2, y = step(2), d = 1;
    while (d == 1) {
      u64 diff = x > y ? x - y : y - x;
      if (diff == 0) { d = n; break; }
      d = std::gcd(diff, n);
      x = step(x);
      y = step(step(y));
    }
    if (d != n) return d;
  }
}

void factor_into(u64 n, std::vector<std::pair<u64, u32>>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back({n, 1});
    return;
  }
  u64 d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

Factorization factor(u64 n) {
  if (n == 0) throw std::invalid_argument("factor: n must be positive");
  Factorization f;
  f.value = n;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                29ull, 31ull, 37ull, 41ull, 43ull, 47ull}) {
    if (p * p > n) break;
    if (n % p == 0) {
      u32 e = 0;
      while (n % p == 0) { n /= p; ++e; }
      f.factors.push_back({p, e});
    }
  }
  if (n > 1) {
    std::vector<std::pair<u64, u32>> rest;
    factor_into(n, rest);
    std::sort(rest.begin(), rest.end());
    for (size_t i = 0; i < rest.size();) {
      size_t j = i;
      u32 e = 0;
      while (j < rest.size() && rest[j].first == rest[i].first) { e += rest[j].second; ++j; }
      f.factors.push_back({rest[i].first, e});
      i = j;
    }
  }
  return f;
}

LpfSieve::LpfSieve(u64 limit) : limit_(limit) {
  if (limit < 2) throw std::invalid_argument("LpfSieve: limit must be >= 2");
  if (limit > 2'000'000'000ull)
    throw std::invalid_argument("LpfSieve: limit too large for u32 tables");
  lpf_.assign(limit + 1, 0);
  spf_.assign(limit + 1, 0);
  lpf_[1] = spf_[1] = 1;
  for (u64 p = 2; p <= limit; ++p) {
    if (spf_[p] != 0) continue;
    // p is prime: the overwrite pass leaves the largest prime in lpf.
    for (u64 m = p; m <= limit; m += p) {
      lpf_[m] = u32(p);
      if (spf_[m] == 0) spf_[m] = u32(p);
    }
  }
}

Factorization LpfSieve::factor(u64 n) const {
  if (n == 0 || n > limit_) throw std::invalid_argument("LpfSieve::factor: n out of range");
  Factorization f;
  f.value = n;
  while (n > 1) {
    u64 p = spf_[n];
    u32 e = 0;
    while (n % p == 0) { n /= p; ++e; }
    f.factors.push_back({p, e});
  }
  return f;
}

namespace {
constexpr char kSieveMagic[8] = {'L', 'P', 'F', 'S', 'I', 'E', 'V', 'E'};
constexpr u32 kSieveVersion = 1;
}  // namespace

void LpfSieve::save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open sieve cache for writing: " + path);
  out.write(kSieveMagic, 8);
  out.write(reinterpret_cast<const char*>(&kSieveVersion), 4);
  out.write(reinterpret_cast<const char*>(&limit_), 8);
  std::vector<u64> buf(4096);
  u64 n = 1;
  while (n <= limit_) {
    size_t k = 0;
    for (; k < buf.size() && n <= limit_; ++k, ++n) buf[k] = lpf_[n];
    out.write(reinterpret_cast<const char*>(buf.data()), std::streamsize(8 * k));
  }
  if (!out) throw std::runtime_error("short write to sieve cache: " + path);
}

LpfSieve LpfSieve::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open sieve cache: " + path);
  char magic[8];
  u32 version = 0;
  u64 limit = 0;
  in.read(magic, 8);
  in.read(reinterpret_cast<char*>(&version), 4);
  in.read(reinterpret_cast<char*>(&limit), 8);
  if (!in || std::memcmp(magic, kSieveMagic, 8) != 0)
    throw std::runtime_error("bad sieve cache magic: " + path);
  if (version != kSieveVersion)
    throw std::runtime_error("unsupported sieve cache version: " + path);
  if (limit < 2 || limit > 2'000'000'000ull)
    throw std::runtime_error("implausible sieve cache limit: " + path);

  LpfSieve s;
  s.limit_ = limit;
  s.lpf_.assign(limit + 1, 0);
  s.lpf_[1] = 1;
  std::vector<u64> buf(4096);
  u64 n = 1;
  while (n <= limit) {
    size_t want = std::min<u64>(buf.size(), limit - n + 1);
    in.read(reinterpret_cast<char*>(buf.data()), std::streamsize(8 * want));
    if (!in) throw std::runtime_error("truncated sieve cache: " + path);
    for (size_t k = 0; k < want; ++k, ++n) {
      if (buf[k] > limit) throw std::runtime_error("corrupt sieve cache entry: " + path);
      s.lpf_[n] = u32(buf[k]);
    }
  }

  // Spot-check 100 entries against direct factorization.
  u64 stride = std::max<u64>(1, limit / 100);
  for (u64 i = 0, m = 1; i < 100 && m <= limit; ++i, m += stride) {
    u64 expect = m == 1 ? 1 : pq::arith::factor(m).factors.back().first;
    if (s.lpf_[m] != expect)
      throw std::runtime_error("sieve cache failed spot-check: " + path);
  }

  s.rebuild_spf();
  return s;
}

void LpfSieve::rebuild_spf() {
  spf_.assign(limit_ + 1, 0);
  spf_[1] = 1;
  for (u64 p = 2; p <= limit_; ++p) {
    if (spf_[p] != 0) continue;
    for (u64 m = p; m <= limit_; m += p)
      if (spf_[m] == 0) spf_[m] = u32(p);
  }
}

u64 largest_prime_factor(u64 n, const LpfSieve* sieve) {
  if (n == 0) throw std::invalid_argument("largest_prime_factor: n must be positive");
  if (n == 1) return 1;
  if (sieve != nullptr) {
    if (n > sieve->limit()) throw std::invalid_argument("largest_prime_factor: n exceeds sieve limit");
    return sieve->lpf(n);
  }
  return factor(n).factors.back().first;
}

std::pair<u64, u64> rho_and_powerful(const Factorization& f) {
  u64 rho = 1, s = 1;
  for (auto [p, e] : f.factors) {
    if (e == 1) {
      rho *= p;
    } else {
      for (u32 i = 0; i < e; ++i) s *= p;
    }
  }
  return {rho, s};
}

std::pair<u64, u64> rho_and_powerful(u64 n) { return rho_and_powerful(factor(n)); }

u64 gamma_false_witness(const Factorization& f) {
  u64 g = 1;
  for (auto [p, e] : f.factors) g *= std::gcd(f.value - 1, p - 1);
  return g;
}

u64 gamma_false_witness(u64 n) { return gamma_false_witness(factor(n)); }

u64 carmichael_lambda(const Factorization& f) {
  u64 lam = 1;
  for (auto [p, e] : f.factors) {
    u64 lpe;
    if (p == 2) {
      lpe = e == 1 ? 1 : e == 2 ? 2 : u64(1) << (e - 2);
    } else {
      lpe = p - 1;
      for (u32 i = 1; i < e; ++i) lpe *= p;
    }
    lam = lcm_u64(lam, lpe);
  }
  return lam;
}

u64 carmichael_lambda(u64 n) { return carmichael_lambda(factor(n)); }

u64 euler_phi(const Factorization& f) {
  u64 phi = 1;
  for (auto [p, e] : f.factors) {
    phi *= p - 1;
    for (u32 i = 1; i < e; ++i) phi *= p;
  }
  return phi;
}

u64 euler_phi(u64 n) { return euler_phi(factor(n)); }

u64 tau(u64 n) {
  u64 t = 1;
  for (auto [p, e] : factor(n).factors) t *= e + 1;
  return t;
}

u64 mult_order(u64 g, u64 p) {
  if (!is_prime(p)) throw std::invalid_argument("mult_order: p must be prime");
  if (g % p == 0) throw std::invalid_argument("mult_order: p divides g");
  u64 t = p - 1;
  for (auto [q, e] : factor(p - 1).factors) {
    for (u32 i = 0; i < e; ++i) {
      if (powmod(g, t / q, p) == 1)
        t /= q;
      else
        break;
    }
  }
  return t;
}

}  // namespace pq::arith
