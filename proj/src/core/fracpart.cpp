#include "core/fracpart.hpp"

#include <numbers>
#include <stdexcept>

namespace pq::fracpart {

UnitFrac frac_quotient(QuotientKind kind, u64 g, u64 n, const arith::LpfSieve* sieve) {
  if (g == 0 || n == 0) throw std::invalid_argument("frac_quotient: g and n must be positive");
  u64 mod = n;
  if (kind == QuotientKind::H || kind == QuotientKind::HTilde)
    mod = arith::largest_prime_factor(n, sieve);
  if (mod == 1) return {0, 1};

  u64 num;
  if (kind == QuotientKind::F || kind == QuotientKind::H) {
    // (g^{n-1} - 1) mod mod
    u64 t = powmod(g, n - 1, mod);
    num = (t + mod - 1) % mod;
  } else {
    // (g^n - g) mod mod
    u64 t = powmod(g, n, mod);
    num = (t + mod - g % mod) % mod;
  }
  return {num, mod};
}

std::complex<double> unit_e(const UnitFrac& x) {
  double v = 2.0 * std::numbers::pi * x.value();
  return {std::cos(v), std::sin(v)};
}

std::complex<double> unit_e_scaled(i64 a, const UnitFrac& x) {
  return unit_e({mulmod_signed(a, x.num, x.den), x.den});
}

}  // namespace pq::fracpart
