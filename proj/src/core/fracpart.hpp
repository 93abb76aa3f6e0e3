#pragma once

#include <complex>

#include "core/arith.hpp"
#include "core/ints.hpp"

namespace pq::fracpart {

// Exact fractional part num/den with 0 <= num < den. Not reduced: den is
// meaningful (it is n or P(n)).
struct UnitFrac {
  u64 num = 0;
  u64 den = 1;

  double value() const { return double(num) / double(den); }
  bool operator==(const UnitFrac&) const = default;
};

// Exact comparison by cross multiplication; safe for den < 2^63.
inline bool frac_less(const UnitFrac& a, const UnitFrac& b) {
  return (u128)a.num * b.den < (u128)b.num * a.den;
}

enum class QuotientKind { F, H, FTilde, HTilde };

// Fractional parts of the four quotient families, on residues only:
//   F      {(g^{n-1} - 1)/n}        H      {(g^{n-1} - 1)/P(n)}
//   FTilde {(g^n - g)/n}            HTilde {(g^n - g)/P(n)}
// Defined for all g, n >= 1; no coprimality requirement.
UnitFrac frac_quotient(QuotientKind kind, u64 g, u64 n,
                       const arith::LpfSieve* sieve = nullptr);

// e(x) = exp(2*pi*i*x); the single rounding site of the pipeline.
std::complex<double> unit_e(const UnitFrac& x);

// e(a*x) with the integer multiple folded into the exact fraction first.
std::complex<double> unit_e_scaled(i64 a, const UnitFrac& x);

}  // namespace pq::fracpart
