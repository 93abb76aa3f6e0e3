#include "core/fracpart.hpp"

#include <numeric>
#include <stdexcept>

#include "doctest.h"
#include "oracle/bigint.hpp"

using namespace pq;
using namespace pq::fracpart;

TEST_CASE("frac_quotient: worked examples") {
  CHECK(frac_quotient(QuotientKind::F, 2, 15) == UnitFrac{3, 15});
  CHECK(frac_quotient(QuotientKind::H, 2, 15) == UnitFrac{3, 5});
  CHECK(frac_quotient(QuotientKind::FTilde, 2, 15) == UnitFrac{6, 15});
  CHECK(frac_quotient(QuotientKind::F, 1, 1) == UnitFrac{0, 1});
  CHECK_THROWS_AS(frac_quotient(QuotientKind::F, 0, 5), std::invalid_argument);
}

TEST_CASE("frac_quotient: prime vanishing for all four kinds") {
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 101ull, 997ull})
    for (u64 g : {2ull, 3ull, 5ull, 7ull, 10ull}) {
      if (g % p == 0) continue;
      for (auto kind : {QuotientKind::F, QuotientKind::H, QuotientKind::FTilde,
                        QuotientKind::HTilde}) {
        auto f = frac_quotient(kind, g, p);
        CHECK(f.num == 0);
      }
    }
}

TEST_CASE("frac_quotient: 561 is Carmichael, so F vanishes for coprime bases") {
  for (u64 g = 2; g < 561; ++g) {
    if (std::gcd(g, 561ull) != 1) continue;
    REQUIRE(frac_quotient(QuotientKind::F, g, 561).num == 0);
    REQUIRE(frac_quotient(QuotientKind::H, g, 561).num == 0);
  }
}

TEST_CASE("frac_quotient: integrality at base-2 pseudoprimes below 2000") {
  for (u64 n = 4; n <= 2000; ++n) {
    if (arith::is_prime(n)) continue;
    if (powmod(2, n - 1, n) != 1) continue;
    REQUIRE(frac_quotient(QuotientKind::F, 2, n).num == 0);
    REQUIRE(frac_quotient(QuotientKind::H, 2, n).num == 0);
  }
}

TEST_CASE("frac_quotient: tilde relation f~ = g f mod n") {
  u64 mismatches = 0;
  for (u64 n = 1; n <= 2000; ++n)
    for (u64 g = 1; g <= 2000; ++g) {
      u64 f = frac_quotient(QuotientKind::F, g, n).num;
      u64 ft = frac_quotient(QuotientKind::FTilde, g, n).num;
      if (ft % n != mulmod(g % n, f, n)) ++mismatches;
    }
  CHECK(mismatches == 0);
}

TEST_CASE("frac_quotient: equality with exact big-integer oracle") {
  for (u64 n = 1; n <= 300; ++n) {
    u64 p = arith::largest_prime_factor(n);
    for (u64 g = 1; g <= 10; ++g) {
      u64 tn = testoracle::exact_pow_mod(g, n - 1, n);
      u64 tp = testoracle::exact_pow_mod(g, n - 1, p);
      u64 sn = testoracle::exact_pow_mod(g, n, n);
      u64 sp = testoracle::exact_pow_mod(g, n, p);
      REQUIRE(frac_quotient(QuotientKind::F, g, n) == UnitFrac{(tn + n - 1) % n, n});
      REQUIRE(frac_quotient(QuotientKind::H, g, n) == UnitFrac{(tp + p - 1) % p, p});
      REQUIRE(frac_quotient(QuotientKind::FTilde, g, n) ==
              UnitFrac{(sn + n - g % n) % n, n});
      REQUIRE(frac_quotient(QuotientKind::HTilde, g, n) ==
              UnitFrac{(sp + p - g % p) % p, p});
    }
  }
}

TEST_CASE("frac_quotient: non-coprime inputs follow the raw formula") {
  // P(n) | g: numerator of H becomes (0 - 1) mod P = P - 1.
  auto f = frac_quotient(QuotientKind::H, 5, 15);  // P(15) = 5 divides g = 5
  CHECK(f == UnitFrac{4, 5});
}

TEST_CASE("unit_e: exact points and modulus property") {
  CHECK(unit_e({0, 1}).real() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(unit_e({0, 1}).imag() == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(unit_e({1, 2}).real() == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(unit_e({1, 4}).imag() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(unit_e({1, 4}).real()) < 1e-12);

  for (u64 den : {3ull, 7ull, 999983ull})
    for (u64 num = 0; num < den; num += 1 + den / 13) {
      double mag = std::abs(unit_e({num, den}));
      REQUIRE(mag > 1.0 - 1e-12);
      REQUIRE(mag < 1.0 + 1e-12);
    }
}

TEST_CASE("unit_e_scaled folds the multiplier exactly") {
  // e(a * x) must equal e on the exactly reduced fraction, including a < 0.
  UnitFrac x{3, 7};
  CHECK(unit_e_scaled(2, x) == unit_e({6, 7}));
  CHECK(unit_e_scaled(3, x) == unit_e({2, 7}));
  CHECK(unit_e_scaled(-1, x) == unit_e({4, 7}));
  CHECK(unit_e_scaled(-15, x) == unit_e({(7 - (45 % 7)) % 7, 7}));
}

TEST_CASE("frac_less is an exact strict order") {
  CHECK(frac_less({1, 3}, {1, 2}));
  CHECK(!frac_less({1, 2}, {1, 3}));
  CHECK(!frac_less({2, 6}, {1, 3}));  // equal values
  // Values whose doubles collide still compare exactly:
  // a = x/y, b = (x+1)/(y+2) with a < b by cross multiplication.
  UnitFrac a{333333333333333333ull, 1000000000000000000ull};
  UnitFrac b{333333333333333334ull, 1000000000000000002ull};
  CHECK(a.value() == b.value());
  CHECK(frac_less(a, b));
  CHECK(!frac_less(b, a));
}
