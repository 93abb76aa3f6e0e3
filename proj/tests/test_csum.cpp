#include "core/csum.hpp"

#include <cmath>
#include <complex>

#include "doctest.h"

using namespace pq;

namespace {

// Cheap deterministic pseudo-random complex term from an index.
std::complex<double> term_of(u64 n) {
  u64 h = n * 0x9e3779b97f4a7c15ull;
  h ^= h >> 33;
  double re = double(h % 2000001) / 1000000.0 - 1.0;
  double im = double((h >> 21) % 2000001) / 1000000.0 - 1.0;
  return {re, im};
}

}  // namespace

TEST_CASE("CSum: identical inputs in identical order are bit-identical") {
  CSum a, b;
  for (u64 n = 1; n <= 100000; ++n) {
    a.add(term_of(n));
    b.add(term_of(n));
  }
  CHECK(a.value().real() == b.value().real());
  CHECK(a.value().imag() == b.value().imag());
  CHECK(a.terms == 100000);
}

TEST_CASE("CSum: compensated error stays near the long-double reference") {
  CSum acc;
  long double re_ref = 0.0L, im_ref = 0.0L;
  long double abs_sum = 0.0L;
  for (u64 n = 1; n <= 1000000; ++n) {
    auto z = term_of(n);
    acc.add(z);
    re_ref += z.real();
    im_ref += z.imag();
    abs_sum += std::abs((long double)z.real()) + std::abs((long double)z.imag());
  }
  double tol = 4.0 * std::numeric_limits<double>::epsilon() * double(abs_sum);
  CHECK(std::abs(double((long double)acc.value().real() - re_ref)) <= tol);
  CHECK(std::abs(double((long double)acc.value().imag() - im_ref)) <= tol);
}

TEST_CASE("chunked_reduce: thread count never changes the bits") {
  auto run = [&](unsigned threads) {
    return chunked_reduce(1, 300000, threads, [](u64 first, u64 last, CSum& acc) {
      for (u64 n = first; n <= last; ++n) acc.add(term_of(n));
    });
  };
  CSum base = run(1);
  for (unsigned threads : {2u, 3u, 8u}) {
    CSum other = run(threads);
    REQUIRE(other.value().real() == base.value().real());
    REQUIRE(other.value().imag() == base.value().imag());
    REQUIRE(other.terms == base.terms);
  }
  CHECK(base.terms == 300000);
}

TEST_CASE("chunked_reduce: empty and single-element ranges") {
  auto sum = chunked_reduce(5, 4, 4, [](u64, u64, CSum&) {});
  CHECK(sum.terms == 0);
  auto one = chunked_reduce(7, 7, 4, [](u64 first, u64 last, CSum& acc) {
    for (u64 n = first; n <= last; ++n) acc.add({1.0, -1.0});
  });
  CHECK(one.terms == 1);
  CHECK(one.value().real() == doctest::Approx(1.0));
}
