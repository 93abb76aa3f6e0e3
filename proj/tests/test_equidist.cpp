#include "core/equidist.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "core/expsum.hpp"

using namespace pq;
using namespace pq::equidist;

namespace {

// Independent oracle: evaluate both one-sided limits at every jump point.
double dstar_oracle(std::vector<double> x) {
  std::sort(x.begin(), x.end());
  double m = double(x.size());
  double best = 0.0;
  for (size_t i = 0; i < x.size(); ++i) {
    best = std::max(best, std::abs(double(i) / m - x[i]));
    best = std::max(best, std::abs(double(i + 1) / m - x[i]));
  }
  return best;
}

}  // namespace

TEST_CASE("star_discrepancy: closed-form examples and errors") {
  CHECK(star_discrepancy(std::vector<double>{0.5}) == doctest::Approx(0.5));
  CHECK(star_discrepancy(std::vector<double>{0.25, 0.75}) == doctest::Approx(0.25));
  CHECK(star_discrepancy(std::vector<double>{0.0, 0.0, 0.0}) == doctest::Approx(1.0));
  CHECK_THROWS_AS(star_discrepancy(std::vector<double>{}), std::invalid_argument);
  CHECK_THROWS_AS(star_discrepancy(std::vector<double>{1.0}), std::invalid_argument);
  CHECK_THROWS_AS(star_discrepancy(std::vector<double>{-0.1}), std::invalid_argument);
}

TEST_CASE("star_discrepancy: matches breakpoint oracle on random sets") {
  std::mt19937_64 rng(1234);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int set = 0; set < 200; ++set) {
    size_t n = 1 + rng() % 500;
    std::vector<double> pts(n);
    for (auto& v : pts) v = unit(rng);
    double d = star_discrepancy(pts);
    REQUIRE(std::abs(d - dstar_oracle(pts)) < 1e-12);
    REQUIRE(d >= 1.0 / (2.0 * double(n)) - 1e-15);  // classical lower bound
    REQUIRE(d <= 1.0);
  }
}

TEST_CASE("star_discrepancy: UnitFrac overload agrees with double path") {
  std::mt19937_64 rng(77);
  std::vector<fracpart::UnitFrac> fracs;
  std::vector<double> doubles;
  for (int i = 0; i < 400; ++i) {
    u64 den = 2 + rng() % 10000;
    u64 num = rng() % den;
    fracs.push_back({num, den});
    doubles.push_back(double(num) / double(den));
  }
  CHECK(star_discrepancy(fracs) == star_discrepancy(doubles));
}

TEST_CASE("erdos_turan_bound: fixed points of the formula") {
  std::vector<double> zero{0.0};
  CHECK(erdos_turan_bound(zero, 100) == doctest::Approx(0.5));

  // Saturated sums make the bound vacuous (>= 1).
  u64 n = 1000;
  std::vector<double> sat(5, double(n));
  CHECK(erdos_turan_bound(sat, n) >= 1.0);

  CHECK_THROWS_AS(erdos_turan_bound(std::vector<double>{}, 10), std::invalid_argument);
  CHECK_THROWS_AS(erdos_turan_bound(zero, 0), std::invalid_argument);
}

TEST_CASE("erdos_turan_bound dominates D* for the h_2 sequence at 1e3") {
  arith::LpfSieve sieve(1000);
  std::vector<fracpart::UnitFrac> pts;
  for (u64 n = 4; n <= 1000; ++n)
    if (sieve.is_composite(n))
      pts.push_back(fracpart::frac_quotient(fracpart::QuotientKind::H, 2, n, &sieve));
  double dstar = star_discrepancy(pts);

  std::vector<double> mags;
  for (i64 a = 1; a <= 10; ++a)
    mags.push_back(std::abs(
        expsum::single_sum(expsum::SumKind::S, 2, a, 1000, sieve).value));
  double bound = erdos_turan_bound(mags, pts.size());
  CHECK(bound >= dstar - 1e-9);
}

TEST_CASE("histogram: examples and invariants") {
  CHECK(histogram(std::vector<double>{0.1, 0.6}, 2) == std::vector<u64>{1, 1});
  CHECK(histogram(std::vector<double>{0.1, 0.6, 0.9}, 1) == std::vector<u64>{3});

  u32 bins = 16;
  std::vector<double> grid;
  for (u32 i = 0; i < bins; ++i) grid.push_back(double(i) / bins);
  auto counts = histogram(grid, bins);
  for (u64 c : counts) CHECK(c == 1);

  std::mt19937_64 rng(5);
  std::vector<double> pts(1000);
  for (auto& v : pts) v = double(rng() % 1000000) / 1000000.0;
  auto h1 = histogram(pts, 7);
  std::shuffle(pts.begin(), pts.end(), rng);
  auto h2 = histogram(pts, 7);
  CHECK(h1 == h2);
  u64 total = 0;
  for (u64 c : h1) total += c;
  CHECK(total == pts.size());

  CHECK_THROWS_AS(histogram(std::vector<double>{0.5}, 0), std::invalid_argument);
}

TEST_CASE("analyze: assembled report satisfies its invariants") {
  arith::LpfSieve sieve(1000);
  std::vector<fracpart::UnitFrac> pts;
  for (u64 n = 4; n <= 1000; ++n)
    if (sieve.is_composite(n))
      pts.push_back(fracpart::frac_quotient(fracpart::QuotientKind::H, 2, n, &sieve));

  std::vector<double> mags;
  for (i64 a = 1; a <= 10; ++a)
    mags.push_back(std::abs(
        expsum::single_sum(expsum::SumKind::S, 2, a, 1000, sieve).value));

  auto rep = equidist::analyze(pts, mags, 8);
  CHECK(rep.n_points == pts.size());
  CHECK(rep.d_star >= 1.0 / (2.0 * double(rep.n_points)));
  CHECK(rep.d_star <= 1.0);
  REQUIRE(rep.et_bound.has_value());
  CHECK(*rep.et_bound >= rep.d_star - 1e-9);
  CHECK(rep.et_h == 10);
  REQUIRE(rep.histogram.size() == 8);
  u64 total = 0;
  for (u64 c : rep.histogram) total += c;
  CHECK(total == rep.n_points);

  auto bare = equidist::analyze(pts);
  CHECK(!bare.et_bound.has_value());
  CHECK(bare.histogram.empty());
  CHECK(bare.d_star == rep.d_star);
}

TEST_CASE("histogram: exact binning of UnitFrac at bin edges") {
  // 1/4 lands exactly on the boundary of bin 1 of 4.
  std::vector<fracpart::UnitFrac> pts{{1, 4}, {2, 4}, {3, 4}, {0, 4}};
  CHECK(histogram(std::span<const fracpart::UnitFrac>(pts), 4) ==
        std::vector<u64>{1, 1, 1, 1});
}
