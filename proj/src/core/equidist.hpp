#pragma once

#include <optional>
#include <span>
#include <vector>

#include "core/fracpart.hpp"
#include "core/ints.hpp"

namespace pq::equidist {

struct DiscrepancyReport {
  u64 n_points = 0;
  double d_star = 0.0;
  std::optional<double> et_bound;
  std::optional<u64> et_h;
  std::vector<u64> histogram;  // empty when not requested
};

// Exact star discrepancy via the sorted-order identity
//   D* = max_i max(i/N - x_(i), x_(i) - (i-1)/N).
// Rejects empty input and values outside [0, 1).
double star_discrepancy(std::vector<double> points);

// UnitFrac overload sorts by exact cross-multiplied comparison first, so
// ties cannot be misordered by double rounding.
double star_discrepancy(std::vector<fracpart::UnitFrac> points);

// Erdos-Turan upper bound with explicit classical constants:
//   1/(H+1) + (3/N) * sum_{a=1..H} |S(a)|/a,
// where sum_magnitudes[a-1] = |S(a)|.
double erdos_turan_bound(std::span<const double> sum_magnitudes, u64 n_points);

// Counts per half-open bin [i/bins, (i+1)/bins).
std::vector<u64> histogram(std::span<const double> points, u32 bins);
std::vector<u64> histogram(std::span<const fracpart::UnitFrac> points, u32 bins);

// Full report: D* always, the Erdos-Turan bound when |S(1)|..|S(H)| are
// supplied, histogram when bins > 0.
DiscrepancyReport analyze(std::vector<fracpart::UnitFrac> points,
                          std::span<const double> sum_magnitudes = {},
                          u32 bins = 0);

}  // namespace pq::equidist
