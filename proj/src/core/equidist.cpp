#include "core/equidist.hpp"

#include <algorithm>
#include <stdexcept>

namespace pq::equidist {

namespace {

double dstar_of_sorted(const std::vector<double>& x) {
  size_t n = x.size();
  double dn = double(n);
  double best = 0.0;
  for (size_t i = 1; i <= n; ++i) {
    double v = x[i - 1];
    best = std::max(best, std::max(double(i) / dn - v, v - double(i - 1) / dn));
  }
  return best;
}

void check_range(const std::vector<double>& pts) {
  if (pts.empty()) throw std::invalid_argument("star_discrepancy: empty point set");
  for (double v : pts)
    if (!(v >= 0.0 && v < 1.0))
      throw std::invalid_argument("star_discrepancy: point outside [0,1)");
}

}  // namespace

double star_discrepancy(std::vector<double> points) {
  check_range(points);
  std::sort(points.begin(), points.end());
  return dstar_of_sorted(points);
}

double star_discrepancy(std::vector<fracpart::UnitFrac> points) {
  if (points.empty()) throw std::invalid_argument("star_discrepancy: empty point set");
  std::sort(points.begin(), points.end(), fracpart::frac_less);
  std::vector<double> x(points.size());
  for (size_t i = 0; i < points.size(); ++i) x[i] = points[i].value();
  return dstar_of_sorted(x);
}

double erdos_turan_bound(std::span<const double> sum_magnitudes, u64 n_points) {
  if (n_points == 0) throw std::invalid_argument("erdos_turan_bound: N must be >= 1");
  if (sum_magnitudes.empty()) throw std::invalid_argument("erdos_turan_bound: H must be >= 1");
  double h = double(sum_magnitudes.size());
  double sum = 0.0;
  for (size_t a = 1; a <= sum_magnitudes.size(); ++a)
    sum += sum_magnitudes[a - 1] / double(a);
  return 1.0 / (h + 1.0) + 3.0 / double(n_points) * sum;
}

std::vector<u64> histogram(std::span<const double> points, u32 bins) {
  if (bins == 0) throw std::invalid_argument("histogram: bins must be >= 1");
  std::vector<u64> counts(bins, 0);
  for (double v : points) {
    if (!(v >= 0.0 && v < 1.0)) throw std::invalid_argument("histogram: point outside [0,1)");
    auto b = u32(v * double(bins));
    ++counts[std::min(b, bins - 1)];
  }
  return counts;
}

std::vector<u64> histogram(std::span<const fracpart::UnitFrac> points, u32 bins) {
  if (bins == 0) throw std::invalid_argument("histogram: bins must be >= 1");
  std::vector<u64> counts(bins, 0);
  // floor(num * bins / den) is exact; no rounding at bin edges.
  for (const auto& f : points) ++counts[u64((u128)f.num * bins / f.den)];
  return counts;
}

DiscrepancyReport analyze(std::vector<fracpart::UnitFrac> points,
                          std::span<const double> sum_magnitudes, u32 bins) {
  DiscrepancyReport rep;
  rep.n_points = points.size();
  if (bins > 0)
    rep.histogram = histogram(std::span<const fracpart::UnitFrac>(points), bins);
  if (!sum_magnitudes.empty()) {
    rep.et_bound = erdos_turan_bound(sum_magnitudes, points.size());
    rep.et_h = sum_magnitudes.size();
  }
  rep.d_star = star_discrepancy(std::move(points));
  return rep;
}

}  // namespace pq::equidist
