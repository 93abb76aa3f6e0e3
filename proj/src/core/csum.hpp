#pragma once

#include <atomic>
#include <cmath>
#include <complex>
#include <thread>
#include <vector>

#include "core/ints.hpp"

namespace pq {

// Compensated (Neumaier) complex accumulator. Adding the same values in the
// same order gives bit-identical totals on every run and thread count.
struct CSum {
  double re = 0.0, im = 0.0;
  double re_c = 0.0, im_c = 0.0;
  u64 terms = 0;

  static void add1(double& s, double& c, double v) {
    double t = s + v;
    if (std::abs(s) >= std::abs(v))
      c += (s - t) + v;
    else
      c += (v - t) + s;
    s = t;
  }

  void add(std::complex<double> z) {
    add1(re, re_c, z.real());
    add1(im, im_c, z.imag());
    ++terms;
  }

  // Folds a finished chunk in; used only by the ascending-order combiner.
  void absorb(const CSum& chunk) {
    add1(re, re_c, chunk.re + chunk.re_c);
    add1(im, im_c, chunk.im + chunk.im_c);
    terms += chunk.terms;
  }

  std::complex<double> value() const { return {re + re_c, im + im_c}; }
};

// Reproducibility contract for every sum engine: [lo, hi] is cut into
// fixed-size contiguous chunks, each chunk is reduced sequentially with
// compensated summation, and chunk results are combined in ascending order.
// The thread count affects scheduling only, never the arithmetic.
inline constexpr u64 kChunkSize = u64(1) << 16;

template <typename ChunkFn>  // void(u64 first, u64 last, CSum&)
CSum chunked_reduce(u64 lo, u64 hi, unsigned threads, ChunkFn fn) {
  CSum total;
  if (hi < lo) return total;
  u64 n_chunks = (hi - lo) / kChunkSize + 1;

  if (threads <= 1 || n_chunks == 1) {
    for (u64 k = 0; k < n_chunks; ++k) {
      u64 first = lo + k * kChunkSize;
      u64 last = std::min(hi, first + kChunkSize - 1);
      CSum chunk;
      fn(first, last, chunk);
      total.absorb(chunk);
    }
    return total;
  }

  std::vector<CSum> results(n_chunks);
  std::atomic<u64> next{0};
  unsigned workers = unsigned(std::min<u64>(threads, n_chunks));
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (u64 k = next.fetch_add(1); k < n_chunks; k = next.fetch_add(1)) {
        u64 first = lo + k * kChunkSize;
        u64 last = std::min(hi, first + kChunkSize - 1);
        fn(first, last, results[k]);
      }
    });
  }
  for (auto& t : pool) t.join();
  for (u64 k = 0; k < n_chunks; ++k) total.absorb(results[k]);
  return total;
}

}  // namespace pq
