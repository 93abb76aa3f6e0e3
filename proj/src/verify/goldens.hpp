#pragma once

#include "core/ints.hpp"

// Frozen outputs of the independent oracle runs (trial-division lpf,
// breakpoint-formula discrepancy, naive long-double summation). The verify
// suites compare live results against these.

namespace pq::verify {

inline constexpr u64 kCarmichael100k[] = {
    561,   1105,  1729,  2465,  2821,  6601,  8911,  10585,
    15841, 29341, 41041, 46657, 52633, 62745, 63973, 75361};

inline constexpr u64 kTset100kCount = 14075;

// D* of {h_2(n)} over composite n <= 1e3 / 1e4 / 1e5.
inline constexpr double kDstarH2[3] = {0.27906525367804047, 0.24417282112207184,
                                       0.22148494331801644};

// argmax over 1 <= a <= 11 of |S_2(a;1e5)| and the magnitude there.
inline constexpr int kArgmaxA100k = 2;
inline constexpr double kMaxAbsS2100k = 23258.482124213198;

}  // namespace pq::verify
