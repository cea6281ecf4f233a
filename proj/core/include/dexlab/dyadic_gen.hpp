#pragma once

#include <cstdint>
#include <set>

#include "dexlab/dyadic_set.hpp"

namespace dexlab {

/// N cells at indices round(m * 2^k / N), m = 0..N-1; exactly N distinct
/// cells (requires N <= 2^k).
DyadicSet1D gen_ap(int scale_k, std::uint64_t count);

/// Cells whose base-4 expansion to depth scale_k/2 uses only keep_digits.
/// scale_k must be even and keep_digits a nonempty subset of {0,1,2,3}.
/// The measured covering dimension is log2(#keep_digits)/2.
DyadicSet1D gen_cantor(int scale_k, const std::set<int>& keep_digits);

/// All pairs (i, j) with i in A, j in B; scales must match.
DyadicSet2D product(const DyadicSet1D& A, const DyadicSet1D& B);

/// Image of the point construction q_{a,b} = (a/2, sqrt(1 + b - a^2/4)) over
/// the cell centers (a, b) of X x Y, re-charted by y -> y - 1 so the output
/// fits [0,1]^2. For that construction and a pin (s, 0) in construction
/// coordinates, |(s,0) - q_{a,b}|^2 = (s^2 + 1) + (b - s a) exactly. Pins
/// given in construction coordinates correspond to (s, -1) in the chart.
struct ElekesImage {
  DyadicSet2D cells;
  double chart_shift_y = -1.0;  // stored point = construction point + (0, chart_shift_y)
  std::uint64_t total_pairs = 0;
  std::uint64_t dropped_negative_radicand = 0;  // 1 + b - a^2/4 < 0; impossible for [0,1] inputs
  std::uint64_t dropped_out_of_chart = 0;       // charted point left [0,1)^2
};

ElekesImage gen_elekes(const DyadicSet1D& X, const DyadicSet1D& Y, int out_scale_k);

}  // namespace dexlab
