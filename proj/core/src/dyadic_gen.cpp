#include "dexlab/dyadic_gen.hpp"

#include <cmath>
#include <stdexcept>

namespace dexlab {

DyadicSet1D gen_ap(int scale_k, std::uint64_t count) {
  if (scale_k < 0 || scale_k > 30) throw std::invalid_argument("gen_ap: scale_k out of range");
  std::uint64_t total = std::uint64_t{1} << scale_k;
  if (count == 0 || count > total) throw std::invalid_argument("gen_ap: need 0 < N <= 2^k");
  std::vector<std::uint64_t> cells;
  cells.reserve(count);
  for (std::uint64_t m = 0; m < count; ++m) {
    // round(m * 2^k / N), exact in integers
    std::uint64_t idx = (2 * m * total + count) / (2 * count);
    if (idx >= total) idx = total - 1;
    cells.push_back(idx);
  }
  DyadicSet1D s = DyadicSet1D::from_cells(scale_k, std::move(cells));
  if (s.size() != count) throw std::logic_error("gen_ap: rounding collapsed cells");
  return s;
}

DyadicSet1D gen_cantor(int scale_k, const std::set<int>& keep_digits) {
  if (scale_k % 2 != 0) throw std::invalid_argument("gen_cantor: scale_k must be even");
  if (keep_digits.empty()) throw std::invalid_argument("gen_cantor: empty digit set");
  for (int d : keep_digits)
    if (d < 0 || d > 3) throw std::invalid_argument("gen_cantor: digits must be in {0,1,2,3}");
  int depth = scale_k / 2;
  std::vector<std::uint64_t> cells{0};
  for (int level = 0; level < depth; ++level) {
    std::vector<std::uint64_t> next;
    next.reserve(cells.size() * keep_digits.size());
    for (std::uint64_t prefix : cells)
      for (int d : keep_digits) next.push_back(prefix * 4 + static_cast<std::uint64_t>(d));
    cells = std::move(next);
  }
  return DyadicSet1D::from_cells(scale_k, std::move(cells));
}

DyadicSet2D product(const DyadicSet1D& A, const DyadicSet1D& B) {
  if (A.scale_k != B.scale_k) throw std::invalid_argument("product: scale mismatch");
  std::vector<Cell2> cells;
  cells.reserve(A.size() * B.size());
  for (std::uint64_t i : A.cells)
    for (std::uint64_t j : B.cells)
      cells.push_back(Cell2{static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)});
  return DyadicSet2D::from_cells(A.scale_k, std::move(cells));
}

ElekesImage gen_elekes(const DyadicSet1D& X, const DyadicSet1D& Y, int out_scale_k) {
  if (out_scale_k < std::max(X.scale_k, Y.scale_k))
    throw std::invalid_argument("gen_elekes: out scale coarser than the inputs");
  ElekesImage out;
  double scale = std::ldexp(1.0, out_scale_k);
  std::vector<Cell2> cells;
  cells.reserve(X.size() * Y.size());
  for (std::size_t n = 0; n < X.size(); ++n) {
    double a = X.cell_center(n);
    for (std::size_t m = 0; m < Y.size(); ++m) {
      double b = Y.cell_center(m);
      ++out.total_pairs;
      double radicand = 1.0 + b - a * a / 4.0;
      if (radicand < 0.0) {
        ++out.dropped_negative_radicand;
        continue;
      }
      double qx = a / 2.0;
      double qy = std::sqrt(radicand) + out.chart_shift_y;
      if (qx < 0.0 || qx >= 1.0 || qy < 0.0 || qy >= 1.0) {
        ++out.dropped_out_of_chart;
        continue;
      }
      cells.push_back(Cell2{static_cast<std::uint32_t>(qx * scale),
                            static_cast<std::uint32_t>(qy * scale)});
    }
  }
  out.cells = DyadicSet2D::from_cells(out_scale_k, std::move(cells));
  return out;
}

}  // namespace dexlab
