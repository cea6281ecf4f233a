#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace dexlab {

/// Finite union of half-open dyadic cells [i*delta, (i+1)*delta) at scale
/// delta = 2^-k, restricted to [0,1]. Cells are sorted and deduplicated.
struct DyadicSet1D {
  int scale_k = 0;
  std::vector<std::uint64_t> cells;

  static DyadicSet1D from_cells(int scale_k, std::vector<std::uint64_t> cells);

  double delta() const { return std::ldexp(1.0, -scale_k); }
  std::size_t size() const { return cells.size(); }
  double cell_center(std::size_t n) const;
};

struct Cell2 {
  std::uint32_t i = 0;
  std::uint32_t j = 0;
  friend auto operator<=>(const Cell2&, const Cell2&) = default;
};

/// Same for dyadic squares in [0,1]^2, lexicographically sorted.
struct DyadicSet2D {
  int scale_k = 0;
  std::vector<Cell2> cells;

  static DyadicSet2D from_cells(int scale_k, std::vector<Cell2> cells);

  double delta() const { return std::ldexp(1.0, -scale_k); }
  std::size_t size() const { return cells.size(); }
  std::pair<double, double> cell_center(std::size_t n) const;

  /// Tight cell-aligned bounding box {x0, x1, y0, y1}.
  std::array<double, 4> bounding_box() const;
};

/// Number of distinct scale-k' dyadic cells meeting the set, k' <= scale_k
/// (exact for dyadic coarsening). Throws std::invalid_argument on a finer
/// target scale.
std::uint64_t covering_number(const DyadicSet1D& s, int coarse_k);
std::uint64_t covering_number(const DyadicSet2D& s, int coarse_k);

DyadicSet1D coarsen(const DyadicSet1D& s, int coarse_k);
DyadicSet2D coarsen(const DyadicSet2D& s, int coarse_k);

/// log(count) / log(1/delta') at scale delta' = 2^-k; the covering exponent
/// convention used throughout the experiment reports.
double covering_exponent(std::uint64_t count, int k);

/// Text set format: header "dyadic1 k=<int>" or "dyadic2 k=<int>", then one
/// cell ("i" or "i j") per line in sorted order. Round-trips bit-exactly.
void save_set(std::ostream& os, const DyadicSet1D& s);
void save_set(std::ostream& os, const DyadicSet2D& s);
std::string set_to_string(const DyadicSet1D& s);
std::string set_to_string(const DyadicSet2D& s);

/// Parses either format; exactly one of the outputs is filled. Returns 1 or 2
/// for the dimension parsed. Throws std::invalid_argument on malformed input.
int load_set(std::istream& is, DyadicSet1D& out1, DyadicSet2D& out2);

}  // namespace dexlab
