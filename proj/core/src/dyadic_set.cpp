#include "dexlab/dyadic_set.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <ostream>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace dexlab {

namespace {

void check_scale(int k, int max_k) {
  if (k < 0 || k > max_k) throw std::invalid_argument("dyadic scale_k out of range");
}

}  // namespace

DyadicSet1D DyadicSet1D::from_cells(int scale_k, std::vector<std::uint64_t> cells) {
  check_scale(scale_k, 62);
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  if (!cells.empty() && cells.back() >= (std::uint64_t{1} << scale_k))
    throw std::invalid_argument("DyadicSet1D: cell index out of range");
  return DyadicSet1D{scale_k, std::move(cells)};
}

double DyadicSet1D::cell_center(std::size_t n) const {
  return std::ldexp(static_cast<double>(cells[n]) + 0.5, -scale_k);
}

DyadicSet2D DyadicSet2D::from_cells(int scale_k, std::vector<Cell2> cells) {
  check_scale(scale_k, 31);
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  if (!cells.empty()) {
    std::uint64_t limit = std::uint64_t{1} << scale_k;
    for (const Cell2& c : cells)
      if (c.i >= limit || c.j >= limit)
        throw std::invalid_argument("DyadicSet2D: cell index out of range");
  }
  return DyadicSet2D{scale_k, std::move(cells)};
}

std::pair<double, double> DyadicSet2D::cell_center(std::size_t n) const {
  return {std::ldexp(static_cast<double>(cells[n].i) + 0.5, -scale_k),
          std::ldexp(static_cast<double>(cells[n].j) + 0.5, -scale_k)};
}

std::array<double, 4> DyadicSet2D::bounding_box() const {
  if (cells.empty()) throw std::invalid_argument("bounding_box of empty set");
  std::uint32_t i0 = cells.front().i, i1 = cells.front().i;
  std::uint32_t j0 = cells.front().j, j1 = cells.front().j;
  for (const Cell2& c : cells) {
    i0 = std::min(i0, c.i);
    i1 = std::max(i1, c.i);
    j0 = std::min(j0, c.j);
    j1 = std::max(j1, c.j);
  }
  double d = delta();
  return {i0 * d, (i1 + 1.0) * d, j0 * d, (j1 + 1.0) * d};
}

namespace {

int shift_for(int scale_k, int coarse_k) {
  if (coarse_k > scale_k)
    throw std::invalid_argument("covering: target scale finer than the set's scale");
  if (coarse_k < 0) throw std::invalid_argument("covering: negative scale");
  return scale_k - coarse_k;
}

}  // namespace

std::uint64_t covering_number(const DyadicSet1D& s, int coarse_k) {
  int sh = shift_for(s.scale_k, coarse_k);
  std::uint64_t count = 0, prev = 0;
  bool first = true;
  for (std::uint64_t c : s.cells) {
    std::uint64_t p = c >> sh;
    if (first || p != prev) ++count;
    prev = p;
    first = false;
  }
  return count;
}

std::uint64_t covering_number(const DyadicSet2D& s, int coarse_k) {
  return coarsen(s, coarse_k).cells.size();
}

DyadicSet1D coarsen(const DyadicSet1D& s, int coarse_k) {
  int sh = shift_for(s.scale_k, coarse_k);
  std::vector<std::uint64_t> out;
  out.reserve(s.cells.size());
  for (std::uint64_t c : s.cells) out.push_back(c >> sh);
  return DyadicSet1D::from_cells(coarse_k, std::move(out));
}

DyadicSet2D coarsen(const DyadicSet2D& s, int coarse_k) {
  int sh = shift_for(s.scale_k, coarse_k);
  std::vector<Cell2> out;
  out.reserve(s.cells.size());
  for (const Cell2& c : s.cells) out.push_back(Cell2{c.i >> sh, c.j >> sh});
  return DyadicSet2D::from_cells(coarse_k, std::move(out));
}

double covering_exponent(std::uint64_t count, int k) {
  if (count == 0 || k <= 0) return 0.0;
  return std::log2(static_cast<double>(count)) / static_cast<double>(k);
}

void save_set(std::ostream& os, const DyadicSet1D& s) {
  os << "dyadic1 k=" << s.scale_k << "\n";
  for (std::uint64_t c : s.cells) os << c << "\n";
}

void save_set(std::ostream& os, const DyadicSet2D& s) {
  os << "dyadic2 k=" << s.scale_k << "\n";
  for (const Cell2& c : s.cells) os << c.i << " " << c.j << "\n";
}

std::string set_to_string(const DyadicSet1D& s) {
  std::ostringstream os;
  save_set(os, s);
  return os.str();
}

std::string set_to_string(const DyadicSet2D& s) {
  std::ostringstream os;
  save_set(os, s);
  return os.str();
}

int load_set(std::istream& is, DyadicSet1D& out1, DyadicSet2D& out2) {
  std::string header;
  if (!std::getline(is, header)) throw std::invalid_argument("set file: missing header");
  int dim = 0;
  int k = -1;
  if (header.rfind("dyadic1 k=", 0) == 0) {
    dim = 1;
    k = std::stoi(header.substr(10));
  } else if (header.rfind("dyadic2 k=", 0) == 0) {
    dim = 2;
    k = std::stoi(header.substr(10));
  } else {
    throw std::invalid_argument("set file: bad header '" + header + "'");
  }
  std::string line;
  std::vector<std::uint64_t> cells1;
  std::vector<Cell2> cells2;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    if (dim == 1) {
      std::uint64_t i;
      if (!(ls >> i)) throw std::invalid_argument("set file: bad 1d cell line");
      cells1.push_back(i);
    } else {
      std::uint64_t i, j;
      if (!(ls >> i >> j)) throw std::invalid_argument("set file: bad 2d cell line");
      cells2.push_back(Cell2{static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)});
    }
  }
  if (dim == 1)
    out1 = DyadicSet1D::from_cells(k, std::move(cells1));
  else
    out2 = DyadicSet2D::from_cells(k, std::move(cells2));
  return dim;
}

}  // namespace dexlab
