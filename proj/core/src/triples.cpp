#include "dexlab/triples.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "dexlab/rng.hpp"

namespace dexlab {

double triangle_area(const Point2& p1, const Point2& p2, const Point2& p3) {
  double ux = p2.x - p1.x, uy = p2.y - p1.y;
  double vx = p3.x - p1.x, vy = p3.y - p1.y;
  return 0.5 * std::fabs(ux * vy - uy * vx);
}

namespace {

std::vector<double> default_r_grid() {
  // Log-spaced 1e-7 .. 1, 36 points.
  std::vector<double> r;
  for (int n = 0; n < 36; ++n) r.push_back(std::pow(10.0, -7.0 + 7.0 * n / 35.0));
  return r;
}

}  // namespace

TripleAreaStats triple_area_stats(const std::vector<Point2>& points, std::uint64_t samples,
                                  std::uint64_t seed, std::vector<double> r_grid) {
  if (points.size() < 3) throw std::invalid_argument("triple_area_stats: need at least 3 points");
  if (samples == 0) throw std::invalid_argument("triple_area_stats: need samples > 0");
  TripleAreaStats st;
  st.samples = samples;
  st.seed = seed;
  st.r_grid = r_grid.empty() ? default_r_grid() : std::move(r_grid);
  std::sort(st.r_grid.begin(), st.r_grid.end());

  Rng rng(seed);
  std::vector<double> areas;
  areas.reserve(samples);
  for (std::uint64_t n = 0; n < samples; ++n) {
    // Distinct indices: for a uniform counting measure the diagonal carries
    // an atom at area 0 that would defeat any power-law fit.
    std::uint64_t ia = rng.next_below(points.size());
    std::uint64_t ib, ic;
    do ib = rng.next_below(points.size()); while (ib == ia);
    do ic = rng.next_below(points.size()); while (ic == ia || ic == ib);
    areas.push_back(triangle_area(points[ia], points[ib], points[ic]));
  }
  std::sort(areas.begin(), areas.end());

  st.empirical_fraction.reserve(st.r_grid.size());
  for (double r : st.r_grid) {
    auto it = std::lower_bound(areas.begin(), areas.end(), r);  // areas < r
    st.empirical_fraction.push_back(static_cast<double>(it - areas.begin()) /
                                    static_cast<double>(samples));
  }

  // Least-squares slope of log F against log r on the usable window. Grid
  // points where the CDF has stalled (discreteness floor of a finite point
  // set) carry no slope information and are skipped.
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (std::size_t i = 0; i < st.r_grid.size(); ++i) {
    double f = st.empirical_fraction[i];
    if (f < 0.01 || f > 0.5) continue;
    if (i > 0 && !(f > st.empirical_fraction[i - 1])) continue;
    double lx = std::log(st.r_grid[i]), ly = std::log(f);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++n;
  }
  if (n >= 2 && (n * sxx - sx * sx) > 0.0) {
    st.fitted_beta = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  } else {
    st.fitted_beta = 0.0;
    st.flat_flagged = true;
  }
  return st;
}

TripleAreaStats triple_area_stats(const DyadicSet2D& K, std::uint64_t samples, std::uint64_t seed,
                                  std::vector<double> r_grid) {
  std::vector<Point2> pts;
  pts.reserve(K.size());
  for (std::size_t n = 0; n < K.size(); ++n) {
    auto [x, y] = K.cell_center(n);
    pts.push_back(Point2{x, y});
  }
  return triple_area_stats(pts, samples, seed, std::move(r_grid));
}

std::string triple_stats_csv(const TripleAreaStats& s) {
  std::ostringstream os;
  os << "r,fraction\n";
  os.precision(17);
  for (std::size_t i = 0; i < s.r_grid.size(); ++i)
    os << s.r_grid[i] << "," << s.empirical_fraction[i] << "\n";
  return os.str();
}

}  // namespace dexlab
