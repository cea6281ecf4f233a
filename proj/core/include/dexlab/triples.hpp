#pragma once

#include <cstdint>
#include <vector>

#include "dexlab/dyadic_set.hpp"

namespace dexlab {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

/// Half the absolute cross product of the edge vectors.
double triangle_area(const Point2& p1, const Point2& p2, const Point2& p3);

/// Empirical CDF of the triangle area of seeded i.i.d. point triples, plus a
/// log-log least-squares fit of the exponent beta over the r-range where the
/// CDF sits in [0.01, 0.5] (avoids the flat tail and the saturated head).
/// The fit is a uniform-sampling surrogate for the measure-theoretic
/// definition and can misclassify sets whose good measure is far from
/// uniform; `caveat` records that.
struct TripleAreaStats {
  std::vector<double> r_grid;
  std::vector<double> empirical_fraction;  // nondecreasing, in [0,1]
  double fitted_beta = 0.0;
  bool flat_flagged = false;  // no usable fit window; areas concentrate at 0
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  const char* caveat =
      "beta fitted from uniform triple sampling; a witness measure may differ";
};

TripleAreaStats triple_area_stats(const std::vector<Point2>& points, std::uint64_t samples,
                                  std::uint64_t seed, std::vector<double> r_grid = {});

/// Cell-center overload.
TripleAreaStats triple_area_stats(const DyadicSet2D& K, std::uint64_t samples, std::uint64_t seed,
                                  std::vector<double> r_grid = {});

/// Stats as CSV with columns "r,fraction".
std::string triple_stats_csv(const TripleAreaStats& s);

}  // namespace dexlab
