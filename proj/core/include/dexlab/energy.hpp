#pragma once

#include <cstdint>

#include "dexlab/bivariate_poly.hpp"
#include "dexlab/dyadic_set.hpp"

namespace dexlab {

/// Count of ordered cell pairs of E^2 whose P-values at cell centers differ
/// by at most tolerance_c * delta. The diagonal is always counted, so
/// m <= quadruple_count <= m^2.
struct EnergyCount {
  std::uint64_t quadruple_count = 0;
  double tolerance_c = 1.0;
  std::uint64_t m = 0;            // number of cells contributing values
  std::uint64_t total_pairs = 0;  // m^2
  double normalized_exponent = 0.0;  // log(quadruple_count) / log(1/delta)
  int scale_k = 0;
};

/// Sorted two-pointer window sweep, O(m log m) time and O(m) memory; agrees
/// exactly with the quadratic enumeration.
EnergyCount energy_count(const BivariatePoly& P, const DyadicSet2D& E, double tolerance_c = 1.0);

/// Reference O(m^2) count for cross-checks.
std::uint64_t energy_count_brute_force(const BivariatePoly& P, const DyadicSet2D& E,
                                       double tolerance_c = 1.0);

struct GrowthBound {
  double image_lower_bound = 0.0;  // c_floor * entropy^2 / quadruple_count
};

/// Cauchy-Schwarz conversion of an energy bound into an image lower bound.
/// Implicit constants are set to 1; the harness flags the result as
/// heuristic. Requires quadruple_count >= entropy_x (the diagonal).
GrowthBound cs_image_lower_bound(std::uint64_t entropy_x, const EnergyCount& ec,
                                 double gradient_floor_c);

}  // namespace dexlab
