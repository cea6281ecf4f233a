#include "dexlab/energy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace dexlab {

namespace {

std::vector<double> center_values(const BivariatePoly& P, const DyadicSet2D& E) {
  CompiledPoly cp(P);
  std::vector<double> v;
  v.reserve(E.size());
  for (std::size_t n = 0; n < E.size(); ++n) {
    auto [x, y] = E.cell_center(n);
    v.push_back(cp(x, y));
  }
  return v;
}

}  // namespace

EnergyCount energy_count(const BivariatePoly& P, const DyadicSet2D& E, double tolerance_c) {
  if (!(tolerance_c > 0.0)) throw std::invalid_argument("energy_count: tolerance must be positive");
  EnergyCount ec;
  ec.tolerance_c = tolerance_c;
  ec.scale_k = E.scale_k;
  std::vector<double> v = center_values(P, E);
  ec.m = v.size();
  ec.total_pairs = ec.m * ec.m;
  std::sort(v.begin(), v.end());
  const double window = tolerance_c * E.delta();
  std::uint64_t count = 0;
  std::size_t lo = 0, hi = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    while (v[i] - v[lo] > window) ++lo;
    if (hi < i) hi = i;
    while (hi + 1 < v.size() && v[hi + 1] - v[i] <= window) ++hi;
    count += hi - lo + 1;
  }
  ec.quadruple_count = count;
  ec.normalized_exponent = covering_exponent(count, E.scale_k);
  return ec;
}

std::uint64_t energy_count_brute_force(const BivariatePoly& P, const DyadicSet2D& E,
                                       double tolerance_c) {
  std::vector<double> v = center_values(P, E);
  const double window = tolerance_c * E.delta();
  std::uint64_t count = 0;
  for (double a : v)
    for (double b : v)
      if (std::fabs(a - b) <= window) ++count;
  return count;
}

GrowthBound cs_image_lower_bound(std::uint64_t entropy_x, const EnergyCount& ec,
                                 double gradient_floor_c) {
  if (ec.quadruple_count < entropy_x)
    throw std::invalid_argument("cs_image_lower_bound: energy below the diagonal count");
  GrowthBound g;
  g.image_lower_bound = gradient_floor_c * static_cast<double>(entropy_x) *
                        static_cast<double>(entropy_x) /
                        static_cast<double>(ec.quadruple_count);
  return g;
}

}  // namespace dexlab
