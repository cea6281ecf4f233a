#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "dexlab/bivariate_poly.hpp"

namespace dexlab {

/// Axis-aligned box in [0,1]^d, d in {1,2,3}.
struct BoxD {
  int dim = 2;
  std::array<double, 3> lo{0.0, 0.0, 0.0};
  std::array<double, 3> hi{1.0, 1.0, 1.0};
};

/// Conservative membership answer for a whole box. Unknown forces
/// subdivision, so cubes emitted by the decomposition are certified inside.
enum class BoxStatus { Inside, Outside, Unknown };

using BoxPredicate = std::function<BoxStatus(const BoxD&)>;

/// Dyadic cube at side 2^-depth; index holds the first `dim` coordinates.
struct WhitneyCube {
  int depth = 0;
  std::array<std::uint32_t, 3> index{0, 0, 0};
};

/// Decomposition of an open set Omega inside the root cube [0,1]^d.
/// Emitted cubes have pairwise-disjoint interiors, each is certified inside
/// Omega, and the side/distance sandwich
///   side(Q) <= dist(Q, [0,1]^d \ Omega) <= 4*sqrt(d)*side(Q)
/// holds (acceptance test: the concentric 3-fold dilate, clipped to the root
/// cube, lies inside Omega while the parent's did not). Volumes are tracked
/// exactly in units of 2^(-dim*max_depth).
struct WhitneyResult {
  int dim = 2;
  int max_depth = 0;
  std::vector<WhitneyCube> cubes;       // ordered by (depth, index)
  std::uint64_t interior_units = 0;     // total volume of accepted cubes
  std::uint64_t exterior_units = 0;     // cubes certified outside Omega
  std::uint64_t unresolved_units = 0;   // truncated at max_depth, still unknown
  double unit_volume = 0.0;             // 2^(-dim*max_depth)
};

/// max_depth <= 24/dim keeps the exact volume ledger inside 64 bits.
WhitneyResult whitney_decompose(const BoxPredicate& omega, int dim, int max_depth);

/// Predicate for the open unit cube (0,1)^d (complement: the boundary frame).
BoxPredicate omega_open_unit_cube(int dim);

/// Predicate for [0,1]^2 minus the zero set of a polynomial, decided by an
/// interval enclosure of P over the box.
BoxPredicate omega_offdiagonal();                    // [0,1]^2 \ Z(x - y)
BoxPredicate omega_poly_complement(BivariatePoly P); // [0,1]^2 \ Z(P)

/// Predicate for the unit square minus one corner point.
BoxPredicate omega_deleted_corner(double cx, double cy);

BoxD cube_box(const WhitneyCube& cube, int dim);

/// Text format: one line per cube, "depth i [j [k]]".
std::string whitney_to_string(const WhitneyResult& r);

}  // namespace dexlab
