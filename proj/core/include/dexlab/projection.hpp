#pragma once

#include <cstdint>
#include <utility>
#include <variant>
#include <vector>

#include "dexlab/bivariate_poly.hpp"
#include "dexlab/dyadic_set.hpp"

namespace dexlab {

struct Box {
  double x0 = 0.0, x1 = 1.0, y0 = 0.0, y1 = 1.0;
};

struct LinearFamily {
  double ex = 1.0, ey = 0.0;  // unit direction; value = e . q
};

struct PinnedDistanceFamily {
  double px = 0.0, py = 0.0;  // pin in [-4,4]^2
  bool squared = true;
};

struct GraphFamily {
  BivariatePoly poly;
};

struct AdditiveConvexFamily {
  std::vector<Rational> u;  // u[n] multiplies x^n
  std::vector<Rational> v;  // v[n] multiplies y^n
};

using ProjectionFamily =
    std::variant<LinearFamily, PinnedDistanceFamily, GraphFamily, AdditiveConvexFamily>;

LinearFamily make_linear(double dx, double dy);  // normalizes the direction

/// Builds u(x) + v(y) from polynomial text; u must depend on x only and v on
/// y only.
AdditiveConvexFamily make_additive_convex(const std::string& u_text, const std::string& v_text);

double family_value(const ProjectionFamily& fam, double x, double y);

/// Upper bound for sup |grad phi| over the box, from closed forms (linear,
/// distances) or coefficient-norm interval bounds (polynomial families).
double gradient_bound(const ProjectionFamily& fam, const Box& box);

/// Certified enclosure of the family's values over a box; the affine chart
/// used to normalize image values into [0,1].
std::pair<double, double> family_range(const ProjectionFamily& fam, const Box& box);

struct ImageEstimate {
  std::uint64_t inner_count = 0;  // cells hit by cell-center values
  // Cells hit after thickening each center value by the componentwise
  // Lipschitz slack (Lx + Ly)*delta/2, counted over half-open spans; an
  // upper bound for the covering number of the continuous image.
  std::uint64_t outer_count = 0;
  double lipschitz_bound_used = 0.0;  // Euclidean sup-gradient bound on the bounding box
  double chart_lo = 0.0;  // value v maps to (v - chart_lo) / (chart_hi - chart_lo)
  double chart_hi = 1.0;
};

/// 1D image of the cell centers of X at X's scale, affinely normalized to
/// [0,1] by the family's certified range over the domain square [0,1]^2 (the
/// chart is recorded). The true covering number of the continuous image lies
/// in [inner_count, outer_count]; the Lipschitz bound uses X's bounding box.
/// Throws std::invalid_argument on an empty set.
std::pair<DyadicSet1D, ImageEstimate> image(const ProjectionFamily& fam, const DyadicSet2D& X);

std::pair<DyadicSet1D, ImageEstimate> pinned_distance_set(double px, double py,
                                                          const DyadicSet2D& X, bool squared);

}  // namespace dexlab
