#pragma once

#include <array>
#include <optional>

#include "dexlab/bivariate_poly.hpp"
#include "dexlab/web.hpp"

namespace dexlab {

/// Three-pin configuration (t,0), (-t,0), (a,b) with the squared-distance
/// web phi_i(q) = |p_i - q|^2. The pins are collinear exactly when b = 0.
struct PinnedWeb {
  double t;
  double a;
  double b;
};

/// Quintic numerator of the closed-form curvature density; coefficients are
/// polynomial expressions in t, a, b (built exactly, coefficient of x^5 is
/// -b^2).
BivariatePoly pinned_curvature_f(const Rational& t, const Rational& a, const Rational& b);

/// g(x,y) = y(-b x + (t+a) y - b t)(b x + (t-a) y - b t); vanishes exactly on
/// the x-axis and the two lines joining (a,b) to the pins.
BivariatePoly pinned_curvature_g(const Rational& t, const Rational& a, const Rational& b);

BivariatePoly pinned_curvature_f(const PinnedWeb& web);
BivariatePoly pinned_curvature_g(const PinnedWeb& web);

/// Closed-form curvature density b*f(x,y)/g(x,y)^2 relative to dx^dy.
/// Normalization (pinned down empirically and by exact symbolic derivation;
/// the literature leaves the sign/constant open): fd_blaschke_curvature of
/// the squared-distance web returns -2 times this value -- the closed form
/// carries the opposite orientation from the curvature-form coefficient, and
/// the form's leading 2 is not part of b*f/g^2. Both conventions vanish
/// together in the collinear case b = 0. Returns nullopt when
/// |g(x,y)| < pole_epsilon, i.e. on or near one of the three pin lines or
/// the x-axis.
std::optional<double> pinned_curvature(const PinnedWeb& web, double x, double y,
                                       double pole_epsilon = kPoleEpsilon);

/// The squared-distance web functions (phi1, phi2, phi3) for the three pins.
std::array<WebFunction, 3> pinned_web_functions(const PinnedWeb& web);

}  // namespace dexlab
