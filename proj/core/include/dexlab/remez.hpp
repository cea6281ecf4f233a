#pragma once

#include "dexlab/bivariate_poly.hpp"
#include "dexlab/projection.hpp"

namespace dexlab {

/// Grid audit of the sublevel bound |{z in Omega : |P(z)| <= lambda*m}| <=
/// 4*d*|Omega|*lambda^(1/D) for a degree-D polynomial, m = sup |P|.
/// m is estimated as the grid max, and one grid-cell diagonal of Lipschitz
/// slack is added on the bound side (slack_lambda), so `passed` is a sound
/// consequence of the inequality rather than a grid artifact.
struct RemezCheck {
  double lambda = 0.0;
  double measured_fraction = 0.0;  // grid measure of {|P| <= lambda * m}
  double bound = 0.0;              // 4*d*lambda^(1/D)
  double slack_lambda = 0.0;       // lambda + L*h*sqrt(d)/(2m)
  double bound_with_slack = 0.0;   // 4*d*slack_lambda^(1/D)
  double grid_max = 0.0;           // m
  int degree = 0;
  int grid_n = 0;
  bool passed = false;
};

/// d = 2 over a rectangle.
RemezCheck remez_check(const BivariatePoly& P, const Box& omega_box, double lambda, int grid_n);

/// d = 1: P must depend on x only; Omega = [lo, hi].
RemezCheck remez_check_1d(const BivariatePoly& P, double lo, double hi, double lambda, int grid_n);

}  // namespace dexlab
