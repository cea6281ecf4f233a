#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>

#include "dexlab/bivariate_poly.hpp"

namespace dexlab {

inline constexpr double kPoleEpsilon = 1e-12;

struct CurvatureReport {
  BivariatePoly numerator;  // N_P
  bool is_identically_zero = false;
  bool px_zero = false;
  bool py_zero = false;
  bool pxy_zero = false;
};

/// N_P = (P_y)^2 (P_x P_xxy - P_xx P_xy) - (P_x)^2 (P_y P_xyy - P_xy P_yy).
/// Where P_x, P_y, P_xy are nonzero this equals (P_xy)^2 K_P and
/// (P_x P_y)^2 d^2/dxdy log(P_x/P_y); N_P == 0 characterizes the
/// multiplicatively/additively decomposable polynomials.
BivariatePoly curvature_numerator(const BivariatePoly& P);

CurvatureReport curvature_report(const BivariatePoly& P);

enum class SpecialFormKind { Special, NotSpecial, DegenerateSpecial };

struct SpecialFormDecision {
  SpecialFormKind kind;
  // Set for DegenerateSpecial: which partial vanishes identically.
  bool px_zero = false;
  bool py_zero = false;
  bool pxy_zero = false;
  std::string reason;
};

/// Exact decision procedure. Degenerate cases (P_x, P_y or P_xy identically
/// zero) are reported separately from the curvature-numerator test so callers
/// can see which hypothesis failed.
SpecialFormDecision is_special_form(const BivariatePoly& P);

/// K_P(x,y) = N_P(x,y) / P_xy(x,y)^2. Returns nullopt (pole) when
/// |P_xy(x,y)| < pole_epsilon.
std::optional<double> eval_kp(const BivariatePoly& P, double x, double y,
                              double pole_epsilon = kPoleEpsilon);

/// H_F for F(x,x',y,y') = P(x,y) - P(x',y'):
///   H_F = P_x(x,y) P_y(x,y) P_xy(x',y') - P_x(x',y') P_y(x',y') P_xy(x,y).
double eval_hf(const BivariatePoly& P, double x, double xp, double y, double yp);

/// Same quantity in exact arithmetic (identity tests need it).
Rational eval_hf_exact(const BivariatePoly& P, const Rational& x, const Rational& xp,
                       const Rational& y, const Rational& yp);

/// A member of a smooth 3-web: value plus analytic gradient.
struct WebFunction {
  std::function<double(double, double)> value;
  std::function<std::array<double, 2>(double, double)> gradient;
};

WebFunction web_from_poly(const BivariatePoly& P);
WebFunction web_linear(double cx, double cy);                 // cx*x + cy*y
WebFunction web_squared_distance(double px, double py);       // |q - p|^2

/// Finite-difference Blaschke curvature of the 3-web (phi1, phi2, phi3),
/// reported as the coefficient of the curvature form relative to dx^dy.
/// Convention (documented, used by every cross-check in this project): the
/// leading factor 2 of the form is included, i.e. the returned value is
///   2 * (d/dphi1)(d/dphi2) log((dphi3/dphi1)/(dphi3/dphi2)) * (grad phi1 ^ grad phi2).
/// For the web (x, y, P) this equals 2*N_P/(P_x P_y)^2; for the pinned
/// three-point web it equals 2*b*f/g^2 (see pinned_web.hpp).
/// The directional derivatives d/dphi_i use the dual basis of
/// (grad phi1, grad phi2), re-solved at every stencil point. Central
/// differences with step h; one Richardson step optional.
/// Returns nullopt when |grad phi1 ^ grad phi2| <= h at the base point.
std::optional<double> fd_blaschke_curvature(const WebFunction& phi1, const WebFunction& phi2,
                                            const WebFunction& phi3, double x, double y,
                                            double h = 1e-4, bool richardson = false);

}  // namespace dexlab
