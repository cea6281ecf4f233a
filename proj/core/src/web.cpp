#include "dexlab/web.hpp"

#include <cmath>
#include <memory>

namespace dexlab {

BivariatePoly curvature_numerator(const BivariatePoly& P) {
  BivariatePoly px = P.partial(Var::X);
  BivariatePoly py = P.partial(Var::Y);
  BivariatePoly pxx = px.partial(Var::X);
  BivariatePoly pxy = px.partial(Var::Y);
  BivariatePoly pyy = py.partial(Var::Y);
  BivariatePoly pxxy = pxx.partial(Var::Y);
  BivariatePoly pxyy = pxy.partial(Var::Y);
  return py * py * (px * pxxy - pxx * pxy) - px * px * (py * pxyy - pxy * pyy);
}

CurvatureReport curvature_report(const BivariatePoly& P) {
  CurvatureReport r;
  r.px_zero = P.partial(Var::X).is_zero();
  r.py_zero = P.partial(Var::Y).is_zero();
  r.pxy_zero = P.partial(Var::X).partial(Var::Y).is_zero();
  r.numerator = curvature_numerator(P);
  r.is_identically_zero = r.numerator.is_zero();
  return r;
}

SpecialFormDecision is_special_form(const BivariatePoly& P) {
  SpecialFormDecision d{};
  CurvatureReport rep = curvature_report(P);
  if (rep.px_zero || rep.py_zero || rep.pxy_zero) {
    d.kind = SpecialFormKind::DegenerateSpecial;
    d.px_zero = rep.px_zero;
    d.py_zero = rep.py_zero;
    d.pxy_zero = rep.pxy_zero;
    if (rep.px_zero || rep.py_zero)
      d.reason = "a first partial vanishes identically; P depends on one variable";
    else
      d.reason = "P_xy vanishes identically; P = a(x) + b(y)";
    return d;
  }
  if (rep.is_identically_zero) {
    d.kind = SpecialFormKind::Special;
    d.reason = "curvature numerator N_P vanishes identically";
  } else {
    d.kind = SpecialFormKind::NotSpecial;
    d.reason = "curvature numerator N_P is a nonzero polynomial";
  }
  return d;
}

std::optional<double> eval_kp(const BivariatePoly& P, double x, double y, double pole_epsilon) {
  double pxy = P.partial(Var::X).partial(Var::Y).evaluate_f64(x, y);
  if (std::fabs(pxy) < pole_epsilon) return std::nullopt;
  double n = curvature_numerator(P).evaluate_f64(x, y);
  return n / (pxy * pxy);
}

double eval_hf(const BivariatePoly& P, double x, double xp, double y, double yp) {
  BivariatePoly px = P.partial(Var::X);
  BivariatePoly py = P.partial(Var::Y);
  BivariatePoly pxy = px.partial(Var::Y);
  return px.evaluate_f64(x, y) * py.evaluate_f64(x, y) * pxy.evaluate_f64(xp, yp) -
         px.evaluate_f64(xp, yp) * py.evaluate_f64(xp, yp) * pxy.evaluate_f64(x, y);
}

Rational eval_hf_exact(const BivariatePoly& P, const Rational& x, const Rational& xp,
                       const Rational& y, const Rational& yp) {
  BivariatePoly px = P.partial(Var::X);
  BivariatePoly py = P.partial(Var::Y);
  BivariatePoly pxy = px.partial(Var::Y);
  return px.evaluate(x, y) * py.evaluate(x, y) * pxy.evaluate(xp, yp) -
         px.evaluate(xp, yp) * py.evaluate(xp, yp) * pxy.evaluate(x, y);
}

WebFunction web_from_poly(const BivariatePoly& P) {
  auto val = std::make_shared<CompiledPoly>(P);
  auto gx = std::make_shared<CompiledPoly>(P.partial(Var::X));
  auto gy = std::make_shared<CompiledPoly>(P.partial(Var::Y));
  WebFunction w;
  w.value = [val](double x, double y) { return (*val)(x, y); };
  w.gradient = [gx, gy](double x, double y) {
    return std::array<double, 2>{(*gx)(x, y), (*gy)(x, y)};
  };
  return w;
}

WebFunction web_linear(double cx, double cy) {
  WebFunction w;
  w.value = [cx, cy](double x, double y) { return cx * x + cy * y; };
  w.gradient = [cx, cy](double, double) { return std::array<double, 2>{cx, cy}; };
  return w;
}

WebFunction web_squared_distance(double px, double py) {
  WebFunction w;
  w.value = [px, py](double x, double y) {
    return (x - px) * (x - px) + (y - py) * (y - py);
  };
  w.gradient = [px, py](double x, double y) {
    return std::array<double, 2>{2.0 * (x - px), 2.0 * (y - py)};
  };
  return w;
}

namespace {

// log of the slope ratio (dphi3/dphi1)/(dphi3/dphi2); log extended to R\{0}
// through |.|, which does not affect the second mixed derivative.
double log_slope_ratio(const WebFunction& f1, const WebFunction& f2, const WebFunction& f3,
                       double x, double y) {
  auto g1 = f1.gradient(x, y);
  auto g2 = f2.gradient(x, y);
  auto g3 = f3.gradient(x, y);
  double jac = g1[0] * g2[1] - g1[1] * g2[0];
  double w1x = g2[1] / jac, w1y = -g2[0] / jac;
  double w2x = -g1[1] / jac, w2y = g1[0] / jac;
  double d31 = g3[0] * w1x + g3[1] * w1y;
  double d32 = g3[0] * w2x + g3[1] * w2y;
  return std::log(std::fabs(d31 / d32));
}

double second_mixed_web_derivative(const WebFunction& f1, const WebFunction& f2,
                                   const WebFunction& f3, double x, double y, double h) {
  auto inner = [&](double px, double py) {
    // d/dphi2 of the log ratio, dual direction re-solved at (px, py).
    auto g1 = f1.gradient(px, py);
    auto g2 = f2.gradient(px, py);
    double jac = g1[0] * g2[1] - g1[1] * g2[0];
    double w2x = -g1[1] / jac, w2y = g1[0] / jac;
    return (log_slope_ratio(f1, f2, f3, px + h * w2x, py + h * w2y) -
            log_slope_ratio(f1, f2, f3, px - h * w2x, py - h * w2y)) /
           (2.0 * h);
  };
  auto g1 = f1.gradient(x, y);
  auto g2 = f2.gradient(x, y);
  double jac = g1[0] * g2[1] - g1[1] * g2[0];
  double w1x = g2[1] / jac, w1y = -g2[0] / jac;
  return (inner(x + h * w1x, y + h * w1y) - inner(x - h * w1x, y - h * w1y)) / (2.0 * h);
}

}  // namespace

std::optional<double> fd_blaschke_curvature(const WebFunction& phi1, const WebFunction& phi2,
                                            const WebFunction& phi3, double x, double y, double h,
                                            bool richardson) {
  auto g1 = phi1.gradient(x, y);
  auto g2 = phi2.gradient(x, y);
  double jac = g1[0] * g2[1] - g1[1] * g2[0];
  if (std::fabs(jac) <= h) return std::nullopt;  // degenerate web at this point
  double d = second_mixed_web_derivative(phi1, phi2, phi3, x, y, h);
  if (richardson) {
    double d2 = second_mixed_web_derivative(phi1, phi2, phi3, x, y, h / 2.0);
    d = (4.0 * d2 - d) / 3.0;
  }
  return 2.0 * d * jac;
}

}  // namespace dexlab
