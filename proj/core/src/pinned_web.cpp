#include "dexlab/pinned_web.hpp"

#include <cmath>
#include <stdexcept>

namespace dexlab {

BivariatePoly pinned_curvature_f(const Rational& t, const Rational& a, const Rational& b) {
  const Rational t2 = t * t, t4 = t2 * t2;
  const Rational a2 = a * a, a3 = a2 * a;
  const Rational b2 = b * b, b3 = b2 * b;

  BivariatePoly f;
  // y^0 group
  f.add_term(0, 0, a * b2 * t4);
  f.add_term(1, 0, -b2 * t4);
  f.add_term(2, 0, -2 * a * b2 * t2);
  f.add_term(3, 0, 2 * b2 * t2);
  f.add_term(4, 0, a * b2);
  f.add_term(5, 0, -b2);
  // y^1 group
  f.add_term(0, 1, -4 * a * b * t4);
  f.add_term(1, 1, 4 * a2 * b * t2 + 4 * b * t4);
  f.add_term(3, 1, -4 * a2 * b - 4 * b * t2);
  f.add_term(4, 1, 4 * a * b);
  // y^2 group
  f.add_term(0, 2, -3 * a3 * t2 - a * b2 * t2 + 3 * a * t4);
  f.add_term(1, 2, 3 * a2 * t2 + 3 * b2 * t2 - 3 * t4);
  f.add_term(2, 2, 3 * a3 - 3 * a * b2 - 3 * a * t2);
  f.add_term(3, 2, -3 * a2 + b2 + 3 * t2);
  // y^3 group
  f.add_term(0, 3, 2 * a * b * t2);
  f.add_term(1, 3, 2 * a2 * b - 2 * b3 - 6 * b * t2);
  f.add_term(2, 3, 2 * a * b);
  // y^4 group
  f.add_term(0, 4, a3 + 2 * a * b2 - a * t2);
  f.add_term(1, 4, -3 * a2 + 2 * b2 + 3 * t2);
  // y^5 group
  f.add_term(0, 5, -2 * a * b);
  return f;
}

BivariatePoly pinned_curvature_g(const Rational& t, const Rational& a, const Rational& b) {
  BivariatePoly lhs;  // -b x + (t+a) y - b t
  lhs.add_term(1, 0, -b);
  lhs.add_term(0, 1, t + a);
  lhs.add_term(0, 0, -b * t);
  BivariatePoly rhs;  // b x + (t-a) y - b t
  rhs.add_term(1, 0, b);
  rhs.add_term(0, 1, t - a);
  rhs.add_term(0, 0, -b * t);
  return BivariatePoly::y() * lhs * rhs;
}

namespace {

void check_web(const PinnedWeb& web) {
  if (!(web.t > 0)) throw std::invalid_argument("PinnedWeb: t must be positive");
}

}  // namespace

BivariatePoly pinned_curvature_f(const PinnedWeb& web) {
  check_web(web);
  return pinned_curvature_f(rational_from_double(web.t), rational_from_double(web.a),
                            rational_from_double(web.b));
}

BivariatePoly pinned_curvature_g(const PinnedWeb& web) {
  check_web(web);
  return pinned_curvature_g(rational_from_double(web.t), rational_from_double(web.a),
                            rational_from_double(web.b));
}

std::optional<double> pinned_curvature(const PinnedWeb& web, double x, double y,
                                       double pole_epsilon) {
  check_web(web);
  double g = pinned_curvature_g(web).evaluate_f64(x, y);
  if (std::fabs(g) < pole_epsilon) return std::nullopt;
  double f = pinned_curvature_f(web).evaluate_f64(x, y);
  return web.b * f / (g * g);
}

std::array<WebFunction, 3> pinned_web_functions(const PinnedWeb& web) {
  check_web(web);
  return {web_squared_distance(web.t, 0.0), web_squared_distance(-web.t, 0.0),
          web_squared_distance(web.a, web.b)};
}

}  // namespace dexlab
