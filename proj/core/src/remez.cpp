#include "dexlab/remez.hpp"

#include <cmath>
#include <stdexcept>

namespace dexlab {

namespace {

RemezCheck finish(double lambda, int degree, int d, double grid_max, double lipschitz, double h,
                  std::uint64_t below, std::uint64_t total, int grid_n) {
  RemezCheck rc;
  rc.lambda = lambda;
  rc.degree = degree;
  rc.grid_n = grid_n;
  rc.grid_max = grid_max;
  rc.measured_fraction = static_cast<double>(below) / static_cast<double>(total);
  double inv_d = degree > 0 ? 1.0 / degree : 1.0;
  rc.bound = 4.0 * d * std::pow(lambda, inv_d);
  rc.slack_lambda = std::min(1.0, lambda + lipschitz * h * std::sqrt(static_cast<double>(d)) /
                                               (2.0 * grid_max));
  rc.bound_with_slack = 4.0 * d * std::pow(rc.slack_lambda, inv_d);
  rc.passed = rc.measured_fraction <= rc.bound_with_slack;
  return rc;
}

}  // namespace

RemezCheck remez_check(const BivariatePoly& P, const Box& omega_box, double lambda, int grid_n) {
  if (!(lambda > 0.0 && lambda < 1.0)) throw std::invalid_argument("remez: need 0 < lambda < 1");
  if (grid_n < 2) throw std::invalid_argument("remez: grid too small");
  if (P.is_zero()) throw std::invalid_argument("remez: zero polynomial");
  CompiledPoly cp(P);
  const double hx = (omega_box.x1 - omega_box.x0) / grid_n;
  const double hy = (omega_box.y1 - omega_box.y0) / grid_n;
  double m = 0.0;
  std::vector<double> vals;
  vals.reserve(static_cast<std::size_t>(grid_n) * static_cast<std::size_t>(grid_n));
  for (int i = 0; i < grid_n; ++i) {
    double x = omega_box.x0 + (i + 0.5) * hx;
    for (int j = 0; j < grid_n; ++j) {
      double y = omega_box.y0 + (j + 0.5) * hy;
      double v = std::fabs(cp(x, y));
      vals.push_back(v);
      m = std::max(m, v);
    }
  }
  if (!(m > 0.0)) throw std::invalid_argument("remez: polynomial vanishes on the whole grid");
  std::uint64_t below = 0;
  for (double v : vals)
    if (v <= lambda * m) ++below;
  double l = gradient_bound(GraphFamily{P}, omega_box);
  return finish(lambda, P.degree(), 2, m, l, std::max(hx, hy), below, vals.size(), grid_n);
}

RemezCheck remez_check_1d(const BivariatePoly& P, double lo, double hi, double lambda,
                          int grid_n) {
  if (!(lambda > 0.0 && lambda < 1.0)) throw std::invalid_argument("remez: need 0 < lambda < 1");
  if (grid_n < 2) throw std::invalid_argument("remez: grid too small");
  for (const auto& [e, c] : P.terms())
    if (e.j != 0) throw std::invalid_argument("remez_check_1d: polynomial depends on y");
  CompiledPoly cp(P);
  const double h = (hi - lo) / grid_n;
  double m = 0.0;
  std::vector<double> vals;
  vals.reserve(static_cast<std::size_t>(grid_n));
  for (int i = 0; i < grid_n; ++i) {
    double v = std::fabs(cp(lo + (i + 0.5) * h, 0.0));
    vals.push_back(v);
    m = std::max(m, v);
  }
  if (!(m > 0.0)) throw std::invalid_argument("remez: polynomial vanishes on the whole grid");
  std::uint64_t below = 0;
  for (double v : vals)
    if (v <= lambda * m) ++below;
  double l = gradient_bound(GraphFamily{P}, Box{lo, hi, 0.0, 0.0});
  return finish(lambda, P.degree(), 1, m, l, h, below, vals.size(), grid_n);
}

}  // namespace dexlab
