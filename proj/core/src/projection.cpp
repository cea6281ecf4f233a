#include "dexlab/projection.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <memory>
#include <stdexcept>

#include "dexlab/poly_text.hpp"

namespace dexlab {

namespace {

double dist_point_box(double px, double py, const Box& b) {
  double dx = std::max({b.x0 - px, 0.0, px - b.x1});
  double dy = std::max({b.y0 - py, 0.0, py - b.y1});
  return std::hypot(dx, dy);
}

double max_dist_point_box(double px, double py, const Box& b) {
  double dx = std::max(std::fabs(px - b.x0), std::fabs(px - b.x1));
  double dy = std::max(std::fabs(py - b.y0), std::fabs(py - b.y1));
  return std::hypot(dx, dy);
}

// Interval enclosure of a polynomial over a box via termwise monomial bounds.
std::pair<double, double> poly_range_on_box(const BivariatePoly& p, const Box& b) {
  auto pow_range = [](double lo, double hi, int e) {
    // range of t^e over [lo, hi]
    if (e == 0) return std::pair<double, double>{1.0, 1.0};
    double a = std::pow(lo, e), c = std::pow(hi, e);
    double mn = std::min(a, c), mx = std::max(a, c);
    if (e % 2 == 0 && lo < 0.0 && hi > 0.0) mn = 0.0;
    return std::pair<double, double>{mn, mx};
  };
  double lo = 0.0, hi = 0.0;
  for (const auto& [e, c] : p.terms()) {
    auto [xmn, xmx] = pow_range(b.x0, b.x1, e.i);
    auto [ymn, ymx] = pow_range(b.y0, b.y1, e.j);
    double cd = to_double(c);
    double candidates[4] = {cd * xmn * ymn, cd * xmn * ymx, cd * xmx * ymn, cd * xmx * ymx};
    lo += *std::min_element(candidates, candidates + 4);
    hi += *std::max_element(candidates, candidates + 4);
  }
  return {lo, hi};
}

double poly_abs_bound_on_box(const BivariatePoly& p, const Box& b) {
  auto [lo, hi] = poly_range_on_box(p, b);
  return std::max(std::fabs(lo), std::fabs(hi));
}

BivariatePoly additive_poly(const AdditiveConvexFamily& f) {
  return BivariatePoly::univariate(Var::X, f.u) + BivariatePoly::univariate(Var::Y, f.v);
}

// Polynomial families pre-convert their coefficients once per grid sweep.
std::function<double(double, double)> compile_family(const ProjectionFamily& fam) {
  if (const auto* g = std::get_if<GraphFamily>(&fam)) {
    auto cp = std::make_shared<CompiledPoly>(g->poly);
    return [cp](double x, double y) { return (*cp)(x, y); };
  }
  if (const auto* a = std::get_if<AdditiveConvexFamily>(&fam)) {
    auto cp = std::make_shared<CompiledPoly>(additive_poly(*a));
    return [cp](double x, double y) { return (*cp)(x, y); };
  }
  ProjectionFamily copy = fam;
  return [copy](double x, double y) { return family_value(copy, x, y); };
}

}  // namespace

LinearFamily make_linear(double dx, double dy) {
  double n = std::hypot(dx, dy);
  if (!(n > 0.0)) throw std::invalid_argument("make_linear: zero direction");
  return LinearFamily{dx / n, dy / n};
}

AdditiveConvexFamily make_additive_convex(const std::string& u_text, const std::string& v_text) {
  BivariatePoly u = parse_poly(u_text);
  BivariatePoly v = parse_poly(v_text);
  AdditiveConvexFamily fam;
  for (const auto& [e, c] : u.terms()) {
    if (e.j != 0) throw std::invalid_argument("additive-convex: u must depend on x only");
    fam.u.resize(std::max(fam.u.size(), static_cast<std::size_t>(e.i) + 1), Rational(0));
    fam.u[static_cast<std::size_t>(e.i)] = c;
  }
  for (const auto& [e, c] : v.terms()) {
    if (e.i != 0) throw std::invalid_argument("additive-convex: v must depend on y only");
    fam.v.resize(std::max(fam.v.size(), static_cast<std::size_t>(e.j) + 1), Rational(0));
    fam.v[static_cast<std::size_t>(e.j)] = c;
  }
  return fam;
}

double family_value(const ProjectionFamily& fam, double x, double y) {
  return std::visit(
      [&](const auto& f) -> double {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, LinearFamily>) {
          return f.ex * x + f.ey * y;
        } else if constexpr (std::is_same_v<T, PinnedDistanceFamily>) {
          double d2 = (x - f.px) * (x - f.px) + (y - f.py) * (y - f.py);
          return f.squared ? d2 : std::sqrt(d2);
        } else if constexpr (std::is_same_v<T, GraphFamily>) {
          return f.poly.evaluate_f64(x, y);
        } else {
          return additive_poly(f).evaluate_f64(x, y);
        }
      },
      fam);
}

/// Componentwise bounds (sup |d phi/dx|, sup |d phi/dy|) over the box.
static std::pair<double, double> gradient_bound_components(const ProjectionFamily& fam,
                                                           const Box& box) {
  return std::visit(
      [&](const auto& f) -> std::pair<double, double> {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, LinearFamily>) {
          return {std::fabs(f.ex), std::fabs(f.ey)};
        } else if constexpr (std::is_same_v<T, PinnedDistanceFamily>) {
          if (!f.squared) return {1.0, 1.0};
          double mx = std::max(std::fabs(f.px - box.x0), std::fabs(f.px - box.x1));
          double my = std::max(std::fabs(f.py - box.y0), std::fabs(f.py - box.y1));
          return {2.0 * mx, 2.0 * my};
        } else if constexpr (std::is_same_v<T, GraphFamily>) {
          return {poly_abs_bound_on_box(f.poly.partial(Var::X), box),
                  poly_abs_bound_on_box(f.poly.partial(Var::Y), box)};
        } else {
          BivariatePoly p = additive_poly(f);
          return {poly_abs_bound_on_box(p.partial(Var::X), box),
                  poly_abs_bound_on_box(p.partial(Var::Y), box)};
        }
      },
      fam);
}

double gradient_bound(const ProjectionFamily& fam, const Box& box) {
  if (std::holds_alternative<LinearFamily>(fam)) return 1.0;
  if (const auto* p = std::get_if<PinnedDistanceFamily>(&fam); p && !p->squared) return 1.0;
  auto [bx, by] = gradient_bound_components(fam, box);
  return std::hypot(bx, by);
}

std::pair<double, double> family_range(const ProjectionFamily& fam, const Box& box) {
  return std::visit(
      [&](const auto& f) -> std::pair<double, double> {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, LinearFamily>) {
          double corners[4] = {f.ex * box.x0 + f.ey * box.y0, f.ex * box.x0 + f.ey * box.y1,
                               f.ex * box.x1 + f.ey * box.y0, f.ex * box.x1 + f.ey * box.y1};
          return {*std::min_element(corners, corners + 4), *std::max_element(corners, corners + 4)};
        } else if constexpr (std::is_same_v<T, PinnedDistanceFamily>) {
          double dmin = dist_point_box(f.px, f.py, box);
          double dmax = max_dist_point_box(f.px, f.py, box);
          return f.squared ? std::pair<double, double>{dmin * dmin, dmax * dmax}
                           : std::pair<double, double>{dmin, dmax};
        } else if constexpr (std::is_same_v<T, GraphFamily>) {
          return poly_range_on_box(f.poly, box);
        } else {
          return poly_range_on_box(additive_poly(f), box);
        }
      },
      fam);
}

std::pair<DyadicSet1D, ImageEstimate> image(const ProjectionFamily& fam, const DyadicSet2D& X) {
  if (X.cells.empty()) throw std::invalid_argument("image: empty set");
  const int k = X.scale_k;
  const std::uint64_t ncells = std::uint64_t{1} << k;
  const double delta = X.delta();

  ImageEstimate est;
  auto [lo, hi] = family_range(fam, Box{0.0, 1.0, 0.0, 1.0});
  if (!(hi > lo)) hi = lo + 1.0;  // constant family; keep the chart invertible
  est.chart_lo = lo;
  est.chart_hi = hi;
  const double width = hi - lo;

  auto bb = X.bounding_box();
  est.lipschitz_bound_used = gradient_bound(fam, Box{bb[0], bb[1], bb[2], bb[3]});

  auto eval = compile_family(fam);
  std::vector<double> values;
  values.reserve(X.size());
  for (std::size_t n = 0; n < X.size(); ++n) {
    auto [cx, cy] = X.cell_center(n);
    values.push_back(eval(cx, cy));
  }

  // Inner: distinct value cells of the normalized centers.
  std::vector<std::uint64_t> inner_cells;
  inner_cells.reserve(values.size());
  for (double v : values) {
    double u = (v - lo) / width;
    u = std::clamp(u, 0.0, 1.0);
    auto idx = static_cast<std::uint64_t>(u * static_cast<double>(ncells));
    if (idx >= ncells) idx = ncells - 1;
    inner_cells.push_back(idx);
  }
  DyadicSet1D img = DyadicSet1D::from_cells(k, std::move(inner_cells));
  est.inner_count = img.size();

  // Outer: every point of a cell lies within the componentwise Lipschitz
  // slack (Lx + Ly)*delta/2 of the center value, so the continuous image is
  // covered by the half-open spans [v - s, v + s). Count every integer cell
  // the union meets (indices may leave [0, 2^k)).
  auto [lx, ly] = gradient_bound_components(fam, Box{bb[0], bb[1], bb[2], bb[3]});
  const double slack = (lx + ly) * delta / 2.0;
  std::vector<std::pair<std::int64_t, std::int64_t>> spans;
  spans.reserve(values.size());
  for (double v : values) {
    double ulo = (v - slack - lo) / width * static_cast<double>(ncells);
    double uhi = (v + slack - lo) / width * static_cast<double>(ncells);
    auto first = static_cast<std::int64_t>(std::floor(ulo));
    auto last = static_cast<std::int64_t>(std::ceil(uhi)) - 1;  // [ulo, uhi) is half-open
    if (last < first) last = first;
    spans.emplace_back(first, last);
  }
  std::sort(spans.begin(), spans.end());
  std::uint64_t outer = 0;
  std::int64_t covered_to = std::numeric_limits<std::int64_t>::min();
  for (const auto& [a, b] : spans) {
    std::int64_t from = std::max(a, covered_to + 1);
    if (b >= from) {
      outer += static_cast<std::uint64_t>(b - from + 1);
      covered_to = b;
    }
  }
  est.outer_count = outer;
  return {std::move(img), est};
}

std::pair<DyadicSet1D, ImageEstimate> pinned_distance_set(double px, double py,
                                                          const DyadicSet2D& X, bool squared) {
  return image(PinnedDistanceFamily{px, py, squared}, X);
}

}  // namespace dexlab
