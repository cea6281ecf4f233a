#include "dexlab/whitney.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace dexlab {

namespace {

BoxD dilate3_clipped(const BoxD& b) {
  BoxD out = b;
  for (int d = 0; d < b.dim; ++d) {
    double side = b.hi[d] - b.lo[d];
    out.lo[d] = std::max(0.0, b.lo[d] - side);
    out.hi[d] = std::min(1.0, b.hi[d] + side);
  }
  return out;
}

struct Walker {
  const BoxPredicate& omega;
  int dim;
  int max_depth;
  WhitneyResult result;

  void visit(const WhitneyCube& cube) {
    BoxD box = cube_box(cube, dim);
    BoxStatus st = omega(box);
    std::uint64_t units = std::uint64_t{1}
                          << (static_cast<unsigned>(dim) *
                              static_cast<unsigned>(max_depth - cube.depth));
    if (st == BoxStatus::Outside) {
      result.exterior_units += units;
      return;
    }
    if (st == BoxStatus::Inside && omega(dilate3_clipped(box)) == BoxStatus::Inside) {
      result.cubes.push_back(cube);
      result.interior_units += units;
      return;
    }
    if (cube.depth == max_depth) {
      // Straddles (or sits too close to) the boundary at the finest scale.
      result.unresolved_units += units;
      return;
    }
    for (std::uint32_t child = 0; child < (std::uint32_t{1} << dim); ++child) {
      WhitneyCube c;
      c.depth = cube.depth + 1;
      for (int d = 0; d < dim; ++d)
        c.index[static_cast<std::size_t>(d)] =
            cube.index[static_cast<std::size_t>(d)] * 2 + ((child >> d) & 1u);
      visit(c);
    }
  }
};

}  // namespace

BoxD cube_box(const WhitneyCube& cube, int dim) {
  BoxD b;
  b.dim = dim;
  double side = std::ldexp(1.0, -cube.depth);
  for (int d = 0; d < dim; ++d) {
    b.lo[static_cast<std::size_t>(d)] = cube.index[static_cast<std::size_t>(d)] * side;
    b.hi[static_cast<std::size_t>(d)] = b.lo[static_cast<std::size_t>(d)] + side;
  }
  return b;
}

WhitneyResult whitney_decompose(const BoxPredicate& omega, int dim, int max_depth) {
  if (dim < 1 || dim > 3) throw std::invalid_argument("whitney: dim must be 1, 2 or 3");
  if (max_depth < 1 || max_depth * dim > 24)
    throw std::invalid_argument("whitney: need 1 <= max_depth <= 24/dim");
  Walker w{omega, dim, max_depth, {}};
  w.result.dim = dim;
  w.result.max_depth = max_depth;
  w.result.unit_volume = std::ldexp(1.0, -dim * max_depth);
  w.visit(WhitneyCube{});
  // visit() emits in depth-first order, which is already (depth, index)-stable
  // per subtree; normalize to a global (depth, index) order for determinism.
  std::sort(w.result.cubes.begin(), w.result.cubes.end(), [](const WhitneyCube& a, const WhitneyCube& b) {
    if (a.depth != b.depth) return a.depth < b.depth;
    return a.index < b.index;
  });
  return w.result;
}

BoxPredicate omega_open_unit_cube(int dim) {
  return [dim](const BoxD& b) {
    bool inside = true;
    for (int d = 0; d < dim; ++d) {
      if (b.lo[d] <= 0.0 || b.hi[d] >= 1.0) inside = false;
    }
    // The complement inside the root cube is the boundary frame, so no box
    // with positive volume is Outside.
    return inside ? BoxStatus::Inside : BoxStatus::Unknown;
  };
}

BoxPredicate omega_poly_complement(BivariatePoly P) {
  return [poly = std::move(P)](const BoxD& b) {
    // Termwise interval enclosure of P over the box; exact for boxes in
    // [0,1]^2 since every monomial is monotone there.
    double lo = 0.0, hi = 0.0;
    for (const auto& [e, c] : poly.terms()) {
      double mn = std::pow(b.lo[0], e.i) * std::pow(b.lo[1], e.j);
      double mx = std::pow(b.hi[0], e.i) * std::pow(b.hi[1], e.j);
      double cd = to_double(c);
      lo += std::min(cd * mn, cd * mx);
      hi += std::max(cd * mn, cd * mx);
    }
    if (lo > 0.0 || hi < 0.0) return BoxStatus::Inside;  // box misses Z(P)
    return BoxStatus::Unknown;
  };
}

BoxPredicate omega_offdiagonal() {
  return [](const BoxD& b) {
    // x - y over the box: exact interval [lo0 - hi1, hi0 - lo1].
    double lo = b.lo[0] - b.hi[1];
    double hi = b.hi[0] - b.lo[1];
    if (lo > 0.0 || hi < 0.0) return BoxStatus::Inside;
    return BoxStatus::Unknown;
  };
}

BoxPredicate omega_deleted_corner(double cx, double cy) {
  return [cx, cy](const BoxD& b) {
    bool contains = b.lo[0] <= cx && cx <= b.hi[0] && b.lo[1] <= cy && cy <= b.hi[1];
    return contains ? BoxStatus::Unknown : BoxStatus::Inside;
  };
}

std::string whitney_to_string(const WhitneyResult& r) {
  std::ostringstream os;
  for (const WhitneyCube& c : r.cubes) {
    os << c.depth;
    for (int d = 0; d < r.dim; ++d) os << " " << c.index[static_cast<std::size_t>(d)];
    os << "\n";
  }
  return os.str();
}

}  // namespace dexlab
