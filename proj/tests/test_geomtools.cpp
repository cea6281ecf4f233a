#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "dexlab/dyadic_gen.hpp"
#include "dexlab/poly_text.hpp"
#include "dexlab/remez.hpp"
#include "dexlab/rng.hpp"
#include "dexlab/triples.hpp"
#include "dexlab/whitney.hpp"

using namespace dexlab;

namespace {

// Exact distance from a cube to the complement witness of each test region.
double dist_to_frame(const BoxD& b) {
  double d = std::min({b.lo[0], b.lo[1], 1.0 - b.hi[0], 1.0 - b.hi[1]});
  return std::max(d, 0.0);
}

double dist_to_diagonal(const BoxD& b) {
  // max over the box of 0, min |x - y| / sqrt 2
  if (b.lo[0] <= b.hi[1] && b.lo[1] <= b.hi[0]) return 0.0;  // box meets {x = y}
  double gap = b.lo[0] > b.hi[1] ? b.lo[0] - b.hi[1] : b.lo[1] - b.hi[0];
  return gap / std::sqrt(2.0);
}

void check_whitney_invariants(const WhitneyResult& r, double (*dist)(const BoxD&)) {
  // Disjoint interiors: exact integer containment check against every
  // coarser cube.
  std::map<int, std::set<std::pair<std::uint32_t, std::uint32_t>>> by_depth;
  for (const WhitneyCube& c : r.cubes) {
    auto [it, fresh] = by_depth[c.depth].insert({c.index[0], c.index[1]});
    EXPECT_TRUE(fresh);
  }
  for (const WhitneyCube& c : r.cubes) {
    for (int d = c.depth - 1; d >= 0; --d) {
      auto anc = std::make_pair(c.index[0] >> (c.depth - d), c.index[1] >> (c.depth - d));
      auto it = by_depth.find(d);
      if (it != by_depth.end()) EXPECT_EQ(it->second.count(anc), 0u);
    }
  }
  // Distance sandwich side <= dist <= 4 sqrt(2) side.
  for (const WhitneyCube& c : r.cubes) {
    BoxD b = cube_box(c, 2);
    double side = std::ldexp(1.0, -c.depth);
    double d = dist(b);
    EXPECT_GE(d, side - 1e-15) << "cube too close to the complement";
    EXPECT_LE(d, 4.0 * std::sqrt(2.0) * side + 1e-15) << "cube too deep inside";
  }
  // Exact volume ledger.
  std::uint64_t total = std::uint64_t{1} << (2 * r.max_depth);
  EXPECT_EQ(r.interior_units + r.exterior_units + r.unresolved_units, total);
}

}  // namespace

TEST(Whitney, OpenSquareInvariantsAndGrowth) {
  WhitneyResult r = whitney_decompose(omega_open_unit_cube(2), 2, 10);
  check_whitney_invariants(r, dist_to_frame);
  EXPECT_EQ(r.exterior_units, 0u);
  // Unresolved volume is a thin frame at the finest scale.
  EXPECT_LE(r.unit_volume * static_cast<double>(r.unresolved_units), std::ldexp(8.0, -10));

  std::map<int, int> per_depth;
  for (const WhitneyCube& c : r.cubes) ++per_depth[c.depth];
  // Ring structure: counts grow geometrically (~2x per depth) past the first
  // few levels.
  for (int m = 5; m < 9; ++m) {
    ASSERT_GT(per_depth[m], 0);
    double ratio = static_cast<double>(per_depth[m + 1]) / per_depth[m];
    EXPECT_GE(ratio, 1.5);
    EXPECT_LE(ratio, 2.5);
  }
  EXPECT_GE(per_depth[8], 4 * (1 << 8) / 4);
}

TEST(Whitney, OffDiagonalTilesBothTriangles) {
  WhitneyResult r = whitney_decompose(omega_offdiagonal(), 2, 10);
  check_whitney_invariants(r, dist_to_diagonal);
  EXPECT_EQ(r.exterior_units, 0u);
  double covered = r.unit_volume * static_cast<double>(r.interior_units);
  double unresolved = r.unit_volume * static_cast<double>(r.unresolved_units);
  EXPECT_GT(covered, 0.99);
  EXPECT_LE(unresolved, std::ldexp(2.0, -10) * 4.0);  // ~ C * 2^(1 - max_depth)
  // Cubes on both sides of the diagonal.
  bool above = false, below = false;
  for (const WhitneyCube& c : r.cubes) {
    BoxD b = cube_box(c, 2);
    if (b.lo[1] >= b.hi[0]) above = true;
    if (b.lo[0] >= b.hi[1]) below = true;
  }
  EXPECT_TRUE(above);
  EXPECT_TRUE(below);
}

TEST(Whitney, DeletedCornerRefinesOnlyAtTheCorner) {
  WhitneyResult r = whitney_decompose(omega_deleted_corner(0.0, 0.0), 2, 8);
  std::map<int, int> per_depth;
  for (const WhitneyCube& c : r.cubes) ++per_depth[c.depth];
  // The split cascades only in the corner block: a fixed ring of cubes per
  // level (regression value 12) and nothing at depth 1 (their triple dilates
  // still reach the corner).
  EXPECT_EQ(per_depth[1], 0);
  for (int d = 2; d <= 8; ++d) EXPECT_EQ(per_depth[d], 12) << "depth " << d;
  std::uint64_t total = std::uint64_t{1} << (2 * r.max_depth);
  EXPECT_EQ(r.interior_units + r.unresolved_units, total);
  EXPECT_EQ(r.unresolved_units, 4u);  // the finest 2x2 block around the corner
  // Every accepted cube keeps its distance-to-corner above its side.
  for (const WhitneyCube& c : r.cubes) {
    BoxD b = cube_box(c, 2);
    double side = std::ldexp(1.0, -c.depth);
    double d = std::hypot(std::max(b.lo[0], 0.0), std::max(b.lo[1], 0.0));
    EXPECT_GE(d, side - 1e-15);
  }
}

TEST(Whitney, PolynomialPredicateMatchesClosedForm) {
  // [0,1]^2 minus Z(x - y), through the generic interval predicate.
  WhitneyResult a = whitney_decompose(omega_poly_complement(parse_poly("x - y")), 2, 8);
  WhitneyResult b = whitney_decompose(omega_offdiagonal(), 2, 8);
  ASSERT_EQ(a.cubes.size(), b.cubes.size());
  EXPECT_EQ(a.interior_units, b.interior_units);
  EXPECT_EQ(a.unresolved_units, b.unresolved_units);
}

TEST(Whitney, RejectsBadArguments) {
  EXPECT_THROW(whitney_decompose(omega_open_unit_cube(2), 4, 5), std::invalid_argument);
  EXPECT_THROW(whitney_decompose(omega_open_unit_cube(2), 2, 13), std::invalid_argument);
  EXPECT_THROW(whitney_decompose(omega_open_unit_cube(3), 3, 9), std::invalid_argument);
}

TEST(Whitney, OneAndThreeDimensions) {
  WhitneyResult r1 = whitney_decompose(omega_open_unit_cube(1), 1, 12);
  std::uint64_t total1 = std::uint64_t{1} << 12;
  EXPECT_EQ(r1.interior_units + r1.exterior_units + r1.unresolved_units, total1);
  EXPECT_GT(r1.cubes.size(), 10u);

  WhitneyResult r3 = whitney_decompose(omega_open_unit_cube(3), 3, 6);
  std::uint64_t total3 = std::uint64_t{1} << 18;
  EXPECT_EQ(r3.interior_units + r3.exterior_units + r3.unresolved_units, total3);
}

TEST(Whitney, TextFormat) {
  WhitneyResult r = whitney_decompose(omega_open_unit_cube(2), 2, 4);
  std::string text = whitney_to_string(r);
  ASSERT_FALSE(text.empty());
  EXPECT_NE(text.find('\n'), std::string::npos);
  // lines are "depth i j"
  std::istringstream is(text);
  int depth, i, j;
  ASSERT_TRUE(is >> depth >> i >> j);
  EXPECT_GE(depth, 1);
}

TEST(Remez, LinearSublevel) {
  RemezCheck rc = remez_check_1d(parse_poly("x"), 0.0, 1.0, 0.25, 4096);
  EXPECT_NEAR(rc.measured_fraction, 0.25, 0.01);
  EXPECT_LE(rc.measured_fraction, rc.bound_with_slack);
  EXPECT_TRUE(rc.passed);
}

TEST(Remez, QuadraticSublevel) {
  // |x^2| <= lambda on [-1,1]: sublevel measure 2 sqrt(lambda) out of
  // |Omega| = 2, so the fraction is sqrt(lambda); the fraction-form bound is
  // 4 d lambda^(1/D).
  RemezCheck rc = remez_check_1d(parse_poly("x^2"), -1.0, 1.0, 0.09, 4096);
  EXPECT_NEAR(rc.measured_fraction, 0.3, 0.01);
  EXPECT_NEAR(rc.bound, 4.0 * std::pow(0.09, 0.5), 1e-12);
  EXPECT_TRUE(rc.passed);
}

TEST(Remez, CurvatureNumeratorWitness) {
  RemezCheck rc = remez_check(parse_poly("6*x^2 - 6*y^2"), Box{0, 1, 0, 1}, 0.01, 512);
  EXPECT_NEAR(rc.bound, 8.0 * std::pow(0.01, 0.5), 1e-12);
  EXPECT_TRUE(rc.passed);
  EXPECT_GT(rc.measured_fraction, 0.0);
}

TEST(Remez, RandomDegreeFourBattery) {
  Rng rng(109);
  int passed = 0;
  for (int n = 0; n < 100; ++n) {
    BivariatePoly p;
    for (int t = 0; t < 5; ++t) {
      int i = static_cast<int>(rng.next_below(5));
      int j = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(5 - i)));
      p.add_term(i, j, Rational(rng.next_int(-8, 8)));
    }
    if (p.is_zero()) p = parse_poly("x");
    double lambda = 0.02 + 0.3 * rng.next_unit();
    RemezCheck rc = remez_check(p, Box{0, 1, 0, 1}, lambda, 256);
    if (rc.passed) ++passed;
  }
  EXPECT_EQ(passed, 100);
}

TEST(TriangleArea, ClosedForms) {
  EXPECT_DOUBLE_EQ(triangle_area({0, 0}, {1, 0}, {0, 1}), 0.5);
  EXPECT_DOUBLE_EQ(triangle_area({0, 0}, {1, 1}, {2, 2}), 0.0);
  EXPECT_DOUBLE_EQ(triangle_area({0, 0}, {2, 0}, {1, 3}), 3.0);
}

TEST(TriangleArea, RigidMotionAndPermutationInvariance) {
  Rng rng(113);
  for (int n = 0; n < 30; ++n) {
    Point2 p1{rng.next_unit(), rng.next_unit()};
    Point2 p2{rng.next_unit(), rng.next_unit()};
    Point2 p3{rng.next_unit(), rng.next_unit()};
    double a = triangle_area(p1, p2, p3);
    EXPECT_NEAR(triangle_area(p2, p3, p1), a, 1e-12);
    EXPECT_NEAR(triangle_area(p3, p1, p2), a, 1e-12);
    double th = 2.0 * M_PI * rng.next_unit();
    double tx = rng.next_unit(), ty = rng.next_unit();
    auto rot = [&](const Point2& p) {
      return Point2{std::cos(th) * p.x - std::sin(th) * p.y + tx,
                    std::sin(th) * p.x + std::cos(th) * p.y + ty};
    };
    EXPECT_NEAR(triangle_area(rot(p1), rot(p2), rot(p3)), a, 1e-12);
  }
}

TEST(TripleStats, LineSegmentIsFlat) {
  std::vector<Point2> pts;
  for (int n = 0; n < 400; ++n) {
    double t = n / 399.0;
    pts.push_back(Point2{0.1 + 0.8 * t, 0.2 + 0.5 * t});
  }
  TripleAreaStats st = triple_area_stats(pts, 20000, 5);
  EXPECT_TRUE(st.flat_flagged);
  EXPECT_NEAR(st.fitted_beta, 0.0, 0.05);
}

TEST(TripleStats, CircleAndGridAreCurved) {
  std::vector<Point2> circle;
  for (int n = 0; n < 256; ++n) {
    double th = 2.0 * M_PI * n / 256.0;
    circle.push_back(Point2{0.5 + 0.45 * std::cos(th), 0.5 + 0.45 * std::sin(th)});
  }
  TripleAreaStats sc = triple_area_stats(circle, 100000, 7);
  EXPECT_FALSE(sc.flat_flagged);
  EXPECT_GT(sc.fitted_beta, 0.5);

  DyadicSet1D a = gen_ap(10, 32);
  TripleAreaStats sg = triple_area_stats(product(a, a), 100000, 7);
  EXPECT_GT(sg.fitted_beta, 0.5);
}

TEST(TripleStats, DeterministicForFixedSeed) {
  DyadicSet1D a = gen_ap(8, 16);
  DyadicSet2D k = product(a, a);
  TripleAreaStats s1 = triple_area_stats(k, 5000, 42);
  TripleAreaStats s2 = triple_area_stats(k, 5000, 42);
  EXPECT_EQ(s1.empirical_fraction, s2.empirical_fraction);
  EXPECT_EQ(s1.fitted_beta, s2.fitted_beta);
  EXPECT_EQ(triple_stats_csv(s1), triple_stats_csv(s2));
  EXPECT_THROW(triple_area_stats(std::vector<Point2>{{0, 0}, {1, 1}}, 100, 1),
               std::invalid_argument);
}
