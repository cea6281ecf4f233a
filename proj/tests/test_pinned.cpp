#include <gtest/gtest.h>

#include <cmath>

#include "dexlab/pinned_web.hpp"
#include "dexlab/rng.hpp"
#include "oracles/oracle_poly.hpp"

using namespace dexlab;

namespace {

// Symbolic derivation of the curvature density for the squared-distance web,
// entirely on the oracle engine: build phi_i, form the dual-basis derivative
// operators as rational functions, and compute
//   D = (d/dphi1)(d/dphi2) log(slope1/slope2),    density = D * J,
// where J = grad phi1 ^ grad phi2. The closed-form transcription must satisfy
// density == b*f/g^2 as rational functions.
struct PinnedOracle {
  oracle::ORat density;

  PinnedOracle(const Rational& t, const Rational& a, const Rational& b) {
    using oracle::OPoly;
    using oracle::ORat;
    OPoly x = OPoly::x(), y = OPoly::y();
    OPoly one = OPoly::constant(1);
    auto sq = [](const OPoly& p) { return p * p; };

    OPoly phi1 = sq(x - OPoly::constant(t)) + sq(y);
    OPoly phi2 = sq(x + OPoly::constant(t)) + sq(y);
    OPoly phi3 = sq(x - OPoly::constant(a)) + sq(y - OPoly::constant(b));

    OPoly jac = phi1.dx() * phi2.dy() - phi1.dy() * phi2.dx();
    ORat rjac = ORat::of(jac);
    // Dual basis: w1 = (phi2_y, -phi2_x)/J, w2 = (-phi1_y, phi1_x)/J.
    ORat w1x = ORat::of(phi2.dy()) / rjac, w1y = ORat{-phi2.dx(), one} / rjac;
    ORat w2x = ORat{-phi1.dy(), one} / rjac, w2y = ORat::of(phi1.dx()) / rjac;

    ORat slope1 = ORat::of(phi3.dx()) * w1x + ORat::of(phi3.dy()) * w1y;
    ORat slope2 = ORat::of(phi3.dx()) * w2x + ORat::of(phi3.dy()) * w2y;

    // d/dphi2 log(slope1/slope2) = w2 . (grad slope1/slope1 - grad slope2/slope2)
    ORat dlog = w2x * (slope1.dx() / slope1 - slope2.dx() / slope2) +
                w2y * (slope1.dy() / slope1 - slope2.dy() / slope2);
    // d/dphi1 of that, then back to the dx^dy density.
    ORat d = w1x * dlog.dx() + w1y * dlog.dy();
    density = d * rjac;
  }
};

}  // namespace

TEST(PinnedWeb, ClosedFormMatchesSymbolicDerivation) {
  // The exact derivation gives density = -(b f / g^2): the closed form is
  // transcribed with the opposite orientation from the curvature-form
  // coefficient (see the normalization note in pinned_web.hpp).
  struct Case {
    Rational t, a, b;
  };
  for (const Case& c : {Case{Rational(1, 2), Rational(0), Rational(1)},
                        Case{Rational(3, 4), Rational(1, 3), Rational(2, 5)}}) {
    PinnedOracle oracle_web(c.t, c.a, c.b);
    oracle::ORat closed{
        oracle::from_bivariate(Rational(-c.b) * pinned_curvature_f(c.t, c.a, c.b)),
        oracle::from_bivariate(pinned_curvature_g(c.t, c.a, c.b) *
                               pinned_curvature_g(c.t, c.a, c.b))};
    EXPECT_TRUE(oracle_web.density.same_function(closed))
        << "closed form disagrees with the symbolic derivation";
  }
}

TEST(PinnedWeb, QuinticLeadingCoefficient) {
  Rng rng(61);
  for (int n = 0; n < 10; ++n) {
    Rational t(1 + rng.next_int(0, 6), 4);
    Rational a(rng.next_int(-4, 4), 3);
    Rational b(rng.next_int(-6, 6), 5);
    BivariatePoly f = pinned_curvature_f(t, a, b);
    EXPECT_EQ(f.coefficient(5, 0), -b * b);
    EXPECT_LE(f.degree(), 5);
  }
}

TEST(PinnedWeb, CollinearPinsGiveZeroCurvature) {
  PinnedWeb web{0.5, 0.25, 0.0};  // b = 0: pins on one line
  Rng rng(67);
  int checked = 0;
  while (checked < 100) {
    double x = 0.05 + 0.9 * static_cast<double>(rng.next_below(1000)) / 1000.0;
    double y = 0.05 + 0.9 * static_cast<double>(rng.next_below(1000)) / 1000.0;
    auto v = pinned_curvature(web, x, y);
    if (!v.has_value()) continue;
    ++checked;
    EXPECT_EQ(*v, 0.0);  // exactly zero: the density carries the factor b
  }
}

TEST(PinnedWeb, PoleOnPinLines) {
  PinnedWeb web{0.5, 0.0, 1.0};
  EXPECT_FALSE(pinned_curvature(web, 0.3, 0.0).has_value());  // x-axis: g = 0
  // Point on the line joining (t,0) and (a,b) = (0,1): x + t*y = t.
  EXPECT_FALSE(pinned_curvature(web, 0.25, 0.5).has_value());
  EXPECT_THROW(pinned_curvature(PinnedWeb{-1.0, 0.0, 1.0}, 0.2, 0.2), std::invalid_argument);
}

TEST(PinnedWeb, FdCrossCheck) {
  // fd returns the full curvature-form coefficient (leading 2 included);
  // the documented normalization against the closed form is fd == -2 b f/g^2.
  PinnedWeb web{0.5, 0.0, 1.0};
  auto phis = pinned_web_functions(web);
  int checked = 0;
  for (double x : {0.15, 0.35, 0.6, 0.85}) {
    for (double y : {0.2, 0.45, 0.7, 0.9, 0.3}) {
      auto closed = pinned_curvature(web, x, y);
      if (!closed || std::fabs(*closed) < 1e-3) continue;
      auto fd = fd_blaschke_curvature(phis[0], phis[1], phis[2], x, y, 1e-4);
      ASSERT_TRUE(fd.has_value());
      EXPECT_NEAR(*fd / (-2.0 * *closed), 1.0, 1e-4) << "at (" << x << "," << y << ")";
      ++checked;
    }
  }
  EXPECT_GE(checked, 15);
}
