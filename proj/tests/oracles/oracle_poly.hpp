// Test-only symbolic engines, deliberately independent of the library's
// BivariatePoly implementation path: dense-map representation, its own
// arithmetic, differentiation and evaluation. Used to cross-check curvature
// numerators, the four-point auxiliary function, and the closed-form pinned
// curvature density.
#pragma once

#include <array>
#include <map>
#include <stdexcept>

#include "dexlab/bivariate_poly.hpp"

namespace oracle {

using dexlab::Rational;

// ---- two-variable polynomials ----------------------------------------------

struct OPoly {
  std::map<std::pair<int, int>, Rational> t;

  static OPoly constant(const Rational& c) {
    OPoly p;
    if (c != 0) p.t[{0, 0}] = c;
    return p;
  }
  static OPoly x() {
    OPoly p;
    p.t[{1, 0}] = 1;
    return p;
  }
  static OPoly y() {
    OPoly p;
    p.t[{0, 1}] = 1;
    return p;
  }

  bool is_zero() const { return t.empty(); }

  void add_term(int i, int j, const Rational& c) {
    if (c == 0) return;
    auto key = std::make_pair(i, j);
    auto it = t.find(key);
    if (it == t.end()) {
      t[key] = c;
    } else {
      it->second += c;
      if (it->second == 0) t.erase(it);
    }
  }

  friend OPoly operator+(const OPoly& a, const OPoly& b) {
    OPoly r = a;
    for (const auto& [e, c] : b.t) r.add_term(e.first, e.second, c);
    return r;
  }
  friend OPoly operator-(const OPoly& a, const OPoly& b) {
    OPoly r = a;
    for (const auto& [e, c] : b.t) r.add_term(e.first, e.second, -c);
    return r;
  }
  friend OPoly operator*(const OPoly& a, const OPoly& b) {
    OPoly r;
    for (const auto& [ea, ca] : a.t)
      for (const auto& [eb, cb] : b.t)
        r.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
    return r;
  }
  OPoly operator-() const {
    OPoly r;
    for (const auto& [e, c] : t) r.t[e] = -c;
    return r;
  }
  friend bool operator==(const OPoly&, const OPoly&) = default;

  OPoly dx() const {
    OPoly r;
    for (const auto& [e, c] : t)
      if (e.first > 0) r.add_term(e.first - 1, e.second, c * e.first);
    return r;
  }
  OPoly dy() const {
    OPoly r;
    for (const auto& [e, c] : t)
      if (e.second > 0) r.add_term(e.first, e.second - 1, c * e.second);
    return r;
  }

  Rational eval(const Rational& x, const Rational& y) const {
    Rational acc(0);
    for (const auto& [e, c] : t) {
      Rational term = c;
      for (int n = 0; n < e.first; ++n) term *= x;
      for (int n = 0; n < e.second; ++n) term *= y;
      acc += term;
    }
    return acc;
  }
};

inline OPoly from_bivariate(const dexlab::BivariatePoly& p) {
  OPoly r;
  for (const auto& [e, c] : p.terms()) r.add_term(e.i, e.j, c);
  return r;
}

/// Direct transcription of the curvature numerator formula on the oracle
/// engine: Py^2 (Px Pxxy - Pxx Pxy) - Px^2 (Py Pxyy - Pxy Pyy).
inline OPoly curvature_numerator_oracle(const OPoly& p) {
  OPoly px = p.dx(), py = p.dy();
  OPoly pxx = px.dx(), pxy = px.dy(), pyy = py.dy();
  OPoly pxxy = pxx.dy(), pxyy = pxy.dy();
  return py * py * (px * pxxy - pxx * pxy) - px * px * (py * pxyy - pxy * pyy);
}

// ---- rational functions over OPoly ------------------------------------------

struct ORat {
  OPoly num;
  OPoly den = OPoly::constant(1);

  static ORat of(const OPoly& p) { return ORat{p, OPoly::constant(1)}; }

  friend ORat operator+(const ORat& a, const ORat& b) {
    return ORat{a.num * b.den + b.num * a.den, a.den * b.den};
  }
  friend ORat operator-(const ORat& a, const ORat& b) {
    return ORat{a.num * b.den - b.num * a.den, a.den * b.den};
  }
  friend ORat operator*(const ORat& a, const ORat& b) { return ORat{a.num * b.num, a.den * b.den}; }
  friend ORat operator/(const ORat& a, const ORat& b) {
    if (b.num.is_zero()) throw std::invalid_argument("ORat: division by zero function");
    return ORat{a.num * b.den, a.den * b.num};
  }

  ORat dx() const { return ORat{num.dx() * den - num * den.dx(), den * den}; }
  ORat dy() const { return ORat{num.dy() * den - num * den.dy(), den * den}; }

  Rational eval(const Rational& x, const Rational& y) const {
    Rational d = den.eval(x, y);
    if (d == 0) throw std::invalid_argument("ORat: pole at evaluation point");
    return num.eval(x, y) / d;
  }

  /// Equality as rational functions (cross-multiplied polynomial identity).
  bool same_function(const ORat& other) const { return num * other.den == other.num * den; }
};

// ---- four-variable polynomials (x, x', y, y') -------------------------------

struct OPoly4 {
  using Exp = std::array<int, 4>;
  std::map<Exp, Rational> t;

  void add_term(const Exp& e, const Rational& c) {
    if (c == 0) return;
    auto it = t.find(e);
    if (it == t.end()) {
      t[e] = c;
    } else {
      it->second += c;
      if (it->second == 0) t.erase(it);
    }
  }

  friend OPoly4 operator-(const OPoly4& a, const OPoly4& b) {
    OPoly4 r = a;
    for (const auto& [e, c] : b.t) r.add_term(e, -c);
    return r;
  }
  friend OPoly4 operator*(const OPoly4& a, const OPoly4& b) {
    OPoly4 r;
    for (const auto& [ea, ca] : a.t)
      for (const auto& [eb, cb] : b.t) {
        Exp e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]};
        r.add_term(e, ca * cb);
      }
    return r;
  }

  OPoly4 d(int var) const {
    OPoly4 r;
    for (const auto& [e, c] : t)
      if (e[var] > 0) {
        Exp f = e;
        f[var] -= 1;
        r.add_term(f, c * e[var]);
      }
    return r;
  }

  Rational eval(const std::array<Rational, 4>& z) const {
    Rational acc(0);
    for (const auto& [e, c] : t) {
      Rational term = c;
      for (int v = 0; v < 4; ++v)
        for (int n = 0; n < e[v]; ++n) term *= z[v];
      acc += term;
    }
    return acc;
  }
};

/// F(x, x', y, y') = P(x, y) - P(x', y') lifted to the four-variable engine.
/// Variable order: 0 = x, 1 = x', 2 = y, 3 = y'.
inline OPoly4 difference_lift(const dexlab::BivariatePoly& p) {
  OPoly4 f;
  for (const auto& [e, c] : p.terms()) {
    f.add_term({e.i, 0, e.j, 0}, c);
    f.add_term({0, e.i, 0, e.j}, -c);
  }
  return f;
}

/// The general four-point auxiliary function
///   H_F = Fx Fy' Fx'y - Fx Fy Fx'y' - Fx' Fy' Fxy + Fx' Fy Fxy',
/// evaluated exactly; the reduced two-point formula must agree with this on
/// difference lifts.
inline Rational general_hf_oracle(const OPoly4& f, const std::array<Rational, 4>& z) {
  OPoly4 fx = f.d(0), fxp = f.d(1), fy = f.d(2), fyp = f.d(3);
  OPoly4 fxpy = fxp.d(2), fxpyp = fxp.d(3), fxy = fx.d(2), fxyp = fx.d(3);
  return fx.eval(z) * fyp.eval(z) * fxpy.eval(z) - fx.eval(z) * fy.eval(z) * fxpyp.eval(z) -
         fxp.eval(z) * fyp.eval(z) * fxy.eval(z) + fxp.eval(z) * fy.eval(z) * fxyp.eval(z);
}

}  // namespace oracle
