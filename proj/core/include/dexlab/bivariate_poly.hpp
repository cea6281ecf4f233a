#pragma once

#include <map>
#include <utility>
#include <vector>

#include "dexlab/rational.hpp"

namespace dexlab {

enum class Var { X, Y };

/// Sparse exact polynomial in two variables. Zero coefficients are never
/// stored, so equality is term-map equality and the zero polynomial has an
/// empty term map (degree -1).
class BivariatePoly {
 public:
  // Graded order, then by x-exponent; keeps printing canonical.
  struct Exp {
    int i = 0;  // x exponent
    int j = 0;  // y exponent
    friend auto operator<=>(const Exp& a, const Exp& b) {
      if (a.i + a.j != b.i + b.j) return (a.i + a.j) <=> (b.i + b.j);
      return a.i <=> b.i;
    }
    friend bool operator==(const Exp&, const Exp&) = default;
  };
  using TermMap = std::map<Exp, Rational>;

  BivariatePoly() = default;

  static BivariatePoly zero() { return {}; }
  static BivariatePoly constant(Rational c);
  static BivariatePoly monomial(int i, int j, Rational c);
  static BivariatePoly x() { return monomial(1, 0, 1); }
  static BivariatePoly y() { return monomial(0, 1, 1); }

  /// Builds a polynomial in a single variable from dense coefficients
  /// (coeffs[n] multiplies var^n).
  static BivariatePoly univariate(Var v, const std::vector<Rational>& coeffs);

  bool is_zero() const { return terms_.empty(); }
  int degree() const;  // -1 for the zero polynomial
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  Rational coefficient(int i, int j) const;

  BivariatePoly operator-() const;
  friend BivariatePoly operator+(const BivariatePoly& p, const BivariatePoly& q);
  friend BivariatePoly operator-(const BivariatePoly& p, const BivariatePoly& q);
  friend BivariatePoly operator*(const BivariatePoly& p, const BivariatePoly& q);
  BivariatePoly& operator+=(const BivariatePoly& q);
  BivariatePoly& operator-=(const BivariatePoly& q);
  BivariatePoly& operator*=(const BivariatePoly& q);
  friend BivariatePoly operator*(const Rational& c, const BivariatePoly& p);
  friend bool operator==(const BivariatePoly&, const BivariatePoly&) = default;

  BivariatePoly partial(Var v) const;

  /// Substitutes q for this polynomial's single variable; used to compose
  /// h(a(x)+b(y)) style instances. Requires this to depend on v only.
  BivariatePoly substitute(Var v, const BivariatePoly& q) const;

  Rational evaluate(const Rational& x, const Rational& y) const;
  double evaluate_f64(double x, double y) const;

  void add_term(int i, int j, const Rational& c);

 private:
  TermMap terms_;
};

/// Evaluation plan with pre-converted double coefficients, for grid sweeps.
class CompiledPoly {
 public:
  explicit CompiledPoly(const BivariatePoly& p);
  double operator()(double x, double y) const;

 private:
  // One entry per x-exponent, holding dense y-coefficients; both levels are
  // evaluated Horner-style.
  struct Row {
    int i;
    std::vector<double> ycoef;  // ycoef[j] multiplies y^j
  };
  std::vector<Row> rows_;  // descending in i
};

}  // namespace dexlab
