#include "dexlab/bivariate_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace dexlab {

BivariatePoly BivariatePoly::constant(Rational c) {
  BivariatePoly p;
  p.add_term(0, 0, c);
  return p;
}

BivariatePoly BivariatePoly::monomial(int i, int j, Rational c) {
  BivariatePoly p;
  p.add_term(i, j, c);
  return p;
}

BivariatePoly BivariatePoly::univariate(Var v, const std::vector<Rational>& coeffs) {
  BivariatePoly p;
  for (std::size_t n = 0; n < coeffs.size(); ++n) {
    if (v == Var::X)
      p.add_term(static_cast<int>(n), 0, coeffs[n]);
    else
      p.add_term(0, static_cast<int>(n), coeffs[n]);
  }
  return p;
}

int BivariatePoly::degree() const {
  if (terms_.empty()) return -1;
  // Graded order puts the highest total degree last.
  const Exp& e = terms_.rbegin()->first;
  return e.i + e.j;
}

Rational BivariatePoly::coefficient(int i, int j) const {
  auto it = terms_.find(Exp{i, j});
  return it == terms_.end() ? Rational(0) : it->second;
}

void BivariatePoly::add_term(int i, int j, const Rational& c) {
  if (c == 0) return;
  if (i < 0 || j < 0) throw std::invalid_argument("BivariatePoly: negative exponent");
  Exp e{i, j};
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BivariatePoly BivariatePoly::operator-() const {
  BivariatePoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

BivariatePoly& BivariatePoly::operator+=(const BivariatePoly& q) {
  for (const auto& [e, c] : q.terms_) add_term(e.i, e.j, c);
  return *this;
}

BivariatePoly& BivariatePoly::operator-=(const BivariatePoly& q) {
  for (const auto& [e, c] : q.terms_) add_term(e.i, e.j, -c);
  return *this;
}

BivariatePoly operator+(const BivariatePoly& p, const BivariatePoly& q) {
  BivariatePoly r = p;
  r += q;
  return r;
}

BivariatePoly operator-(const BivariatePoly& p, const BivariatePoly& q) {
  BivariatePoly r = p;
  r -= q;
  return r;
}

BivariatePoly operator*(const BivariatePoly& p, const BivariatePoly& q) {
  BivariatePoly r;
  for (const auto& [ep, cp] : p.terms_)
    for (const auto& [eq, cq] : q.terms_)
      r.add_term(ep.i + eq.i, ep.j + eq.j, cp * cq);
  return r;
}

BivariatePoly& BivariatePoly::operator*=(const BivariatePoly& q) {
  *this = *this * q;
  return *this;
}

BivariatePoly operator*(const Rational& c, const BivariatePoly& p) {
  BivariatePoly r;
  if (c == 0) return r;
  for (const auto& [e, pc] : p.terms_) r.terms_.emplace(e, c * pc);
  return r;
}

BivariatePoly BivariatePoly::partial(Var v) const {
  BivariatePoly r;
  for (const auto& [e, c] : terms_) {
    if (v == Var::X) {
      if (e.i > 0) r.add_term(e.i - 1, e.j, c * e.i);
    } else {
      if (e.j > 0) r.add_term(e.i, e.j - 1, c * e.j);
    }
  }
  return r;
}

BivariatePoly BivariatePoly::substitute(Var v, const BivariatePoly& q) const {
  // Horner in the substituted variable; collect dense coefficients first.
  int deg = 0;
  for (const auto& [e, c] : terms_) {
    if (v == Var::X && e.j != 0) throw std::invalid_argument("substitute: polynomial not univariate in x");
    if (v == Var::Y && e.i != 0) throw std::invalid_argument("substitute: polynomial not univariate in y");
    deg = std::max(deg, v == Var::X ? e.i : e.j);
  }
  std::vector<Rational> coef(static_cast<std::size_t>(deg) + 1, Rational(0));
  for (const auto& [e, c] : terms_) coef[static_cast<std::size_t>(v == Var::X ? e.i : e.j)] = c;
  BivariatePoly acc;
  for (int n = deg; n >= 0; --n) {
    acc = acc * q;
    acc.add_term(0, 0, coef[static_cast<std::size_t>(n)]);
  }
  return acc;
}

Rational BivariatePoly::evaluate(const Rational& x, const Rational& y) const {
  // Horner over x-exponent groups, inner Horner in y.
  Rational acc(0);
  int prev_i = -1;
  // Iterate descending in i: regroup terms by x power.
  std::map<int, std::map<int, Rational>> by_i;
  for (const auto& [e, c] : terms_) by_i[e.i][e.j] = c;
  for (auto it = by_i.rbegin(); it != by_i.rend(); ++it) {
    if (prev_i >= 0) {
      for (int n = 0; n < prev_i - it->first; ++n) acc *= x;
    }
    Rational inner(0);
    int prev_j = -1;
    for (auto jt = it->second.rbegin(); jt != it->second.rend(); ++jt) {
      if (prev_j >= 0) {
        for (int n = 0; n < prev_j - jt->first; ++n) inner *= y;
      }
      inner += jt->second;
      prev_j = jt->first;
    }
    for (int n = 0; n < prev_j; ++n) inner *= y;
    acc += inner;
    prev_i = it->first;
  }
  for (int n = 0; n < prev_i; ++n) acc *= x;
  return acc;
}

double BivariatePoly::evaluate_f64(double x, double y) const {
  return CompiledPoly(*this)(x, y);
}

CompiledPoly::CompiledPoly(const BivariatePoly& p) {
  std::map<int, std::vector<double>> by_i;
  for (const auto& [e, c] : p.terms()) {
    auto& col = by_i[e.i];
    if (col.size() <= static_cast<std::size_t>(e.j)) col.resize(static_cast<std::size_t>(e.j) + 1, 0.0);
    col[static_cast<std::size_t>(e.j)] = to_double(c);
  }
  for (auto it = by_i.rbegin(); it != by_i.rend(); ++it) rows_.push_back(Row{it->first, std::move(it->second)});
}

double CompiledPoly::operator()(double x, double y) const {
  double acc = 0.0;
  int prev_i = -1;
  for (const auto& row : rows_) {
    if (prev_i >= 0) {
      for (int n = 0; n < prev_i - row.i; ++n) acc *= x;
    }
    double inner = 0.0;
    for (auto it = row.ycoef.rbegin(); it != row.ycoef.rend(); ++it) inner = inner * y + *it;
    acc += inner;
    prev_i = row.i;
  }
  for (int n = 0; n < prev_i; ++n) acc *= x;
  return acc;
}

}  // namespace dexlab
