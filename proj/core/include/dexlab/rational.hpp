#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <stdexcept>
#include <string>

namespace dexlab {

using BigInt = boost::multiprecision::cpp_int;

/// Exact arbitrary-precision fraction. cpp_rational keeps the canonical form
/// (positive denominator, gcd(|num|, den) = 1) after every operation.
using Rational = boost::multiprecision::cpp_rational;

inline BigInt rat_num(const Rational& r) { return numerator(r); }
inline BigInt rat_den(const Rational& r) { return denominator(r); }

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// Exact conversion: every finite double is a dyadic rational.
inline Rational rational_from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("rational_from_double: non-finite input");
  if (x == 0.0) return Rational(0);
  int exp = 0;
  double mant = std::frexp(x, &exp);  // x = mant * 2^exp, |mant| in [1/2, 1)
  auto m = static_cast<long long>(std::ldexp(mant, 53));
  exp -= 53;
  Rational r(m);
  if (exp >= 0) {
    r *= Rational(BigInt(1) << exp);
  } else {
    r /= Rational(BigInt(1) << -exp);
  }
  return r;
}

/// num/den with the sign moved to the numerator (the cpp_rational
/// constructor itself rejects negative denominators).
inline Rational make_rational(BigInt num, BigInt den) {
  if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

/// Parses "p", "-p" or "p/q" with integer p, q.
inline Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(BigInt(s));
  return make_rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
}

inline std::string to_string(const Rational& r) {
  std::string out = rat_num(r).str();
  if (rat_den(r) != 1) out += "/" + rat_den(r).str();
  return out;
}

}  // namespace dexlab
