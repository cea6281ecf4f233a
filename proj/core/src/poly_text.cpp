#include "dexlab/poly_text.hpp"

#include <cctype>
#include <stdexcept>

namespace dexlab {

namespace {

void append_var(std::string& out, char name, int e, bool& need_star) {
  if (e == 0) return;
  if (need_star) out += '*';
  out += name;
  if (e != 1) {
    out += '^';
    out += std::to_string(e);
  }
  need_star = true;
}

}  // namespace

std::string poly_to_string(const BivariatePoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& terms = p.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [e, c] = *it;
    bool negative = c < 0;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    Rational mag = negative ? Rational(-c) : c;
    bool need_star = false;
    if (mag != 1 || (e.i == 0 && e.j == 0)) {
      out += to_string(mag);
      need_star = true;
    }
    append_var(out, 'x', e.i, need_star);
    append_var(out, 'y', e.j, need_star);
  }
  return out;
}

namespace {

struct Parser {
  const std::string& s;
  std::size_t pos = 0;

  explicit Parser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("parse_poly: " + what + " at position " + std::to_string(pos));
  }

  BigInt parse_uint() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected integer");
    return BigInt(s.substr(start, pos - start));
  }

  Rational parse_number() {
    BigInt num = parse_uint();
    if (eat('/')) {
      BigInt den = parse_uint();
      if (den == 0) fail("zero denominator");
      return Rational(num, den);
    }
    return Rational(num);
  }

  int parse_exponent() {
    if (!eat('^')) return 1;
    BigInt e = parse_uint();
    if (e > 1'000'000) fail("exponent too large");
    return e.convert_to<int>();
  }

  // factor := number | 'x' ['^' int] | 'y' ['^' int]
  // Accumulates into the running term.
  void parse_factor(Rational& coef, int& ei, int& ej) {
    char c = peek();
    if (c == 'x') {
      ++pos;
      ei += parse_exponent();
    } else if (c == 'y') {
      ++pos;
      ej += parse_exponent();
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      coef *= parse_number();
    } else {
      fail("expected coefficient or variable");
    }
  }

  BivariatePoly parse() {
    BivariatePoly p;
    bool first = true;
    while (true) {
      skip_ws();
      if (pos >= s.size()) {
        if (first) fail("empty input");
        break;
      }
      int sign = 1;
      if (eat('-')) {
        sign = -1;
      } else if (!eat('+') && !first) {
        fail("expected '+' or '-'");
      }
      Rational coef(sign);
      int ei = 0, ej = 0;
      parse_factor(coef, ei, ej);
      while (eat('*')) parse_factor(coef, ei, ej);
      p.add_term(ei, ej, coef);
      first = false;
    }
    return p;
  }
};

}  // namespace

BivariatePoly parse_poly(const std::string& text) {
  Parser parser(text);
  return parser.parse();
}

}  // namespace dexlab
