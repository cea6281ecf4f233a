#pragma once

#include <string>

#include "dexlab/bivariate_poly.hpp"

namespace dexlab {

/// Canonical text form: terms "c*x^i*y^j" in descending graded order, joined
/// by "+" / "-"; rational coefficients printed as "p/q". parse(print(p)) == p.
std::string poly_to_string(const BivariatePoly& p);

/// Accepts the printed grammar (whitespace-insensitive), e.g.
/// "x^2 + x*y + y^2", "-3/2*x*y^3 + 1/2", "0".
BivariatePoly parse_poly(const std::string& text);

}  // namespace dexlab
