#pragma once

#include <string_view>
#include <vector>

#include "polyexp/polyexp.hpp"

namespace polyexp {

/// Parse a polynomial-exponential expression in the given mode. Sequence
/// mode reads "(n^2+1)*2^n + 3^n", function mode "t*exp(2*t) - exp(2*t)".
/// Throws ParseError with a byte offset on malformed input, including uses
/// of the wrong mode's syntax.
PolyExp parse_expression(std::string_view src, OperatorBase base);

struct ParsedEquation {
    OperatorSpec op;
    PolyExp rhs;
};

/// Parse "a_k*y[n+k] + ... + a_0*y[n] = rhs" (shift) or an ODE written with
/// y, y', y'', y^(k) (derivative). Unknown terms may appear on either side;
/// they are collected on the left.
ParsedEquation parse_equation(std::string_view src, OperatorBase base);

/// A constant scalar expression: "2", "-1/2", "1+i", "(3-2*i)", ...
GaussianRational parse_scalar(std::string_view src);

/// Comma-separated scalars, e.g. "1,2,-1/2".
std::vector<GaussianRational> parse_scalar_list(std::string_view src);

/// Factored-operator sidecar: "2^1,3^1" or "(1+i)^2,-2". A bare root means
/// multiplicity 1.
std::vector<OperatorFactor> parse_roots(std::string_view src);

}  // namespace polyexp
