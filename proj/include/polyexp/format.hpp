#pragma once

#include <string>

#include "polyexp/polyexp.hpp"
#include "polyexp/solver.hpp"

namespace polyexp {

/// Canonical scalar text: "a/b", "i", "-i", "c*i", "a/b+c/d*i", ...
/// Deterministic, and exactly what the parser reads back.
std::string format_scalar(const GaussianRational& z);

std::string format_poly(const Poly& p, std::string_view var);

/// Canonical text of a polynomial-exponential expression:
/// sequence mode "(p(n))*lambda^n + ...", function mode
/// "p(t)*exp(lambda*t) + ...". format then parse is the identity.
std::string format_polyexp(const PolyExp& f, OperatorBase base);

/// Display form with positional free constants c1, c2, ...
std::string format_general_solution(const GeneralSolution& gs);

}  // namespace polyexp
