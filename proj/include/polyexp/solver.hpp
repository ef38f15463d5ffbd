#pragma once

#include <vector>

#include "polyexp/polyexp.hpp"

namespace polyexp {

/// A solved inhomogeneous equation: particular solution plus a basis of the
/// homogeneous solution space. Verified exactly on construction by
/// general_solution.
struct GeneralSolution {
    PolyExp particular;
    std::vector<PolyExp> homogeneous;
    OperatorBase base = OperatorBase::Shift;
};

/// Basis of ker q(Op) for a factored operator: the kernel bases of every
/// (Op - root)^mult, concatenated. Requires factors; shift roots must be
/// nonzero.
std::vector<PolyExp> homogeneous_basis(const OperatorSpec& op);

/// Exact particular solution of q(Op) y = rhs by undetermined coefficients:
/// per rhs exponent of degree d with operator multiplicity m, an ansatz of
/// degree d + m whose m lowest coefficients vanish. Factors are required as
/// soon as an rhs exponent is a root of the operator polynomial.
PolyExp particular_solution(const OperatorSpec& op, const PolyExp& rhs);

GeneralSolution general_solution(const OperatorSpec& op, const PolyExp& rhs);

/// Pin the free constants against initial data: y_0..y_{k-1} for sequences,
/// y(0), y'(0), ... for functions. The data count must equal the operator
/// degree.
PolyExp solve_ivp(const OperatorSpec& op, const PolyExp& rhs,
                  const std::vector<GaussianRational>& initial);

/// The substitution oracle: true iff q(Op) candidate equals rhs exactly.
/// Final gate of every solver path.
bool verify_residual(const OperatorSpec& op, const PolyExp& candidate, const PolyExp& rhs);

}  // namespace polyexp
