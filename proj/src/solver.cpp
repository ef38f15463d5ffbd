#include "polyexp/solver.hpp"

#include "polyexp/matrix.hpp"

namespace polyexp {

std::vector<PolyExp> homogeneous_basis(const OperatorSpec& op) {
    if (!op.factors())
        throw Error("homogeneous basis requires the operator in factored form (roots=...)");
    if (op.base() == OperatorBase::Shift)
        for (const OperatorFactor& f : *op.factors())
            if (f.root.is_zero())
                throw Error("shift operator with root zero has no polynomial-exponential kernel basis");
    std::vector<PolyExp> out;
    for (const OperatorFactor& f : *op.factors()) {
        std::vector<PolyExp> part = kernel_basis(f.root, f.multiplicity, op.base());
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

namespace {

// Multiplicity of lambda as a root of the operator polynomial. Factors are
// mandatory in the resonant case; a plain expanded operator is accepted only
// when exact evaluation shows lambda is not a root.
int operator_multiplicity(const OperatorSpec& op, const GaussianRational& lambda) {
    if (op.factors()) {
        for (const OperatorFactor& f : *op.factors())
            if (f.root == lambda)
                return f.multiplicity;
        return 0;
    }
    if (op.expanded().eval(lambda).is_zero())
        throw Error("rhs exponent is a root of the operator; supply the factored form (roots=...)");
    return 0;
}

// Solve q(Op) y_component = lambda-term of degree d, with multiplicity m of
// lambda in q. Unknowns are the coefficients of degrees m..m+d; the linear
// system is assembled by pushing monomial atoms through the operator.
Poly component_ansatz(const OperatorSpec& op, const GaussianRational& lambda, const Poly& target,
                      int m) {
    int d = target.degree();
    int unknowns = d + 1;
    Matrix system(d + 1, unknowns);
    for (int u = 0; u < unknowns; ++u) {
        PolyExp image = apply_operator(op, PolyExp::term(lambda, Poly::monomial(GaussianRational(1), m + u)));
        const Poly* q = image.coeff_for(lambda);
        if (image.terms().size() > (q ? 1u : 0u))
            throw Error("operator image of an atom left its exponent line");
        if (q) {
            if (q->degree() > d)
                throw Error("ansatz image degree exceeds target degree");
            for (int row = 0; row <= q->degree(); ++row)
                system.at(row, u) = q->coeff(row);
        }
    }
    Column b(d + 1);
    for (int row = 0; row <= d; ++row)
        b[row] = target.coeff(row);
    auto sol = solve(system, b);
    if (!sol)
        throw Error("undetermined-coefficient system is unsolvable");
    std::vector<GaussianRational> coeffs(m + d + 1);
    for (int u = 0; u < unknowns; ++u)
        coeffs[m + u] = (*sol)[u];
    return Poly(std::move(coeffs));
}

}  // namespace

PolyExp particular_solution(const OperatorSpec& op, const PolyExp& rhs) {
    PolyExp y;
    for (const auto& [lambda, p] : rhs.terms()) {
        if (op.base() == OperatorBase::Shift && lambda.is_zero())
            throw Error("sequence right-hand sides require nonzero exponents");
        int m = operator_multiplicity(op, lambda);
        y += PolyExp::term(lambda, component_ansatz(op, lambda, p, m));
    }
    if (!verify_residual(op, y, rhs))
        throw Error("particular solution failed the residual gate");
    return y;
}

GeneralSolution general_solution(const OperatorSpec& op, const PolyExp& rhs) {
    GeneralSolution gs{particular_solution(op, rhs), homogeneous_basis(op), op.base()};
    for (const PolyExp& h : gs.homogeneous)
        if (!apply_operator(op, h).is_zero())
            throw Error("homogeneous basis element is not annihilated");
    if (static_cast<int>(gs.homogeneous.size()) != op.degree())
        throw Error("homogeneous basis size does not match the operator degree");
    return gs;
}

namespace {

// y(0), y'(0), y''(0), ... exactly: differentiate symbolically, then read
// the value at zero as the sum of constant terms.
GaussianRational value_at_zero(const PolyExp& f) {
    GaussianRational acc;
    for (const auto& [lambda, p] : f.terms())
        acc += p.constant_term();
    return acc;
}

}  // namespace

PolyExp solve_ivp(const OperatorSpec& op, const PolyExp& rhs,
                  const std::vector<GaussianRational>& initial) {
    int k = op.degree();
    if (static_cast<int>(initial.size()) != k)
        throw Error("initial data count must equal the operator degree");
    GeneralSolution gs = general_solution(op, rhs);

    Matrix system(k, k);
    Column b(k);
    if (op.base() == OperatorBase::Shift) {
        for (int row = 0; row < k; ++row) {
            for (int col = 0; col < k; ++col)
                system.at(row, col) = eval_exact_sequence(gs.homogeneous[col], row);
            b[row] = initial[row] - eval_exact_sequence(gs.particular, row);
        }
    } else {
        std::vector<PolyExp> hom = gs.homogeneous;
        PolyExp part = gs.particular;
        for (int row = 0; row < k; ++row) {
            for (int col = 0; col < k; ++col)
                system.at(row, col) = value_at_zero(hom[col]);
            b[row] = initial[row] - value_at_zero(part);
            for (PolyExp& h : hom)
                h = apply_derivative(h);
            part = apply_derivative(part);
        }
    }

    auto constants = solve(system, b);
    if (!constants)
        throw Error("initial-value system is singular");
    PolyExp y = gs.particular;
    for (int col = 0; col < k; ++col)
        y += (*constants)[col] * gs.homogeneous[col];

    if (!verify_residual(op, y, rhs))
        throw Error("initial-value solution failed the residual gate");
    if (op.base() == OperatorBase::Shift) {
        for (int row = 0; row < k; ++row)
            if (eval_exact_sequence(y, row) != initial[row])
                throw Error("initial-value solution misses its initial data");
    } else {
        PolyExp cur = y;
        for (int row = 0; row < k; ++row) {
            if (value_at_zero(cur) != initial[row])
                throw Error("initial-value solution misses its initial data");
            cur = apply_derivative(cur);
        }
    }
    return y;
}

bool verify_residual(const OperatorSpec& op, const PolyExp& candidate, const PolyExp& rhs) {
    return apply_operator(op, candidate) == rhs;
}

}  // namespace polyexp
