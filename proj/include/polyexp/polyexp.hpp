#pragma once

#include <complex>
#include <iosfwd>
#include <optional>
#include <vector>

#include "polyexp/poly.hpp"

namespace polyexp {

/// The two operator families the library works with: the shift operator on
/// sequences (variable n) and the derivative operator on functions
/// (variable t). Every linear operator handled here is a polynomial in one
/// of these.
enum class OperatorBase { Shift, Derivative };

const char* base_variable(OperatorBase base);  // "n" or "t"
const char* base_name(OperatorBase base);      // "shift" or "derivative"

/// Canonical finite sum of terms lambda -> p_lambda, representing either
/// the sequence sum lambda^n * p(n) or the function sum e^(lambda t) * p(t).
/// Terms are kept sorted by the scalar canonical order with nonzero
/// polynomials only, so equal values have equal representations.
class PolyExp {
  public:
    using Term = std::pair<GaussianRational, Poly>;

    PolyExp() = default;  // zero

    /// Canonicalize: merge equal-lambda terms, drop zero polynomials, sort.
    static PolyExp from_terms(std::vector<Term> raw);
    static PolyExp term(GaussianRational lambda, Poly p);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Polynomial attached to lambda, or nullptr when absent.
    const Poly* coeff_for(const GaussianRational& lambda) const;

    friend PolyExp operator+(const PolyExp& a, const PolyExp& b);
    friend PolyExp operator-(const PolyExp& a, const PolyExp& b);
    friend PolyExp operator*(const GaussianRational& c, const PolyExp& f);
    PolyExp operator-() const;

    PolyExp& operator+=(const PolyExp& o) { return *this = *this + o; }
    PolyExp& operator-=(const PolyExp& o) { return *this = *this - o; }

    friend bool operator==(const PolyExp& a, const PolyExp& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const PolyExp& a, const PolyExp& b) { return !(a == b); }

  private:
    std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const PolyExp& f);

/// Product of two expressions under the given base semantics: exponents
/// multiply for sequences and add for functions.
PolyExp mul(const PolyExp& a, const PolyExp& b, OperatorBase base);

struct OperatorFactor {
    GaussianRational root;
    int multiplicity = 1;

    friend bool operator==(const OperatorFactor& a, const OperatorFactor& b) {
        return a.root == b.root && a.multiplicity == b.multiplicity;
    }
};

/// A linear finite-difference or differential operator q(S) or q(D), held
/// expanded and optionally in factored form. When factors are present the
/// expanded polynomial equals lead * prod (x - root_i)^mult_i exactly.
class OperatorSpec {
  public:
    static OperatorSpec from_expanded(OperatorBase base, Poly expanded);
    static OperatorSpec from_factors(OperatorBase base, std::vector<OperatorFactor> factors,
                                     GaussianRational lead);

    /// Attach caller-supplied roots to an expanded operator; throws when
    /// they do not reproduce the expanded polynomial exactly.
    OperatorSpec with_factors(std::vector<OperatorFactor> factors) const;

    OperatorBase base() const { return base_; }
    const Poly& expanded() const { return expanded_; }
    const std::optional<std::vector<OperatorFactor>>& factors() const { return factors_; }
    int degree() const { return expanded_.degree(); }

  private:
    OperatorSpec(OperatorBase base, Poly expanded, std::optional<std::vector<OperatorFactor>> factors);

    OperatorBase base_;
    Poly expanded_;
    std::optional<std::vector<OperatorFactor>> factors_;
};

/// Image under the shift operator: lambda^n p(n) -> lambda^(n+1) p(n+1).
PolyExp apply_shift(const PolyExp& f);

/// Image under the derivative operator: e^(lambda t) p -> e^(lambda t)(lambda p + p').
PolyExp apply_derivative(const PolyExp& f);

PolyExp apply_base(OperatorBase base, const PolyExp& f);

/// q(S) f or q(D) f by Horner evaluation of the expanded polynomial in the
/// base operator.
PolyExp apply_operator(const OperatorSpec& op, const PolyExp& f);

/// Coefficients of (Op - lambda I)^k applied to the degree-r atom of
/// lambda, expressed in the degree 0..r-k atoms. Computed from the
/// one-step binomial recursion, independently of apply_operator, so the
/// two can cross-check each other. The last entry is nonzero.
std::vector<GaussianRational> atom_image_coeffs(int k, int r, const GaussianRational& lambda,
                                                OperatorBase base);

/// The m canonical elements spanning ker (Op - lambda I)^m: degree 0..m-1
/// atoms of lambda. lambda must be nonzero for the shift base.
std::vector<PolyExp> kernel_basis(const GaussianRational& lambda, int m, OperatorBase base);

/// Floating evaluation. For the shift base x must be a nonnegative integer.
std::complex<double> eval_numeric(const PolyExp& f, std::complex<double> x, OperatorBase base);

/// Exact value of the sequence at index n (shift semantics, 0^0 = 1).
GaussianRational eval_exact_sequence(const PolyExp& f, unsigned long n);

}  // namespace polyexp
