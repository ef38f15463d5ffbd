#pragma once

#include <complex>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "polyexp/gaussian.hpp"

namespace polyexp {

/// Dense univariate polynomial over the Gaussian rationals. Coefficient j
/// is the coefficient of x^j; the highest-index coefficient is nonzero.
/// degree() is -1 for the zero polynomial (the "minus infinity" marker).
class Poly {
  public:
    Poly() = default;
    Poly(GaussianRational constant);
    Poly(long constant) : Poly(GaussianRational(constant)) {}
    explicit Poly(std::vector<GaussianRational> coeffs);

    static Poly variable() { return monomial(GaussianRational(1), 1); }
    static Poly monomial(GaussianRational coeff, int degree);

    /// lead * prod (x - root_i)^mult_i, expanded. Roots must be pairwise
    /// distinct, multiplicities >= 1, lead nonzero.
    static Poly from_factored(std::span<const std::pair<GaussianRational, int>> factors,
                              const GaussianRational& lead);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
    bool is_constant() const { return coeffs_.size() <= 1; }

    const std::vector<GaussianRational>& coeffs() const { return coeffs_; }
    /// Coefficient of x^j, zero outside the stored range.
    const GaussianRational& coeff(int j) const;
    const GaussianRational& leading() const;
    GaussianRational constant_term() const { return coeffs_.empty() ? GaussianRational() : coeffs_[0]; }

    Poly monic() const;
    GaussianRational eval(const GaussianRational& x) const;
    std::complex<double> eval(std::complex<double> x) const;
    Poly derivative() const;
    /// p(x) -> p(x + 1); carries the shift operator onto coefficients.
    Poly taylor_shift() const;
    Poly pow(int e) const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const GaussianRational& c, const Poly& p);
    Poly operator-() const;

    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Euclidean division: a = q*b + r with deg r < deg b. Throws on b = 0.
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

    std::string str(std::string_view var) const;

  private:
    void normalize();

    std::vector<GaussianRational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

Poly operator/(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);

/// Monic greatest common divisor (gcd(0, 0) = 0).
Poly gcd(const Poly& a, const Poly& b);

struct ExtendedGcd {
    Poly g, s, t;  // s*a + t*b = g, g monic (or zero)
};
ExtendedGcd extended_gcd(const Poly& a, const Poly& b);

/// Cofactors (s, t) with s*a + t*b = 1. Throws when gcd(a, b) is not constant.
std::pair<Poly, Poly> pairwise_bezout(const Poly& a, const Poly& b);

/// Cofactors r_i for a coprime family, with the defining identity carried
/// along and re-verified exactly on construction.
struct BezoutCertificate {
    std::vector<Poly> cofactors;
    std::vector<Poly> inputs;
    Poly combination;  // equals sum cofactors[i] * inputs[i]; here always 1

    BezoutCertificate(std::vector<Poly> cofactors, std::vector<Poly> inputs, Poly combination);
};

/// Certificate with sum r_i * p_i = 1, built by folding the extended
/// Euclidean algorithm across the family. Throws when the family is not
/// coprime (non-constant gcd).
BezoutCertificate bezout(const std::vector<Poly>& ps);

}  // namespace polyexp
