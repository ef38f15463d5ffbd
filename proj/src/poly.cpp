#include "polyexp/poly.hpp"

#include <ostream>
#include <sstream>

namespace polyexp {

namespace {
const GaussianRational kZero{};
}  // namespace

Poly::Poly(GaussianRational constant) {
    if (!constant.is_zero())
        coeffs_.push_back(std::move(constant));
}

Poly::Poly(std::vector<GaussianRational> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
}

void Poly::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero())
        coeffs_.pop_back();
}

Poly Poly::monomial(GaussianRational coeff, int degree) {
    if (coeff.is_zero())
        return {};
    std::vector<GaussianRational> c(degree + 1);
    c[degree] = std::move(coeff);
    return Poly(std::move(c));
}

Poly Poly::from_factored(std::span<const std::pair<GaussianRational, int>> factors,
                         const GaussianRational& lead) {
    if (lead.is_zero())
        throw Error("factored polynomial with zero leading coefficient");
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (factors[i].second < 1)
            throw Error("factored polynomial with multiplicity < 1");
        for (std::size_t j = i + 1; j < factors.size(); ++j)
            if (factors[i].first == factors[j].first)
                throw Error("factored polynomial with duplicate root");
    }
    Poly result{lead};
    for (const auto& [root, mult] : factors) {
        Poly linear(std::vector<GaussianRational>{-root, GaussianRational(1)});
        for (int k = 0; k < mult; ++k)
            result *= linear;
    }
    return result;
}

const GaussianRational& Poly::coeff(int j) const {
    if (j < 0 || j >= static_cast<int>(coeffs_.size()))
        return kZero;
    return coeffs_[j];
}

const GaussianRational& Poly::leading() const {
    if (coeffs_.empty())
        throw Error("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

Poly Poly::monic() const {
    if (is_zero())
        return {};
    return leading().inv() * *this;
}

GaussianRational Poly::eval(const GaussianRational& x) const {
    GaussianRational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

std::complex<double> Poly::eval(std::complex<double> x) const {
    std::complex<double> acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + it->to_complex();
    return acc;
}

Poly Poly::derivative() const {
    if (coeffs_.size() <= 1)
        return {};
    std::vector<GaussianRational> c(coeffs_.size() - 1);
    for (std::size_t j = 1; j < coeffs_.size(); ++j)
        c[j - 1] = GaussianRational(Rational(static_cast<long>(j))) * coeffs_[j];
    return Poly(std::move(c));
}

Poly Poly::taylor_shift() const {
    // Horner in (x + 1): acc <- acc*(x+1) + c_k, from the top down.
    std::vector<GaussianRational> acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        std::vector<GaussianRational> next(acc.size() + 1);
        for (std::size_t j = 0; j < acc.size(); ++j) {
            next[j + 1] += acc[j];  // * x
            next[j] += acc[j];      // * 1
        }
        next[0] += *it;
        acc = std::move(next);
    }
    return Poly(std::move(acc));
}

Poly Poly::pow(int e) const {
    if (e < 0)
        throw Error("negative polynomial power");
    Poly result{GaussianRational(1)};
    Poly base = *this;
    while (e > 0) {
        if (e & 1)
            result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<GaussianRational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t j = 0; j < c.size(); ++j)
        c[j] = a.coeff(static_cast<int>(j)) + b.coeff(static_cast<int>(j));
    return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
    std::vector<GaussianRational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t j = 0; j < c.size(); ++j)
        c[j] = a.coeff(static_cast<int>(j)) - b.coeff(static_cast<int>(j));
    return Poly(std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<GaussianRational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Poly(std::move(c));
}

Poly operator*(const GaussianRational& c, const Poly& p) {
    std::vector<GaussianRational> out(p.coeffs_.size());
    for (std::size_t j = 0; j < out.size(); ++j)
        out[j] = c * p.coeffs_[j];
    return Poly(std::move(out));
}

Poly Poly::operator-() const {
    return GaussianRational(-1) * *this;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
    if (b.is_zero())
        throw Error("polynomial division by zero");
    Poly rem = a;
    std::vector<GaussianRational> quo(std::max(0, a.degree() - b.degree() + 1));
    GaussianRational lead_inv = b.leading().inv();
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        int k = rem.degree() - b.degree();
        GaussianRational c = rem.leading() * lead_inv;
        quo[k] = c;
        rem -= Poly::monomial(c, k) * b;
    }
    return {Poly(std::move(quo)), std::move(rem)};
}

Poly operator/(const Poly& a, const Poly& b) {
    return Poly::divmod(a, b).first;
}

Poly operator%(const Poly& a, const Poly& b) {
    return Poly::divmod(a, b).second;
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly r0 = a, r1 = b;
    while (!r1.is_zero()) {
        Poly r = r0 % r1;
        r0 = std::move(r1);
        r1 = std::move(r);
    }
    return r0.is_zero() ? r0 : r0.monic();
}

ExtendedGcd extended_gcd(const Poly& a, const Poly& b) {
    Poly r0 = a, r1 = b;
    Poly s0{GaussianRational(1)}, s1;
    Poly t0, t1{GaussianRational(1)};
    while (!r1.is_zero()) {
        auto [q, r] = Poly::divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        Poly t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero())
        return {Poly{}, Poly{}, Poly{}};
    GaussianRational scale = r0.leading().inv();
    return {scale * r0, scale * s0, scale * t0};
}

std::pair<Poly, Poly> pairwise_bezout(const Poly& a, const Poly& b) {
    ExtendedGcd e = extended_gcd(a, b);
    if (!e.g.is_one())
        throw Error("polynomials are not coprime");
    return {std::move(e.s), std::move(e.t)};
}

BezoutCertificate::BezoutCertificate(std::vector<Poly> cofactors_in, std::vector<Poly> inputs_in,
                                     Poly combination_in)
    : cofactors(std::move(cofactors_in)), inputs(std::move(inputs_in)), combination(std::move(combination_in)) {
    if (cofactors.size() != inputs.size())
        throw Error("Bezout certificate size mismatch");
    Poly sum;
    for (std::size_t i = 0; i < cofactors.size(); ++i)
        sum += cofactors[i] * inputs[i];
    if (sum != combination)
        throw Error("Bezout certificate does not verify");
}

BezoutCertificate bezout(const std::vector<Poly>& ps) {
    if (ps.empty())
        throw Error("Bezout identity of an empty family");
    // Fold the pairwise identity: keep gcd(p_1..p_k) together with cofactors
    // expressing it, then absorb p_{k+1}.
    Poly g = ps[0];
    std::vector<Poly> cof{Poly{GaussianRational(1)}};
    for (std::size_t k = 1; k < ps.size(); ++k) {
        ExtendedGcd e = extended_gcd(g, ps[k]);
        for (Poly& c : cof)
            c = e.s * c;
        cof.push_back(std::move(e.t));
        g = std::move(e.g);
    }
    if (g.is_zero() || g.degree() > 0)
        throw Error("polynomials are not coprime");
    GaussianRational scale = g.coeffs()[0].inv();
    for (Poly& c : cof)
        c = scale * c;
    return BezoutCertificate(std::move(cof), ps, Poly{GaussianRational(1)});
}

std::string Poly::str(std::string_view var) const {
    if (is_zero())
        return "0";
    std::string out;
    for (int j = degree(); j >= 0; --j) {
        const GaussianRational& c = coeffs_[j];
        if (c.is_zero())
            continue;
        std::string mono;
        if (j == 0) {
            std::ostringstream os;
            os << c;
            mono = os.str();
        } else {
            std::string prefix;
            if (c.is_one()) {
                prefix = "";
            } else if (c == GaussianRational(-1)) {
                prefix = "-";
            } else if (c.re().is_zero()) {
                if (c.im().is_one())
                    prefix = "i*";
                else if (c.im() == Rational(-1))
                    prefix = "-i*";
                else
                    prefix = c.im().str() + "*i*";
            } else if (c.im().is_zero()) {
                prefix = c.re().str() + "*";
            } else {
                std::ostringstream os;
                os << "(" << c << ")*";
                prefix = os.str();
            }
            mono = prefix + std::string(var);
            if (j > 1)
                mono += "^" + std::to_string(j);
        }
        if (out.empty())
            out = mono;
        else if (!mono.empty() && mono[0] == '-')
            out += mono;
        else
            out += "+" + mono;
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) {
    return os << p.str("x");
}

}  // namespace polyexp
