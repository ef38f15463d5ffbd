#include "polyexp/polyexp.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

namespace polyexp {

const char* base_variable(OperatorBase base) {
    return base == OperatorBase::Shift ? "n" : "t";
}

const char* base_name(OperatorBase base) {
    return base == OperatorBase::Shift ? "shift" : "derivative";
}

PolyExp PolyExp::from_terms(std::vector<Term> raw) {
    std::sort(raw.begin(), raw.end(), [](const Term& a, const Term& b) {
        return GaussianRational::cmp(a.first, b.first) < 0;
    });
    PolyExp out;
    for (Term& t : raw) {
        if (!out.terms_.empty() && out.terms_.back().first == t.first)
            out.terms_.back().second += t.second;
        else
            out.terms_.push_back(std::move(t));
        if (!out.terms_.empty() && out.terms_.back().second.is_zero())
            out.terms_.pop_back();
    }
    return out;
}

PolyExp PolyExp::term(GaussianRational lambda, Poly p) {
    PolyExp out;
    if (!p.is_zero())
        out.terms_.push_back({std::move(lambda), std::move(p)});
    return out;
}

const Poly* PolyExp::coeff_for(const GaussianRational& lambda) const {
    for (const Term& t : terms_)
        if (t.first == lambda)
            return &t.second;
    return nullptr;
}

PolyExp operator+(const PolyExp& a, const PolyExp& b) {
    std::vector<PolyExp::Term> raw = a.terms_;
    raw.insert(raw.end(), b.terms_.begin(), b.terms_.end());
    return PolyExp::from_terms(std::move(raw));
}

PolyExp operator-(const PolyExp& a, const PolyExp& b) {
    return a + -b;
}

PolyExp operator*(const GaussianRational& c, const PolyExp& f) {
    std::vector<PolyExp::Term> raw;
    raw.reserve(f.terms_.size());
    for (const auto& [lambda, p] : f.terms_)
        raw.push_back({lambda, c * p});
    return PolyExp::from_terms(std::move(raw));
}

PolyExp PolyExp::operator-() const {
    return GaussianRational(-1) * *this;
}

PolyExp mul(const PolyExp& a, const PolyExp& b, OperatorBase base) {
    std::vector<PolyExp::Term> raw;
    for (const auto& [la, pa] : a.terms())
        for (const auto& [lb, pb] : b.terms()) {
            GaussianRational lambda = base == OperatorBase::Shift ? la * lb : la + lb;
            raw.push_back({std::move(lambda), pa * pb});
        }
    return PolyExp::from_terms(std::move(raw));
}

std::ostream& operator<<(std::ostream& os, const PolyExp& f) {
    // debug form; the canonical text lives in format.hpp
    if (f.is_zero())
        return os << "{}";
    os << "{";
    bool first = true;
    for (const auto& [lambda, p] : f.terms()) {
        if (!first)
            os << ", ";
        os << lambda << ": " << p;
        first = false;
    }
    return os << "}";
}

OperatorSpec::OperatorSpec(OperatorBase base, Poly expanded,
                           std::optional<std::vector<OperatorFactor>> factors)
    : base_(base), expanded_(std::move(expanded)), factors_(std::move(factors)) {}

OperatorSpec OperatorSpec::from_expanded(OperatorBase base, Poly expanded) {
    if (expanded.is_zero())
        throw Error("operator polynomial must be nonzero");
    return OperatorSpec(base, std::move(expanded), std::nullopt);
}

OperatorSpec OperatorSpec::from_factors(OperatorBase base, std::vector<OperatorFactor> factors,
                                        GaussianRational lead) {
    std::vector<std::pair<GaussianRational, int>> pairs;
    pairs.reserve(factors.size());
    for (const OperatorFactor& f : factors)
        pairs.push_back({f.root, f.multiplicity});
    Poly expanded = Poly::from_factored(pairs, lead);
    return OperatorSpec(base, std::move(expanded), std::move(factors));
}

OperatorSpec OperatorSpec::with_factors(std::vector<OperatorFactor> factors) const {
    std::vector<std::pair<GaussianRational, int>> pairs;
    pairs.reserve(factors.size());
    for (const OperatorFactor& f : factors)
        pairs.push_back({f.root, f.multiplicity});
    Poly rebuilt = Poly::from_factored(pairs, expanded_.leading());
    if (rebuilt != expanded_)
        throw Error("supplied roots do not reproduce the operator polynomial");
    return OperatorSpec(base_, expanded_, std::move(factors));
}

PolyExp apply_shift(const PolyExp& f) {
    std::vector<PolyExp::Term> raw;
    raw.reserve(f.terms().size());
    for (const auto& [lambda, p] : f.terms())
        raw.push_back({lambda, lambda * p.taylor_shift()});
    return PolyExp::from_terms(std::move(raw));
}

PolyExp apply_derivative(const PolyExp& f) {
    std::vector<PolyExp::Term> raw;
    raw.reserve(f.terms().size());
    for (const auto& [lambda, p] : f.terms())
        raw.push_back({lambda, lambda * p + p.derivative()});
    return PolyExp::from_terms(std::move(raw));
}

PolyExp apply_base(OperatorBase base, const PolyExp& f) {
    return base == OperatorBase::Shift ? apply_shift(f) : apply_derivative(f);
}

PolyExp apply_operator(const OperatorSpec& op, const PolyExp& f) {
    PolyExp acc;
    for (int k = op.expanded().degree(); k >= 0; --k) {
        acc = apply_base(op.base(), acc);
        acc += op.expanded().coeff(k) * f;
    }
    return acc;
}

std::vector<GaussianRational> atom_image_coeffs(int k, int r, const GaussianRational& lambda,
                                                OperatorBase base) {
    if (k < 0 || r < 0 || k > r)
        throw Error("atom_image_coeffs requires 0 <= k <= r");
    if (base == OperatorBase::Shift && lambda.is_zero())
        throw Error("shift atoms require a nonzero exponent base");

    if (base == OperatorBase::Derivative) {
        // (D - lambda)^k (t^r e^(lambda t)) = r (r-1) ... (r-k+1) t^(r-k) e^(lambda t)
        std::vector<GaussianRational> out(r - k + 1);
        GaussianRational falling(1);
        for (int j = 0; j < k; ++j)
            falling *= GaussianRational(r - j);
        out[r - k] = falling;
        return out;
    }

    // One application: (S - lambda)(n^d lambda^n) = lambda * sum_{j<d} C(d, j) n^j lambda^n.
    std::vector<std::vector<GaussianRational>> binom(r + 1, std::vector<GaussianRational>(r + 1));
    for (int d = 0; d <= r; ++d) {
        binom[d][0] = GaussianRational(1);
        for (int j = 1; j <= d; ++j)
            binom[d][j] = binom[d - 1][j - 1] + (j <= d - 1 ? binom[d - 1][j] : GaussianRational());
    }
    std::vector<GaussianRational> c(r + 1);
    c[r] = GaussianRational(1);
    for (int step = 0; step < k; ++step) {
        int top = static_cast<int>(c.size()) - 1;
        std::vector<GaussianRational> next(top);  // degrees 0..top-1
        for (int d = 1; d <= top; ++d) {
            if (c[d].is_zero())
                continue;
            for (int j = 0; j < d; ++j)
                next[j] += lambda * binom[d][j] * c[d];
        }
        c = std::move(next);
    }
    return c;
}

std::vector<PolyExp> kernel_basis(const GaussianRational& lambda, int m, OperatorBase base) {
    if (m < 1)
        throw Error("kernel basis requires m >= 1");
    if (base == OperatorBase::Shift && lambda.is_zero())
        throw Error("shift kernels are not spanned by exponent-zero atoms; lambda must be nonzero");
    std::vector<PolyExp> out;
    out.reserve(m);
    for (int j = 0; j < m; ++j)
        out.push_back(PolyExp::term(lambda, Poly::monomial(GaussianRational(1), j)));
    return out;
}

std::complex<double> eval_numeric(const PolyExp& f, std::complex<double> x, OperatorBase base) {
    std::complex<double> acc;
    if (base == OperatorBase::Shift) {
        if (x.imag() != 0.0 || x.real() < 0.0 || x.real() != std::floor(x.real()))
            throw Error("sequence evaluation requires a nonnegative integer index");
        auto n = static_cast<unsigned long>(x.real());
        for (const auto& [lambda, p] : f.terms()) {
            std::complex<double> pw(1.0);
            std::complex<double> b = lambda.to_complex();
            for (unsigned long e = n; e > 0; e >>= 1) {
                if (e & 1)
                    pw *= b;
                b *= b;
            }
            acc += pw * p.eval(x);
        }
    } else {
        for (const auto& [lambda, p] : f.terms())
            acc += std::exp(lambda.to_complex() * x) * p.eval(x);
    }
    if (!std::isfinite(acc.real()) || !std::isfinite(acc.imag()))
        throw Error("numeric evaluation overflowed");
    return acc;
}

GaussianRational eval_exact_sequence(const PolyExp& f, unsigned long n) {
    GaussianRational acc;
    GaussianRational idx{Rational(static_cast<long>(n))};
    for (const auto& [lambda, p] : f.terms())
        acc += lambda.pow(n) * p.eval(idx);  // pow(_, 0) = 1 covers 0^0
    return acc;
}

}  // namespace polyexp
