#include <doctest.h>

#include <cmath>

#include "polyexp/polyexp.hpp"
#include "support/generators.hpp"

using namespace polyexp;

namespace {

PolyExp atom(long lambda, int degree) {
    return PolyExp::term(GaussianRational(lambda), Poly::monomial(GaussianRational(1), degree));
}

Poly make(std::initializer_list<long> coeffs) {
    std::vector<GaussianRational> c;
    for (long v : coeffs)
        c.push_back(GaussianRational(v));
    return Poly(std::move(c));
}

OperatorSpec shifted_power(const GaussianRational& lambda, int k, OperatorBase base) {
    if (k == 0)
        return OperatorSpec::from_expanded(base, Poly(GaussianRational(1)));
    return OperatorSpec::from_factors(base, {{lambda, k}}, GaussianRational(1));
}

}  // namespace

TEST_CASE("canonicalization merges, drops zeros, and sorts") {
    PolyExp f = PolyExp::from_terms({{GaussianRational(2), Poly::variable()},
                                     {GaussianRational(2), make({1, -1})}});
    CHECK(f == PolyExp::term(GaussianRational(2), make({1})));

    CHECK(PolyExp::from_terms({}).is_zero());
    CHECK(PolyExp::from_terms({{GaussianRational(3), Poly{}},
                               {GaussianRational(2), Poly::variable()}}) ==
          PolyExp::term(GaussianRational(2), Poly::variable()));

    for (int k = 0; k < 30; ++k) {
        PolyExp g = testgen::rand_polyexp(3, 3, true);
        CHECK(PolyExp::from_terms(g.terms()) == g);  // idempotent
    }
}

TEST_CASE("shift application") {
    CHECK(apply_shift(PolyExp::term(GaussianRational(2), make({1}))) ==
          PolyExp::term(GaussianRational(2), make({2})));
    CHECK(apply_shift(atom(2, 1)) == PolyExp::term(GaussianRational(2), make({2, 2})));
    CHECK(apply_shift(PolyExp{}).is_zero());
}

TEST_CASE("derivative application") {
    CHECK(apply_derivative(PolyExp::term(GaussianRational(1), make({1}))) ==
          PolyExp::term(GaussianRational(1), make({1})));
    CHECK(apply_derivative(PolyExp::term(GaussianRational(0), make({0, 0, 1}))) ==
          PolyExp::term(GaussianRational(0), make({0, 2})));
    CHECK(apply_derivative(atom(2, 1)) == PolyExp::term(GaussianRational(2), make({1, 2})));
}

TEST_CASE("operator application") {
    // (S - 2)(n 2^n) = 2 * 2^n
    OperatorSpec s_minus_2 = OperatorSpec::from_factors(OperatorBase::Shift,
                                                        {{GaussianRational(2), 1}},
                                                        GaussianRational(1));
    CHECK(apply_operator(s_minus_2, atom(2, 1)) ==
          PolyExp::term(GaussianRational(2), make({2})));

    OperatorSpec sq = OperatorSpec::from_factors(OperatorBase::Shift, {{GaussianRational(2), 2}},
                                                 GaussianRational(1));
    CHECK(apply_operator(sq, atom(2, 1)).is_zero());

    // (D-1)(D-2) applied to -t e^t gives e^t
    OperatorSpec ode = OperatorSpec::from_factors(
        OperatorBase::Derivative, {{GaussianRational(1), 1}, {GaussianRational(2), 1}},
        GaussianRational(1));
    CHECK(apply_operator(ode, PolyExp::term(GaussianRational(1), make({0, -1}))) ==
          PolyExp::term(GaussianRational(1), make({1})));
}

TEST_CASE("atom image coefficients") {
    auto identity = atom_image_coeffs(0, 3, GaussianRational(5), OperatorBase::Shift);
    CHECK(identity == std::vector<GaussianRational>{GaussianRational(0), GaussianRational(0),
                                                    GaussianRational(0), GaussianRational(1)});

    auto shift11 = atom_image_coeffs(1, 1, GaussianRational(2), OperatorBase::Shift);
    CHECK(shift11 == std::vector<GaussianRational>{GaussianRational(2)});

    auto deriv11 = atom_image_coeffs(1, 1, testgen::rand_scalar(), OperatorBase::Derivative);
    CHECK(deriv11 == std::vector<GaussianRational>{GaussianRational(1)});

    CHECK_THROWS_AS(atom_image_coeffs(1, 1, GaussianRational(0), OperatorBase::Shift), Error);
    CHECK_THROWS_AS(atom_image_coeffs(3, 2, GaussianRational(1), OperatorBase::Shift), Error);
}

TEST_CASE("operator images match the closed-form coefficients") {
    for (OperatorBase base : {OperatorBase::Shift, OperatorBase::Derivative}) {
        for (int trial = 0; trial < 10; ++trial) {
            GaussianRational lambda = testgen::rand_nonzero_scalar();
            for (int r = 0; r <= 6; ++r) {
                for (int k = 0; k <= r; ++k) {
                    PolyExp image = apply_operator(shifted_power(lambda, k, base),
                                                   PolyExp::term(lambda, Poly::monomial(GaussianRational(1), r)));
                    auto coeffs = atom_image_coeffs(k, r, lambda, base);
                    CHECK_FALSE(coeffs.back().is_zero());
                    PolyExp expected = PolyExp::term(lambda, Poly(coeffs));
                    CHECK(image == expected);
                }
                // one power beyond the degree annihilates
                CHECK(apply_operator(shifted_power(lambda, r + 1, base),
                                     PolyExp::term(lambda, Poly::monomial(GaussianRational(1), r)))
                          .is_zero());
            }
        }
    }
}

TEST_CASE("kernel bases") {
    auto g = kernel_basis(GaussianRational(2), 3, OperatorBase::Shift);
    REQUIRE(g.size() == 3);
    CHECK(g[0] == atom(2, 0));
    CHECK(g[1] == atom(2, 1));
    CHECK(g[2] == atom(2, 2));

    auto h = kernel_basis(GaussianRational(0), 2, OperatorBase::Derivative);
    REQUIRE(h.size() == 2);
    CHECK(h[0] == PolyExp::term(GaussianRational(0), make({1})));
    CHECK(h[1] == PolyExp::term(GaussianRational(0), make({0, 1})));

    CHECK(kernel_basis(GaussianRational(1), 1, OperatorBase::Derivative).size() == 1);
    CHECK_THROWS_AS(kernel_basis(GaussianRational(0), 2, OperatorBase::Shift), Error);
    CHECK_THROWS_AS(kernel_basis(GaussianRational(1), 0, OperatorBase::Shift), Error);
}

TEST_CASE("kernel bases are annihilated at exactly the right power") {
    for (OperatorBase base : {OperatorBase::Shift, OperatorBase::Derivative}) {
        for (int trial = 0; trial < 25; ++trial) {
            GaussianRational lambda = testgen::rand_nonzero_scalar();
            int m = static_cast<int>(testgen::rand_int(1, 5));
            auto basis = kernel_basis(lambda, m, base);
            REQUIRE(static_cast<int>(basis.size()) == m);
            OperatorSpec full = shifted_power(lambda, m, base);
            for (const PolyExp& f : basis)
                CHECK(apply_operator(full, f).is_zero());
            if (m >= 1) {
                OperatorSpec low = shifted_power(lambda, m - 1, base);
                CHECK_FALSE(apply_operator(low, basis.back()).is_zero());
            }
        }
    }
}

TEST_CASE("exact sequence evaluation") {
    CHECK(eval_exact_sequence(PolyExp::term(GaussianRational(2), make({1})), 10) ==
          GaussianRational(1024));
    CHECK(eval_exact_sequence(PolyExp::term(GaussianRational(Rational(1, 2)), make({1})), 2) ==
          GaussianRational(Rational(1, 4)));
    PolyExp f = atom(2, 1) + PolyExp::term(GaussianRational(3), make({1}));
    CHECK(eval_exact_sequence(f, 2) == GaussianRational(17));
}

TEST_CASE("numeric evaluation") {
    auto v = eval_numeric(atom(2, 1), {3.0, 0.0}, OperatorBase::Shift);
    CHECK(v.real() == doctest::Approx(24.0));
    CHECK(eval_numeric(PolyExp{}, {5.0, 0.0}, OperatorBase::Shift) == std::complex<double>(0.0));
    auto e = eval_numeric(PolyExp::term(GaussianRational(1), make({0, 1})), {1.0, 0.0},
                          OperatorBase::Derivative);
    CHECK(e.real() == doctest::Approx(std::exp(1.0)));
    CHECK_THROWS_AS(eval_numeric(atom(2, 0), {2.5, 0.0}, OperatorBase::Shift), Error);
    CHECK_THROWS_AS(eval_numeric(atom(2, 0), {100000.0, 0.0}, OperatorBase::Shift), Error);
}

TEST_CASE("shift semantics agree with exact sequence evaluation") {
    for (int trial = 0; trial < 20; ++trial) {
        PolyExp f = testgen::rand_polyexp(3, 3, false);
        PolyExp shifted = apply_shift(f);
        for (unsigned long n = 0; n <= 20; ++n)
            CHECK(eval_exact_sequence(shifted, n) == eval_exact_sequence(f, n + 1));
    }
}

TEST_CASE("derivative semantics agree with finite differences") {
    for (int trial = 0; trial < 20; ++trial) {
        PolyExp f = testgen::rand_polyexp(2, 2, true);
        PolyExp df = apply_derivative(f);
        for (int k = 0; k < 20; ++k) {
            double t = testgen::rand_int(-100, 100) / 100.0;
            double h = 1e-5;
            auto hi = eval_numeric(f, {t + h, 0.0}, OperatorBase::Derivative);
            auto lo = eval_numeric(f, {t - h, 0.0}, OperatorBase::Derivative);
            auto exact = eval_numeric(df, {t, 0.0}, OperatorBase::Derivative);
            std::complex<double> approx = (hi - lo) / (2 * h);
            double scale = std::max({1.0, std::abs(exact), std::abs(hi), std::abs(lo)});
            CHECK(std::abs(approx - exact) / scale < 1e-6);
        }
    }
}

TEST_CASE("factored operator specs validate their roots") {
    Poly expanded = make({6, -5, 1});
    OperatorSpec op = OperatorSpec::from_expanded(OperatorBase::Shift, expanded);
    OperatorSpec factored = op.with_factors({{GaussianRational(2), 1}, {GaussianRational(3), 1}});
    CHECK(factored.expanded() == expanded);
    CHECK_THROWS_AS(op.with_factors({{GaussianRational(2), 2}}), Error);
    CHECK_THROWS_AS(OperatorSpec::from_expanded(OperatorBase::Shift, Poly{}), Error);
}
