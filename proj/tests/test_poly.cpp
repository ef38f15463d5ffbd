#include <doctest.h>

#include "polyexp/poly.hpp"
#include "support/generators.hpp"

using namespace polyexp;

namespace {

Poly make(std::initializer_list<long> coeffs) {
    std::vector<GaussianRational> c;
    for (long v : coeffs)
        c.push_back(GaussianRational(v));
    return Poly(std::move(c));
}

const Poly x = Poly::variable();

}  // namespace

TEST_CASE("ring arithmetic") {
    Poly a = make({-1, 1});  // x - 1
    Poly b = make({-2, 1});  // x - 2
    CHECK(a * b == make({2, -3, 1}));
    Poly p = testgen::rand_poly(4);
    CHECK(p + Poly{} == p);
    CHECK(GaussianRational(0) * make({1, 0, 1}) == Poly{});
    CHECK(Poly{}.degree() == -1);
}

TEST_CASE("euclidean division") {
    auto [q, r] = Poly::divmod(make({2, -3, 1}), make({-1, 1}));
    CHECK(q == make({-2, 1}));
    CHECK(r.is_zero());

    auto [q2, r2] = Poly::divmod(x, x * x);
    CHECK(q2.is_zero());
    CHECK(r2 == x);

    // i is a root of x^2 + 1
    Poly x2p1 = make({1, 0, 1});
    Poly xmi(std::vector<GaussianRational>{-GaussianRational::i(), GaussianRational(1)});
    auto [q3, r3] = Poly::divmod(x2p1, xmi);
    CHECK(r3.is_zero());
    CHECK(q3 == Poly(std::vector<GaussianRational>{GaussianRational::i(), GaussianRational(1)}));

    CHECK_THROWS_AS(Poly::divmod(x, Poly{}), Error);
}

TEST_CASE("divmod round-trip on random pairs") {
    for (int k = 0; k < 100; ++k) {
        Poly a = testgen::rand_poly(static_cast<int>(testgen::rand_int(0, 6)));
        Poly b = testgen::rand_poly(static_cast<int>(testgen::rand_int(0, 4)));
        auto [q, r] = Poly::divmod(a, b);
        CHECK(q * b + r == a);
        CHECK(r.degree() < b.degree());
    }
}

TEST_CASE("pairwise bezout") {
    auto [s, t] = pairwise_bezout(make({-2, 1}), make({-1, 1}));
    CHECK(s == make({-1}));
    CHECK(t == make({1}));

    auto [s2, t2] = pairwise_bezout(make({1}), testgen::rand_poly(3));
    CHECK(s2 == make({1}));
    CHECK(t2.is_zero());

    Poly a = make({-1, 1}) * make({-1, 1});
    Poly b = make({-2, 1});
    auto [s3, t3] = pairwise_bezout(a, b);
    CHECK(s3 * a + t3 * b == make({1}));

    CHECK_THROWS_AS(pairwise_bezout(make({-1, 1}) * make({-2, 1}), make({-1, 1})), Error);
}

TEST_CASE("bezout certificates") {
    BezoutCertificate c = bezout({make({-2, 1}), make({-1, 1})});
    CHECK(c.cofactors[0] == make({-1}));
    CHECK(c.cofactors[1] == make({1}));
    CHECK(c.combination.is_one());

    BezoutCertificate single = bezout({make({1})});
    CHECK(single.cofactors[0] == make({1}));

    Poly sq = make({-1, 1}) * make({-1, 1});  // (x-1)^2
    BezoutCertificate pair = bezout({sq, x * x});
    Poly sum;
    for (std::size_t i = 0; i < pair.cofactors.size(); ++i)
        sum += pair.cofactors[i] * pair.inputs[i];
    CHECK(sum.is_one());

    CHECK_THROWS_AS(bezout({x, x * x}), Error);
    CHECK_THROWS_AS(bezout({x * x}), Error);  // a single non-constant member
    CHECK_THROWS_AS(bezout({}), Error);
}

TEST_CASE("bezout identity on random coprime families") {
    for (int trial = 0; trial < 50; ++trial) {
        int s = static_cast<int>(testgen::rand_int(2, 4));
        auto roots = testgen::rand_distinct_nonzero_scalars(s);
        std::vector<Poly> family;
        for (const GaussianRational& root : roots) {
            std::vector<std::pair<GaussianRational, int>> f{
                {root, static_cast<int>(testgen::rand_int(1, 3))}};
            family.push_back(Poly::from_factored(f, GaussianRational(1)));
        }
        BezoutCertificate cert = bezout(family);
        Poly sum;
        for (std::size_t i = 0; i < family.size(); ++i)
            sum += cert.cofactors[i] * family[i];
        CHECK(sum.is_one());
    }
}

TEST_CASE("from_factored") {
    std::vector<std::pair<GaussianRational, int>> f1{{GaussianRational(2), 1},
                                                     {GaussianRational(3), 1}};
    CHECK(Poly::from_factored(f1, GaussianRational(1)) == make({6, -5, 1}));

    std::vector<std::pair<GaussianRational, int>> f2{{GaussianRational(0), 2}};
    CHECK(Poly::from_factored(f2, GaussianRational(1)) == x * x);

    std::vector<std::pair<GaussianRational, int>> f3{{GaussianRational(1), 2}};
    CHECK(Poly::from_factored(f3, GaussianRational(2)) == make({2, -4, 2}));

    std::vector<std::pair<GaussianRational, int>> dup{{GaussianRational(1), 1},
                                                      {GaussianRational(1), 1}};
    CHECK_THROWS_AS(Poly::from_factored(dup, GaussianRational(1)), Error);
    CHECK_THROWS_AS(Poly::from_factored(f1, GaussianRational(0)), Error);
}

TEST_CASE("factored polynomials vanish to the right order at their roots") {
    for (int trial = 0; trial < 30; ++trial) {
        int s = static_cast<int>(testgen::rand_int(1, 3));
        auto roots = testgen::rand_distinct_nonzero_scalars(s);
        std::vector<std::pair<GaussianRational, int>> factors;
        for (const GaussianRational& root : roots)
            factors.push_back({root, static_cast<int>(testgen::rand_int(1, 3))});
        Poly p = Poly::from_factored(factors, testgen::rand_nonzero_scalar());
        for (const auto& [root, mult] : factors) {
            Poly d = p;
            for (int k = 0; k < mult - 1; ++k) {
                CHECK(d.eval(root).is_zero());
                d = d.derivative();
            }
            CHECK(d.eval(root).is_zero());
            CHECK_FALSE(d.derivative().eval(root).is_zero());
        }
    }
}

TEST_CASE("evaluation and coefficient transforms") {
    CHECK((x * x).taylor_shift() == make({1, 2, 1}));
    CHECK((x * x * x).derivative() == make({0, 0, 3}));
    CHECK(make({6, -5, 1}).eval(GaussianRational(2)).is_zero());

    for (int k = 0; k < 30; ++k) {
        Poly p = testgen::rand_poly(5);
        GaussianRational a = testgen::rand_scalar();
        CHECK(p.taylor_shift().eval(a) == p.eval(a + GaussianRational(1)));
    }
}
