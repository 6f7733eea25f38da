#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ratcurve/binary_form.hpp"
#include "ratcurve/errors.hpp"
#include "ratcurve/rational.hpp"
#include "ratcurve/ternary_form.hpp"
#include "test_support.hpp"

using namespace ratcurve;
using rctest::bf;
using rctest::st;

TEST_CASE("rational parsing and formatting") {
    CHECK(to_string(parse_rational("3/6")) == "1/2");
    CHECK(to_string(parse_rational("-4/2")) == "-2");
    CHECK(to_string(parse_rational("7")) == "7");
    CHECK(parse_rational("0/5") == 0);
    CHECK_THROWS_AS(parse_rational("1/0"), InvalidInput);
    CHECK_THROWS_AS(parse_rational("a"), InvalidInput);
    CHECK_THROWS_AS(parse_rational(""), InvalidInput);
}

TEST_CASE("binary form basics") {
    BinaryForm f = bf({1, 0, -1}); // s^2 - t^2
    CHECK(f.degree() == 2);
    CHECK(f.eval(3, 1) == 8);
    CHECK(f.ds() == bf({2, 0}));
    CHECK(f.dt() == bf({0, -2}));
    CHECK(st(1, 2).s_order() == 1);
    CHECK(st(1, 2).t_order() == 2);
    CHECK((f * st(0, 1)) == bf({0, 1, 0, -1}));
}

TEST_CASE("gcd of binary forms") {
    // gcd(s t^2, t^3) = t^2
    CHECK(gcd(st(1, 2), st(0, 3)) == st(0, 2));
    // gcd(s^2 - t^2, (s - t)^2) = s - t
    BinaryForm a = bf({1, 0, -1});
    BinaryForm b = bf({1, -2, 1});
    CHECK(gcd(a, b) == bf({1, -1}));
    // gcd(s^3, t^3) = 1
    CHECK(gcd(st(3, 0), st(0, 3)) == bf({1}));
    // gcd with the zero form returns the other input, monic
    CHECK(gcd(BinaryForm::zero(4), bf({2, 2})) == bf({1, 1}));
}

TEST_CASE("gcd divides both inputs exactly (random)") {
    rctest::FormGen gen(101);
    for (int trial = 0; trial < 60; ++trial) {
        BinaryForm f = gen.form(2 + trial % 5);
        BinaryForm g = gen.form(2 + (trial / 2) % 5);
        if (f.is_zero() || g.is_zero()) continue;
        BinaryForm h = gcd(f, g);
        CHECK(divides(h, f));
        CHECK(divides(h, g));
        // resultant vanishes iff the gcd is nontrivial
        CHECK((resultant(f, g) == 0) == (h.degree() >= 1));
        // force a common factor and re-test
        BinaryForm c = gen.form(2);
        if (c.is_zero()) continue;
        CHECK(resultant(f * c, g * c) == 0);
        CHECK(gcd(f * c, g * c).degree() >= c.degree());
    }
}

TEST_CASE("resultants") {
    CHECK(resultant(st(1, 0), st(0, 1)) == 1);             // Res(s, t) = 1
    CHECK(resultant(bf({1, -1}), bf({1, 1})) == 2);        // Res(s - t, s + t) = 2
    CHECK(resultant(bf({3, 0, 1}), bf({0, 2, 3})) == 93);  // 3(27 + 4)
}

TEST_CASE("resultant matches the brute-force Sylvester determinant") {
    rctest::FormGen gen(202);
    for (int trial = 0; trial < 20; ++trial) {
        BinaryForm f = gen.form(2 + trial % 3);
        BinaryForm g = gen.form(2 + (trial / 3) % 3);
        if (f.is_zero() || g.is_zero()) continue;
        const int m = f.degree(), n = g.degree();
        QMatrix syl(m + n, m + n);
        for (int r = 0; r < n; ++r)
            for (int k = 0; k <= m; ++k) syl.at(r, r + k) = f.coeff(k);
        for (int r = 0; r < m; ++r)
            for (int k = 0; k <= n; ++k) syl.at(n + r, r + k) = g.coeff(k);
        CHECK(resultant(f, g) == rctest::laplace_det(syl));
    }
}

TEST_CASE("squarefree decomposition") {
    auto dec = squarefree_decomposition(st(0, 2)); // t^2
    REQUIRE(dec.size() == 1);
    CHECK(dec[0].first == st(0, 1));
    CHECK(dec[0].second == 2);

    // s (t - s)^2
    BinaryForm f = st(1, 0) * (st(0, 1) - st(1, 0)) * (st(0, 1) - st(1, 0));
    dec = squarefree_decomposition(f);
    REQUIRE(dec.size() == 2);
    CHECK(dec[0].first == st(1, 0));
    CHECK(dec[0].second == 1);
    CHECK(dec[1].first == bf({1, -1})); // primitive-positive of t - s
    CHECK(dec[1].second == 2);

    // s^3 + t^3 is squarefree: gcd(f, f_s, f_t) = 1 by the Euclidean oracle
    BinaryForm cube = bf({1, 0, 0, 1});
    CHECK(gcd(gcd(cube, cube.ds()), cube.dt()).degree() == 0);
    dec = squarefree_decomposition(cube);
    REQUIRE(dec.size() == 1);
    CHECK(dec[0].first == cube);
    CHECK(dec[0].second == 1);
}

TEST_CASE("squarefree reassembles the input up to a constant (random)") {
    rctest::FormGen gen(303);
    for (int trial = 0; trial < 40; ++trial) {
        BinaryForm f = gen.form(1 + trial % 4);
        BinaryForm g = gen.form(1 + (trial / 4) % 3);
        if (f.is_zero() || g.is_zero()) continue;
        BinaryForm prod = f * f * g; // guaranteed multiplicity
        BinaryForm acc = bf({1});
        for (const auto& [p, m] : squarefree_decomposition(prod))
            for (int i = 0; i < m; ++i) acc = acc * p;
        CHECK(primitive_positive(acc) == primitive_positive(prod));
    }
}

TEST_CASE("rational roots") {
    auto roots = rational_roots(st(0, 2)); // t^2 -> (1:0) twice
    REQUIRE(roots.size() == 1);
    CHECK(roots[0].first == ProjPoint1{1, 0});
    CHECK(roots[0].second == 2);

    roots = rational_roots(bf({1, 0, -1})); // s^2 - t^2
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].first == ProjPoint1{1, -1});
    CHECK(roots[1].first == ProjPoint1{1, 1});

    CHECK(rational_roots(bf({1, 0, 1})).empty()); // s^2 + t^2

    // roots satisfy f = 0 exactly, multiplicities bounded by the degree
    rctest::FormGen gen(404);
    for (int trial = 0; trial < 30; ++trial) {
        BinaryForm f = gen.form(2 + trial % 5);
        if (f.is_zero()) continue;
        int total = 0;
        for (const auto& [p, m] : rational_roots(f)) {
            CHECK(f.eval(Rational(p.a), Rational(p.b)) == 0);
            total += m;
        }
        CHECK(total <= f.degree());
    }
}

TEST_CASE("large coefficients in root extraction") {
    // leading/trailing coefficients beyond the trial-division bound force the
    // Pollard path of divisors()
    Rational a(Int("1000000007")), b(Int("998244353"));
    BinaryForm f = (st(1, 0) * a - st(0, 1)) * (st(1, 0) + st(0, 1) * b);
    auto roots = rational_roots(f);
    REQUIRE(roots.size() == 2);
    bool saw1 = false, saw2 = false;
    for (const auto& [p, m] : roots) {
        if (p == ProjPoint1{1, Int("1000000007")}) saw1 = true;
        if (p == ProjPoint1{Int("998244353"), -1}) saw2 = true;
        CHECK(m == 1);
    }
    CHECK(saw1);
    CHECK(saw2);
}

TEST_CASE("ternary compose") {
    // y^3 - x z^2 vanishes on (s^3, s t^2, t^3)
    TernaryForm F = TernaryForm::monomial({0, 3, 0}) - TernaryForm::monomial({1, 0, 2});
    CHECK(compose(F, st(3, 0), st(1, 2), st(0, 3)).is_zero());
    // x composes to f0
    CHECK(compose(TernaryForm::monomial({1, 0, 0}), st(3, 0), st(1, 2), st(0, 3)) == st(3, 0));
    // x z - y^2 vanishes on the conic
    TernaryForm conic = TernaryForm::monomial({1, 0, 1}) - TernaryForm::monomial({0, 2, 0});
    CHECK(compose(conic, st(2, 0), st(1, 1), st(0, 2)).is_zero());
}

TEST_CASE("ternary exact division") {
    TernaryForm disc = TernaryForm::monomial({0, 3, 0}, 4) + TernaryForm::monomial({1, 0, 2}, 27);
    TernaryForm u = TernaryForm::monomial({1, 0, 0});
    CHECK(divide_exact(u * disc, u) == disc);
    TernaryForm x2y = TernaryForm::monomial({2, 1, 0});
    CHECK(divide_exact(x2y, TernaryForm::monomial({1, 0, 0})) == TernaryForm::monomial({1, 1, 0}));
    TernaryForm xx_yy = TernaryForm::monomial({2, 0, 0}) + TernaryForm::monomial({0, 2, 0});
    CHECK_THROWS_AS(divide_exact(xx_yy, TernaryForm::monomial({1, 0, 0})), NotDivisible);
}

TEST_CASE("compose is a ring homomorphism on samples") {
    rctest::FormGen gen(505);
    std::uniform_int_distribution<long> dist(-3, 3);
    auto random_ternary = [&](int deg) {
        TernaryForm f(deg);
        for (const auto& e : monomials_of_degree(deg)) f.set(e, Rational(dist(gen.rng())));
        return f;
    };
    for (int trial = 0; trial < 10; ++trial) {
        BinaryForm f0 = gen.form(3), f1 = gen.form(3), f2 = gen.form(3);
        TernaryForm F = random_ternary(2), G = random_ternary(2);
        CHECK(compose(F * G, f0, f1, f2) == compose(F, f0, f1, f2) * compose(G, f0, f1, f2));
        CHECK(compose(F + G, f0, f1, f2) == compose(F, f0, f1, f2) + compose(G, f0, f1, f2));
    }
}

TEST_CASE("primitive positive normalization") {
    BinaryForm f = bf({-2, 0, 4}) * Rational(1, 6);
    CHECK(primitive_positive(f) == bf({1, 0, -2}));
    TernaryForm g = TernaryForm::monomial({1, 0, 1}, Rational(-3, 4)) +
                    TernaryForm::monomial({0, 2, 0}, Rational(3, 2));
    TernaryForm n = primitive_positive(g);
    CHECK(n.coeff({1, 0, 1}) == 1);
    CHECK(n.coeff({0, 2, 0}) == -2);
}
