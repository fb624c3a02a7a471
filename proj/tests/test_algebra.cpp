#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ccsec/binomial.hpp"
#include "ccsec/chow.hpp"
#include "ccsec/poly.hpp"
#include "ccsec/rational.hpp"
#include "ccsec/series.hpp"

using namespace ccsec;

TEST_CASE("binomial polynomial at integer arguments") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(-1, 2) == 1);  // x(x-1)/2 at x = -1
    CHECK(binomial(7, 0) == 1);
    CHECK(binomial(4, -3) == 0);
    CHECK(binomial(-2, 3) == -4);

    for (long a = 0; a <= 30; ++a)
        for (long d = 0; d <= a; ++d)
            CHECK(binomial(a, d) == factorial(a) / (factorial(d) * factorial(a - d)));
    for (long d = 1; d <= 12; ++d)
        for (long a = 0; a < d; ++a) CHECK(binomial(a, d) == 0);
}

TEST_CASE("catalan numbers") {
    CHECK(catalan(0) == 1);
    CHECK(catalan(3) == 5);
    CHECK(catalan(5) == 42);
    CHECK(catalan(10) == 16796);
}

TEST_CASE("rational arithmetic is exact and structural") {
    std::mt19937 rng(57);
    std::uniform_int_distribution<int> num(-40, 40), den(1, 40);
    for (int trial = 0; trial < 500; ++trial) {
        const Rational a(num(rng), den(rng)), b(num(rng), den(rng));
        CHECK((a + b) - b == a);
        if (b != 0) CHECK((a * b) / b == a);
    }
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(to_string(Rational(-6, 4)) == "-3/2");
    CHECK(to_string(Rational(8, 2)) == "4");
    CHECK(parse_rational("-3/2") == Rational(-3, 2));
    CHECK(parse_rational("17") == Rational(17));
    CHECK_THROWS_AS(parse_rational("x/2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
}

TEST_CASE("polynomial basics") {
    const Poly p{1, 0, -2};
    CHECK(p.degree() == 2);
    CHECK(p(Rational(3)) == 1 - 18);
    CHECK(Poly{0, 0, 0}.is_zero());
    CHECK((Poly{1, 1} * Poly{1, -1}) == Poly{1, 0, -1});
    CHECK(Poly{0, 1, 2}.derivative() == Poly{1, 4});
    const Poly q{Rational(1, 2), Rational(-1, 3)};
    CHECK(q.shifted_argument(1) == Poly{Rational(1, 6), Rational(-1, 3)});
}

TEST_CASE("lagrange interpolation") {
    SECTION("constant data") {
        CHECK(lagrange_interpolate({{0, 1}, {1, 1}}) == Poly{1});
    }
    SECTION("reference column polynomials") {
        CHECK(lagrange_interpolate({{0, 0}, {1, 0}, {2, 2}, {3, 9}}) ==
              Poly{0, 0, Rational(-1, 2), Rational(1, 2)});
        CHECK(lagrange_interpolate({{0, 0}, {1, 0}, {2, 4}, {3, 17}}) ==
              Poly{0, Rational(-1, 3), Rational(-1, 2), Rational(5, 6)});
    }
    SECTION("degenerate nodes rejected") {
        CHECK_THROWS_AS(lagrange_interpolate({{1, 2}, {1, 3}}), std::invalid_argument);
        CHECK_THROWS_AS(lagrange_interpolate({}), std::invalid_argument);
    }
    SECTION("passes through every node") {
        std::mt19937 rng(91);
        std::uniform_int_distribution<int> val(-9, 9);
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<std::pair<Rational, Rational>> pts;
            const int n = 1 + trial % 8;
            for (int x = 0; x < n; ++x) pts.emplace_back(Rational(x), Rational(val(rng)));
            const Poly p = lagrange_interpolate(pts);
            CHECK(p.degree() <= n - 1);
            for (const auto& [x, y] : pts) CHECK(p(x) == y);
        }
    }
}

TEST_CASE("one-variable series operations") {
    SECTION("geometric inverse") {
        Series1 one_minus_x(3);
        one_minus_x.at(0) = 1;
        one_minus_x.at(1) = -1;
        const Series1 inv = one_minus_x.unit_inverse();
        for (long i = 0; i <= 3; ++i) CHECK(inv[i] == 1);
    }
    SECTION("sqrt of 1-4z") {
        Series1 s(3);
        s.at(0) = 1;
        s.at(1) = -4;
        const Series1 root = s.sqrt_of_unit();
        CHECK(root[0] == 1);
        CHECK(root[1] == -2);
        CHECK(root[2] == -2);
        CHECK(root[3] == -4);
        const Series1 sq = root * root;
        for (long i = 0; i <= 3; ++i) CHECK(sq[i] == s[i]);
    }
    SECTION("Catalan generating function") {
        Series1 s(5);
        s.at(0) = 1;
        s.at(1) = -4;
        Series1 top = Series1(5) - s.sqrt_of_unit();
        top.at(0) += 1;  // 1 - sqrt(1-4z)
        const Series1 cat = top.divide_by_power(1) * Rational(1, 2);
        for (long k = 0; k <= 4; ++k) CHECK(cat[k] == Rational(catalan(k)));
    }
    SECTION("sqrt squares back for random units") {
        std::mt19937 rng(7);
        std::uniform_int_distribution<int> val(-5, 5);
        Series1 s(10);
        s.at(0) = 1;
        for (long i = 1; i <= 10; ++i) s.at(i) = Rational(val(rng), 1 + i % 3);
        const Series1 root = s.sqrt_of_unit();
        const Series1 sq = root * root;
        for (long i = 0; i <= 10; ++i) CHECK(sq[i] == s[i]);
    }
    SECTION("error paths") {
        Series1 z(2);  // zero constant term
        CHECK_THROWS_AS(z.unit_inverse(), std::domain_error);
        Series1 two(2);
        two.at(0) = 2;
        CHECK_THROWS_AS(two.sqrt_of_unit(), std::domain_error);
        Series1 x(2);
        x.at(1) = 1;
        CHECK_THROWS_AS(x.divide_by_power(2), std::logic_error);
    }
    SECTION("orders take the minimum") {
        Series1 a(5), b(3);
        a.at(0) = 1;
        b.at(0) = 1;
        CHECK((a * b).order() == 3);
        CHECK((a + b).order() == 3);
    }
}

TEST_CASE("two-variable series operations") {
    SECTION("inverse and sqrt round trips") {
        std::mt19937 rng(13);
        std::uniform_int_distribution<int> val(-4, 4);
        Series2 s(6, 6);
        s.at(0, 0) = 1;
        for (long a = 0; a <= 6; ++a)
            for (long b = 0; b <= 6; ++b)
                if (a + b > 0) s.at(a, b) = Rational(val(rng));
        const Series2 inv = s.unit_inverse();
        const Series2 prod = s * inv;
        const Series2 root = s.sqrt_of_unit();
        const Series2 sq = root * root;
        for (long a = 0; a <= 6; ++a)
            for (long b = 0; b <= 6; ++b) {
                CHECK(prod.at(a, b) == (a == 0 && b == 0 ? Rational(1) : Rational(0)));
                CHECK(sq.at(a, b) == s.at(a, b));
            }
    }
    SECTION("compose expands a univariate series along a zero-constant target") {
        // 1/(1-z) at z = xy: coefficient of x^a y^b is 1 exactly when a == b
        Series1 geo(6);
        for (long i = 0; i <= 6; ++i) geo.at(i) = 1;
        Series2 xy(4, 4);
        xy.at(1, 1) = 1;
        const Series2 comp = Series2::compose(geo, xy);
        for (long a = 0; a <= 4; ++a)
            for (long b = 0; b <= 4; ++b)
                CHECK(comp.at(a, b) == (a == b ? Rational(1) : Rational(0)));
    }
    SECTION("monomial division checks exactness") {
        Series2 s(3, 3);
        s.at(0, 1) = 1;
        CHECK_THROWS_AS(s.divide_by_monomial(1, 1), std::logic_error);
        Series2 ok(3, 3);
        ok.at(1, 1) = 7;
        const Series2 q = ok.divide_by_monomial(1, 1);
        CHECK(q.at(0, 0) == 7);
        CHECK(q.order_x() == 2);
    }
}

TEST_CASE("chow classes") {
    SECTION("generic hyperplane section operator") {
        const ChowClass c(4, {0, 3, 6, 8, 4});
        const ChowClass sec = c.section_operator();
        CHECK(sec == ChowClass(4, {0, 0, 3, 3, 5}));
    }
    SECTION("tangent section of the cubic surface") {
        const ChowClass c(3, {0, 3, 3, 9});
        CHECK(c.section_operator() == ChowClass(3, {0, 0, 3, 0}));
    }
    SECTION("unit and ring laws") {
        const ChowClass one(4, {1, 0, 0, 0, 0});
        std::mt19937 rng(3);
        std::uniform_int_distribution<int> val(-6, 6);
        for (int trial = 0; trial < 30; ++trial) {
            std::vector<Rational> av(5), bv(5), cv(5);
            for (int i = 0; i < 5; ++i) {
                av[i] = Rational(val(rng));
                bv[i] = Rational(val(rng));
                cv[i] = Rational(val(rng));
            }
            const ChowClass a(4, av), b(4, bv), c(4, cv);
            CHECK(a * one == a);
            CHECK(a * b == b * a);
            CHECK((a * b) * c == a * (b * c));
        }
        const ChowClass h3 = ChowClass(4, {0, 0, 0, 1, 0});
        CHECK(h3 * h3 == ChowClass(4));  // h^6 = 0
    }
    SECTION("ambient mismatch") {
        CHECK_THROWS_AS(ChowClass(3) * ChowClass(4), std::invalid_argument);
    }
    SECTION("dimension-indexed accessors") {
        const ChowClass c = ChowClass::from_dimension_coeffs(4, {1, 2, 4, 2, 1});
        CHECK(c.h_coeff(4) == 1);
        CHECK(c.dimension_coeff(1) == 2);
        CHECK(c.integral() == 1);
    }
}

TEST_CASE("involution p -> (t p(-t-1) + p(0))/(t+1)") {
    CHECK(involution_I(Poly{1}) == Poly{1});
    CHECK(involution_I(Poly{7}) == Poly{7});

    const Poly p{3, 6, 8, 4};
    CHECK(involution_I(involution_I(p)) == p);

    // dimension-indexed coefficients of the cubic-hypersurface CSM class and
    // the alternating section Euler characteristics exchange under I
    const Poly gamma{4, 8, 6, 3};
    const Poly chi = involution_I(gamma);
    CHECK(chi == Poly{4, -5, 0, -3});
    CHECK(involution_I(chi) == gamma);

    std::mt19937 rng(19);
    std::uniform_int_distribution<int> val(-9, 9);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Rational> cs(1 + trial % 21);
        for (auto& c : cs) c = Rational(val(rng));
        const Poly q(cs);
        CHECK(involution_I(involution_I(q)) == q);
    }
}
