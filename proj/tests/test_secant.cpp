#include <catch2/catch_amalgamated.hpp>

#include "ccsec/secant.hpp"

using namespace ccsec;

TEST_CASE("dimension and degree") {
    CHECK(secant_basics(4, 2) == std::pair<int, Int>{3, 3});
    CHECK(secant_basics(7, 1) == std::pair<int, Int>{1, 7});  // the curve itself
    for (int r = 2; r <= 10; ++r)
        CHECK(secant_basics(2 * r, r - 1).second == binomial(Int(r + 2), 3));
    CHECK_THROWS_AS(secant_basics(4, 3), std::invalid_argument);
}

TEST_CASE("hankel rank at coordinate points") {
    const HankelShape h33(3, 3);
    CHECK(hankel_rank_at_coordinate_point(h33, 2) == 3);
    CHECK(hankel_rank_at_coordinate_point(h33, 0) == 1);
    CHECK(hankel_rank_at_coordinate_point(h33, 4) == 1);
    for (int n = 2; n <= 10; ++n)
        for (int k = 1; 2 * k <= n; ++k)
            CHECK(hankel_rank_at_coordinate_point(HankelShape(k + 1, n - k + 1), 0) == 1);
    CHECK_THROWS_AS(hankel_rank_at_coordinate_point(h33, 5), std::invalid_argument);
}

TEST_CASE("euler characteristic via fixed points") {
    SECTION("secant of the quartic curve") {
        const EulerCertificate cert = euler_char_secant(4, 2);
        CHECK(cert.euler_char == 4);
        CHECK(cert.fixed_point_indices == std::vector<int>{0, 1, 3, 4});
    }
    SECTION("the curve itself") {
        for (int n = 2; n <= 10; ++n) CHECK(euler_char_secant(n, 1).euler_char == 2);
    }
    SECTION("larger brute-force case") {
        const EulerCertificate cert = euler_char_secant(10, 3);
        CHECK(cert.euler_char == 6);
        CHECK(cert.fixed_point_indices == std::vector<int>{0, 1, 2, 8, 9, 10});
    }
    SECTION("all shapes up to ambient 16, hypersurface case included") {
        for (int n = 2; n <= 16; ++n)
            for (int k = 1; 2 * k <= n; ++k)
                CHECK(euler_char_secant(n, k).euler_char == 2 * k);
    }
    SECTION("secant filling the whole space") {
        // n = 2k-1: every coordinate point lies on the secant
        const EulerCertificate cert = euler_char_secant(3, 2);
        CHECK(cert.euler_char == 4);
        CHECK(cert.fixed_point_indices == std::vector<int>{0, 1, 2, 3});
    }
    CHECK_THROWS_AS(euler_char_secant(4, 3), std::invalid_argument);
}

TEST_CASE("mather classes of the secant hypersurfaces") {
    CHECK(mather_class_secant(2) == ChowClass(4, {0, 3, 6, 4, 2}));
    CHECK(mather_class_secant(3) == ChowClass(6, {0, 4, 12, 16, 16, 12, 4}));
    CHECK(mather_class_secant(4) == ChowClass(8, {0, 5, 20, 40, 60, 66, 44, 16, 4}));
    SECTION("all coefficients positive") {
        for (int r = 1; r <= 30; ++r) {
            const ChowClass m = mather_class_secant(r);  // parity formulas cross-checked inside
            for (int j = 1; j <= 2 * r; ++j) CHECK(m.h_coeff(j) > 0);
        }
    }
}

TEST_CASE("mather class of the dual and the duality involution") {
    SECTION("doubled Veronese classes") {
        const ChowClass v2 = veronese_dual_mather(2);
        CHECK(v2.dimension_coeff(0) == 3);
        CHECK(v2.dimension_coeff(1) == 6);
        CHECK(v2.dimension_coeff(2) == 4);
        const ChowClass v1 = veronese_dual_mather(1);
        CHECK(v1.dimension_coeff(0) == 2);
        CHECK(v1.dimension_coeff(1) == 2);
    }
    SECTION("involution reproduces the direct formula") {
        for (int r = 1; r <= 6; ++r)
            CHECK(mather_from_dual(r, veronese_dual_mather(r)) == mather_class_secant(r));
    }
}

TEST_CASE("polar degrees") {
    CHECK(polar_degrees_secant(2) == std::vector<Int>{0, 4, 6, 3});
    CHECK(polar_degrees_secant(3) == std::vector<Int>{0, 0, 8, 16, 12, 4});
    CHECK(polar_degrees_secant(4) == std::vector<Int>{0, 0, 0, 16, 40, 40, 20, 5});
    SECTION("nonnegative everywhere") {
        for (int r = 1; r <= 12; ++r)
            for (const auto& d : polar_degrees_secant(r)) CHECK(d >= 0);
    }
}

TEST_CASE("generic euclidean distance degree") {
    CHECK(g_ed_degree_secant(2) == 13);
    CHECK(g_ed_degree_secant(3) == 40);
    CHECK(g_ed_degree_secant(1) == 4);
    SECTION("closed form equals the polar sum up to r = 12") {
        for (int r = 1; r <= 12; ++r) {
            Int sum = 0;
            for (const auto& d : polar_degrees_secant(r)) sum += d;
            CHECK(g_ed_degree_secant(r) == sum);
            CHECK(sum == (int_pow(Int(3), r + 1) - 1) / 2);
        }
    }
    SECTION("binomial identity over the dual class") {
        for (int r = 1; r <= 30; ++r) {
            Int alt = 0;
            for (int j = 0; j <= r; ++j) {
                const Int term = binomial(Int(r + 1), r - j) * int_pow(Int(2), j) *
                                 (int_pow(Int(2), j + 1) - 1);
                alt += ((r + j) % 2 == 0) ? term : -term;
            }
            CHECK(alt == (int_pow(Int(3), r + 1) - 1) / 2);
        }
    }
}

TEST_CASE("gradient-map degree and section euler characteristic") {
    CHECK(grad_degree_secant(2) == 2);
    CHECK(chi_section_secant(2) == 5);
    CHECK(grad_degree_secant(5) == 42);
    CHECK(chi_section_secant(5) == 51);
    CHECK(grad_degree_secant(1) == 1);
    CHECK(chi_section_secant(1) == 2);
}

TEST_CASE("low projective degrees") {
    CHECK(low_projective_degrees(3) == std::vector<Int>{1, 3, 9, 17, 21});
    CHECK(low_projective_degrees(1) == std::vector<Int>{1, 1, 1, 0, 0});
    CHECK(low_projective_degrees(4) == std::vector<Int>{1, 4, 16, 44, 86});
    SECTION("agree with the column closed form") {
        for (int r = 1; r <= 30; ++r) {
            const auto low = low_projective_degrees(r);
            for (long i = 0; i < 5; ++i) CHECK(low[i] == closed_form_d(i, r));
        }
    }
}

TEST_CASE("csm of the secant hypersurface") {
    CHECK(csm_secant(2, DegreeVector(4, {1, 2, 4, 4, 2}, 2)) == ChowClass(4, {0, 3, 6, 8, 4}));
    SECTION("degree is the euler characteristic, coefficients positive") {
        for (int r = 1; r <= 10; ++r) {
            const ChowClass cs = csm_secant(r, secant_degree_row(r));
            CHECK(cs.integral() == Rational(2 * r));
            for (int j = 1; j <= 2 * r; ++j) CHECK(cs.h_coeff(j) > 0);
        }
    }
    CHECK_THROWS_AS(csm_secant(2, DegreeVector(2, {1, 2, 4}, 2)), std::invalid_argument);
}

TEST_CASE("assembled invariants") {
    const SecantInvariants inv = secant_invariants(4, 2);
    CHECK(inv.dim == 3);
    CHECK(inv.degree == 3);
    CHECK(inv.euler_char == 4);
    CHECK(inv.hypersurface);
    CHECK(inv.grad_degree == 2);
    CHECK(inv.g_ed_degree == 13);
    CHECK(inv.chi_section == 5);
    CHECK(inv.polar == std::vector<Int>{0, 4, 6, 3});

    const SecantInvariants curve = secant_invariants(9, 2);
    CHECK_FALSE(curve.hypersurface);
    CHECK(curve.dim == 3);
    CHECK(curve.euler_char == 4);
}
