#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ccsec/binomial.hpp"
#include "ccsec/charclass.hpp"
#include "ccsec/chow.hpp"
#include "ccsec/conjecture_forms.hpp"
#include "ccsec/rational.hpp"

namespace ccsec {

// Generic Hankel matrix shape: entry (i,j) is the variable x_{i+j},
// i = 0..rows-1, j = 0..cols-1, over the ambient index range 0..rows+cols-2.
struct HankelShape {
    int rows = 0;
    int cols = 0;

    HankelShape(int m, int n) : rows(m), cols(n) {
        if (m < 1 || n < 1) throw std::invalid_argument("Hankel shape must be positive");
    }
    int ambient_index_max() const { return rows + cols - 2; }
};

// Exact rank of the Hankel matrix evaluated at the coordinate point e_i: a
// 0/1 matrix with ones on the anti-diagonal a + b = i. Fraction-free integer
// Gaussian elimination.
inline int hankel_rank_at_coordinate_point(const HankelShape& shape, int i) {
    if (i < 0 || i > shape.ambient_index_max())
        throw std::invalid_argument("coordinate index out of range");
    std::vector<std::vector<Int>> m(shape.rows, std::vector<Int>(shape.cols));
    for (int a = 0; a < shape.rows; ++a)
        for (int b = 0; b < shape.cols; ++b)
            if (a + b == i) m[a][b] = 1;
    int rank = 0;
    for (int col = 0; col < shape.cols && rank < shape.rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < shape.rows; ++r)
            if (m[r][col] != 0) { pivot = r; break; }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        for (int r = rank + 1; r < shape.rows; ++r) {
            if (m[r][col] == 0) continue;
            // fraction-free row update: m[r] <- pivot*m[r] - factor*m[rank]
            const Int factor = m[r][col], lead = m[rank][col];
            for (int b2 = col; b2 < shape.cols; ++b2)
                m[r][b2] = lead * m[r][b2] - factor * m[rank][b2];
        }
        ++rank;
    }
    return rank;
}

// (dim, degree) = (2k-1, binom(n-k+1, k)).
inline std::pair<int, Int> secant_basics(int n, int k) {
    if (k < 1 || 2 * k > n) throw std::invalid_argument("secant_basics needs 1 <= k <= n/2");
    return {2 * k - 1, binomial(Int(n - k + 1), k)};
}

// Topological Euler characteristic 2k, certified by the explicit set of
// torus-fixed coordinate points lying on the secant (rank <= k at e_i).
struct EulerCertificate {
    int euler_char = 0;
    std::vector<int> fixed_point_indices;
};

inline EulerCertificate euler_char_secant(int n, int k) {
    if (k < 1 || 2 * k - 1 > n)
        throw std::invalid_argument("euler_char_secant needs 2k-1 <= n");
    const HankelShape shape(k + 1, n - k + 1);
    EulerCertificate cert;
    for (int i = 0; i <= n; ++i)
        if (hankel_rank_at_coordinate_point(shape, i) <= k) cert.fixed_point_indices.push_back(i);
    std::vector<int> expected;
    for (int i = 0; i < k; ++i) expected.push_back(i);
    for (int i = n - k + 1; i <= n; ++i) expected.push_back(i);
    if (cert.fixed_point_indices != expected)
        throw std::logic_error("fixed-point certificate mismatch");
    cert.euler_char = 2 * k;
    return cert;
}

// c_Ma(Sec_r C) = (1+h)^r sum_{j<=r/2} binom(r+1, 2j+1) h^{2j+1} in A_*P^{2r},
// cross-checked against the coefficientwise parity formulas.
inline ChowClass mather_class_secant(int r) {
    if (r < 1) throw std::invalid_argument("mather_class_secant needs r >= 1");
    const int n = 2 * r;
    ChowClass odd(n);
    for (int j = 0; 2 * j + 1 <= std::min(n, r + 1); ++j)
        odd.h_coeff(2 * j + 1) = Rational(binomial(Int(r + 1), 2 * j + 1));
    ChowClass out = ChowClass::one_plus_h_pow(n, r) * odd;

    // parity formulas for the [P^j] coefficients
    for (int j = 0; j <= n; ++j) {
        Int expect = 0;
        if (j % 2 == 0) {
            for (int i = 0; 2 * i + 1 <= r && 2 * (r - i) - j - 1 >= 0; ++i)
                expect += binomial(Int(r), 2 * i + 1) * binomial(Int(r + 1), 2 * (r - i) - j - 1);
        } else {
            for (int i = 0; 2 * i <= r && 2 * (r - i) - j >= 0; ++i)
                expect += binomial(Int(r), 2 * i) * binomial(Int(r + 1), 2 * (r - i) - j);
        }
        if (out.dimension_coeff(j) != Rational(expect))
            throw std::logic_error("Mather class coefficient cross-check failed");
    }
    return out;
}

// Mather class of the dual hypersurface: the doubled Veronese embedding of
// P^r, pushed into A_*(P^{2r})*: sum_j binom(r+1, r-j) 2^j [P^j].
inline ChowClass veronese_dual_mather(int r) {
    if (r < 1) throw std::invalid_argument("veronese_dual_mather needs r >= 1");
    const int n = 2 * r;
    std::vector<Rational> by_dim(n + 1);
    for (int j = 0; j <= r; ++j)
        by_dim[j] = Rational(binomial(Int(r + 1), r - j) * int_pow(Int(2), j));
    return ChowClass::from_dimension_coeffs(n, by_dim);
}

// Projective-duality involution on Mather classes, for a dual of dimension r
// in (P^{2r})*: q(h) -> (-1)^{r+1} (q(-1-h) - q(-1)((1+h)^{2r+1} - h^{2r+1})).
inline ChowClass mather_from_dual(int r, const ChowClass& dual_mather) {
    const int n = 2 * r;
    if (dual_mather.ambient_dim() != n) throw std::invalid_argument("ambient dimension mismatch");
    ChowClass substituted(n);  // q(-1-h) truncated
    Rational q_at_minus1 = 0;
    for (int i = 0; i <= n; ++i) {
        const Rational& alpha = dual_mather.h_coeff(i);
        if (alpha == 0) continue;
        q_at_minus1 += (i % 2 == 0) ? alpha : -alpha;
        for (int m = 0; m <= std::min(i, n); ++m) {
            Rational term = alpha * Rational(binomial(Int(i), m));
            substituted.h_coeff(m) += (i % 2 == 0) ? term : -term;
        }
    }
    // (1+h)^{2r+1} - h^{2r+1} truncated at h^{2r+1} is just (1+h)^{2r+1}
    ChowClass out = substituted - ChowClass::one_plus_h_pow(n, n + 1) * q_at_minus1;
    return (r % 2 == 0) ? out * Rational(-1) : out;
}

// delta_i = sum_{j=i}^{2r-1} (-1)^{j+1} binom(j+1, i+1) cMa_j, with cMa_j the
// [P^j] coefficient of the Mather class. All entries are nonnegative.
inline std::vector<Int> polar_degrees_secant(int r) {
    const int n = 2 * r;
    const ChowClass mather = mather_class_secant(r);
    std::vector<Int> delta(n);
    for (int i = 0; i < n; ++i) {
        Rational acc = 0;
        for (int j = i; j < n; ++j) {
            Rational term = Rational(binomial(Int(j + 1), i + 1)) * mather.dimension_coeff(j);
            acc += (j % 2 == 0) ? -term : term;
        }
        delta[i] = to_integer(acc);
        if (delta[i] < 0) throw std::logic_error("negative polar degree");
    }
    return delta;
}

// (3^{r+1}-1)/2, cross-checked against the polar-degree sum and against the
// alternating sum over the dual Veronese Mather coefficients.
inline Int g_ed_degree_secant(int r) {
    const Int direct = (int_pow(Int(3), r + 1) - 1) / 2;
    Int sum = 0;
    for (const auto& d : polar_degrees_secant(r)) sum += d;
    if (sum != direct) throw std::logic_error("gEDdeg: polar-degree sum mismatch");
    const ChowClass dual = veronese_dual_mather(r);
    Rational alt = 0;
    for (int j = 0; j <= r; ++j) {
        Rational term = dual.dimension_coeff(j) * Rational(int_pow(Int(2), j + 1) - 1);
        alt += ((r + j) % 2 == 0) ? term : -term;
    }
    if (alt != Rational(direct)) throw std::logic_error("gEDdeg: dual alternating sum mismatch");
    return direct;
}

// Topological degree of the gradient map of Sec_r C: the Catalan number C_r.
inline Int grad_degree_secant(int r) {
    if (r < 1) throw std::invalid_argument("grad_degree_secant needs r >= 1");
    return catalan(r);
}

// Euler characteristic of a generic hyperplane section: C_r - 1 + 2r.
inline Int chi_section_secant(int r) {
    if (r < 1) throw std::invalid_argument("chi_section_secant needs r >= 1");
    return catalan(r) - 1 + 2 * r;
}

// (d_0..d_4) = (1, r, r^2, r(r-1)(5r+2)/6, r(r-1)(7r^2-5r-6)/12), integral.
inline std::vector<Int> low_projective_degrees(int r) {
    if (r < 1) throw std::invalid_argument("low_projective_degrees needs r >= 1");
    const Int R(r);
    std::vector<Int> d(5);
    d[0] = 1;
    d[1] = R;
    d[2] = R * R;
    d[3] = to_integer(Rational(R * (R - 1) * (5 * R + 2), 6));
    d[4] = to_integer(Rational(R * (R - 1) * (7 * R * R - 5 * R - 6), 12));
    return d;
}

// (1+h)^{2r+1} - csm_complement(dRow) in A_*P^{2r}.
inline ChowClass csm_secant(int r, const DegreeVector& d_row) {
    if (d_row.ambient_dim != 2 * r)
        throw std::invalid_argument("degree row must have length 2r+1");
    return ChowClass::one_plus_h_pow(2 * r, 2 * r + 1) - csm_complement(d_row);
}

// Gradient-map degree row of Sec_r C predicted by the closed forms; certified
// only for r <= 5, conjectural beyond.
inline DegreeVector secant_degree_row(int r) {
    std::vector<Int> d(2 * r + 1);
    for (int i = 0; i <= 2 * r; ++i) d[i] = closed_form_d(i, r);
    return DegreeVector(2 * r, std::move(d), std::max(r, 1));
}

// Invariants of Sec_k C in P^n; the hypersurface block is filled when n = 2k.
struct SecantInvariants {
    int n = 0;
    int k = 0;
    int dim = 0;
    Int degree;
    int euler_char = 0;
    std::vector<int> fixed_point_indices;
    bool hypersurface = false;
    // hypersurface-only data (n = 2k, r := k)
    ChowClass mather{0};
    std::vector<Int> polar;
    Int g_ed_degree;
    Int grad_degree;
    Int chi_section;
};

inline SecantInvariants secant_invariants(int n, int k) {
    SecantInvariants inv;
    inv.n = n;
    inv.k = k;
    auto [dim, degree] = secant_basics(n, k);
    inv.dim = dim;
    inv.degree = degree;
    const EulerCertificate cert = euler_char_secant(n, k);
    inv.euler_char = cert.euler_char;
    inv.fixed_point_indices = cert.fixed_point_indices;
    inv.hypersurface = (n == 2 * k);
    if (inv.hypersurface) {
        const int r = k;
        inv.mather = mather_class_secant(r);
        inv.polar = polar_degrees_secant(r);
        inv.g_ed_degree = g_ed_degree_secant(r);
        inv.grad_degree = grad_degree_secant(r);
        inv.chi_section = chi_section_secant(r);
    }
    return inv;
}

}  // namespace ccsec
