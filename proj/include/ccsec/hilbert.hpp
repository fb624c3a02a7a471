#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ccsec/binomial.hpp"
#include "ccsec/poly.hpp"
#include "ccsec/rational.hpp"

namespace ccsec {

// Hilbert series numerator/(1-t)^denominator_power, with denominator_power the
// Krull dimension of the coordinate ring (projective dimension + 1) when the
// series is stored in reduced form (numerator(1) != 0).
struct HilbertSeries {
    Poly numerator;
    int denominator_power = 0;

    bool reduced() const { return numerator(1) != 0; }

    // Coefficient of t^m in the expansion.
    Rational coefficient(long m) const {
        Rational acc = 0;
        for (long j = 0; j <= numerator.degree() && j <= m; ++j)
            acc += numerator[static_cast<std::size_t>(j)] *
                   Rational(binomial(Int(m - j + denominator_power - 1), denominator_power - 1));
        return acc;
    }

    // Series multiplied by (1-t): the series of a generic hyperplane section
    // when the section is proper.
    HilbertSeries hyperplane_section() const {
        if (denominator_power < 1) throw std::domain_error("no denominator factor to absorb");
        return {numerator, denominator_power - 1};
    }

    bool operator==(const HilbertSeries& o) const = default;
};

// q_{k,c}(t) = sum_{j=0}^{k} binom(c+j, j) t^j, the Hilbert numerator of the
// variety of (k+1)-minors of a generic (k+1+c) x (k+1) matrix; full series is
// q_{k,c}/(1-t)^{k(k+2+c)}.
inline Poly maximal_minor_numerator(int k, int c) {
    if (k < 1 || c < 0) throw std::invalid_argument("maximal_minor_numerator needs k >= 1, c >= 0");
    std::vector<Rational> q(k + 1);
    for (int j = 0; j <= k; ++j) q[j] = Rational(binomial(Int(c + j), j));
    return Poly(std::move(q));
}

namespace detail {

inline Poly poly_matrix_det(const std::vector<std::vector<Poly>>& m) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    // cofactor expansion along the first column; fraction-free by construction
    Poly det;
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i][0].is_zero()) continue;
        std::vector<std::vector<Poly>> minor;
        minor.reserve(n - 1);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == i) continue;
            minor.emplace_back(m[r].begin() + 1, m[r].end());
        }
        Poly term = m[i][0] * poly_matrix_det(minor);
        det += (i % 2 == 0) ? term : -term;
    }
    return det;
}

}  // namespace detail

// Determinant of the k x k matrix with (i,j) entry
// sum_l binom(m-i, l) binom(n_cols-j, l+i-j) t^l (1-indexed i, j): the Hilbert
// numerator of the variety of (k+1)-minors of a generic m x n_cols matrix,
// over (1-t)^{k(m+n_cols-k)}.
inline Poly abhyankar_numerator(int m, int n_cols, int k) {
    if (k < 1 || k > std::min(m, n_cols))
        throw std::invalid_argument("abhyankar_numerator needs 1 <= k <= min(m, n_cols)");
    std::vector<std::vector<Poly>> mat(k, std::vector<Poly>(k));
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j) {
            std::vector<Rational> entry;
            for (int l = 0; l <= m - i; ++l)
                entry.push_back(Rational(binomial(Int(m - i), l) * binomial(Int(n_cols - j), l + i - j)));
            mat[i - 1][j - 1] = Poly(std::move(entry));
        }
    return detail::poly_matrix_det(mat);
}

// F_{s,c}(t) = 1 - s binom(s+c, c) sum_{q=0}^{c} (-1)^q binom(c,q) t^{q+s}/(q+s):
// the Hilbert numerator of the variety of s-minors of a generic s x (s+c)
// matrix, over (1-t)^{s(s+c)}. All divisions are exact; the result has integer
// coefficients and satisfies (1-t)^{c+1} q_{s-1,c}(t) = F_{s,c}(t).
inline Poly eagon_northcott_numerator(int s, int c) {
    if (s < 1 || c < 0) throw std::invalid_argument("eagon_northcott_numerator needs s >= 1, c >= 0");
    std::vector<Rational> f(s + c + 1);
    f[0] = 1;
    const Rational lead = Rational(Int(s) * binomial(Int(s + c), c));
    for (int q = 0; q <= c; ++q) {
        Rational term = lead * Rational(binomial(Int(c), q)) / Rational(q + s);
        f[q + s] -= (q % 2 == 0) ? term : -term;
    }
    Poly out(std::move(f));
    for (long j = 0; j <= out.degree(); ++j)
        if (!is_integer(out[static_cast<std::size_t>(j)]))
            throw std::logic_error("eagon_northcott_numerator: inexact division");
    return out;
}

// Hilbert series of the secant of k points of a rational normal curve in P^n:
// numerator sum_{j=0}^{k} binom(n-2k+j, j) t^j over (1-t)^{2k}.
inline HilbertSeries secant_hilbert_series(int n, int k) {
    if (k < 1 || 2 * k > n) throw std::invalid_argument("secant_hilbert_series needs 1 <= k <= n/2");
    std::vector<Rational> q(k + 1);
    for (int j = 0; j <= k; ++j) q[j] = Rational(binomial(Int(n - 2 * k + j), j));
    return {Poly(std::move(q)), 2 * k};
}

// Hilbert polynomial written in the basis P_i(t) = binom(t+i, i); the top
// coefficient equals the variety's degree.
struct HilbertPolynomial {
    std::vector<Rational> coeffs;  // a_0..a_d

    Rational operator()(const Rational& t) const {
        Rational acc = 0;
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            // binom(t+i, i) as a rational value
            Rational b = 1;
            for (std::size_t j = 1; j <= i; ++j) b *= (t + Rational(j)) / Rational(j);
            acc += coeffs[i] * b;
        }
        return acc;
    }

    bool operator==(const HilbertPolynomial& o) const = default;
};

// a_{d-i} = (-1)^i q^{(i)}(1)/i! for the reduced series q(t)/(1-t)^{d+1}.
inline HilbertPolynomial hilbert_polynomial(const HilbertSeries& hs) {
    if (!hs.reduced()) throw std::invalid_argument("series not in reduced form");
    const int d = hs.denominator_power - 1;
    if (d < 0) throw std::invalid_argument("denominator power must be positive");
    std::vector<Rational> a(d + 1);
    Poly q = hs.numerator;
    for (int i = 0; i <= d; ++i) {
        Rational v = q(1) / Rational(factorial(i));
        a[d - i] = (i % 2 == 0) ? v : -v;
        q = q.derivative();
    }
    return {std::move(a)};
}

// Genus of the curve cut from the (r-1)-secant of a rational normal curve in
// P^{2r} by a generic P^4, computed as q'(1) - q(1) + 1 from the Hilbert
// numerator. Matches the closed form (r-1)(r-2)(3r^2+11r+12)/24.
inline Int section_curve_genus(int r) {
    if (r < 2) throw std::invalid_argument("section_curve_genus needs r >= 2");
    const Poly q = secant_hilbert_series(2 * r, r - 1).numerator;
    return to_integer(q.derivative()(1) - q(1) + 1);
}

inline Int section_curve_genus_closed_form(int r) {
    if (r < 2) throw std::invalid_argument("section_curve_genus needs r >= 2");
    Rational v = Rational(Int(r - 1) * (r - 2) * (3 * Int(r) * r + 11 * r + 12), 24);
    return to_integer(v);
}

}  // namespace ccsec
