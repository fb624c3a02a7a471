#pragma once

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ccsec/binomial.hpp"
#include "ccsec/conjecture_forms.hpp"
#include "ccsec/poly.hpp"
#include "ccsec/rational.hpp"
#include "ccsec/series.hpp"

namespace ccsec {

// c_i = sum_{j=0}^{2r-i} (-1)^j binom(2r-j, i) d_j, rows of length 2r+1.
inline std::vector<Int> aluffi_c_from_d(int r, const std::vector<Int>& d_row) {
    const int n = 2 * r;
    if (d_row.size() != static_cast<std::size_t>(n + 1))
        throw std::invalid_argument("row must have length 2r+1");
    std::vector<Int> c(n + 1);
    for (int i = 0; i <= n; ++i) {
        Int acc = 0;
        for (int j = 0; j <= n - i; ++j) {
            Int term = binomial(Int(n - j), i) * d_row[j];
            acc += (j % 2 == 0) ? term : -term;
        }
        c[i] = acc;
    }
    return c;
}

// d_i = sum_{j=2r-i}^{2r} (-1)^j binom(j, 2r-i) c_j; inverse of the above.
inline std::vector<Int> aluffi_d_from_c(int r, const std::vector<Int>& c_row) {
    const int n = 2 * r;
    if (c_row.size() != static_cast<std::size_t>(n + 1))
        throw std::invalid_argument("row must have length 2r+1");
    std::vector<Int> d(n + 1);
    for (int i = 0; i <= n; ++i) {
        Int acc = 0;
        for (int j = n - i; j <= n; ++j) {
            Int term = binomial(Int(j), n - i) * c_row[j];
            acc += (j % 2 == 0) ? term : -term;
        }
        d[i] = acc;
    }
    return d;
}

// The paired matrices c_i(r), d_i(r) for r = 0..rmax (row r holds indices
// 0..2r; everything beyond is zero) and the interpolated column polynomials.
struct InvariantTable {
    int rmax = 0;
    std::vector<std::vector<Int>> c;
    std::vector<std::vector<Int>> d;
    std::vector<Poly> polc;
    std::vector<Poly> pold;
};

// The staged procedure: step r inherits columns 0..r-1 from their column
// polynomials evaluated at r, fills c_{r+1}(r)..c_{2r}(r) from the known
// d-values, solves c_r(r) from the alternating sum against the Catalan
// number, recovers the d-row, then interpolates column r at abscissae 0..r.
// Every entry must come out an integer; a non-integral value means the
// defining conditions have become inconsistent.
inline InvariantTable run_algorithm(int rmax) {
    if (rmax < 0) throw std::invalid_argument("run_algorithm needs rmax >= 0");
    InvariantTable t;
    t.rmax = rmax;
    t.c.assign(rmax + 1, {});
    t.d.assign(rmax + 1, {});
    t.polc.assign(rmax + 1, Poly{});
    t.pold.assign(rmax + 1, Poly{});
    t.c[0] = {Int(1)};
    t.d[0] = {Int(1)};
    t.polc[0] = Poly{Rational(1)};
    t.pold[0] = Poly{Rational(1)};

    const auto as_table_int = [](const Rational& v) {
        if (!is_integer(v)) throw std::logic_error("uniqueness violation: non-integral table entry");
        return numerator(v);
    };

    for (int r = 1; r <= rmax; ++r) {
        const int n = 2 * r;
        t.c[r].assign(n + 1, Int(0));
        t.d[r].assign(n + 1, Int(0));
        for (int i = 0; i < r; ++i) {
            t.c[r][i] = as_table_int(t.polc[i](Rational(r)));
            t.d[r][i] = as_table_int(t.pold[i](Rational(r)));
        }
        for (int i = 0; i < r; ++i) {
            Int acc = 0;
            for (int j = 0; j <= i; ++j) {
                Int term = binomial(Int(n - j), n - i) * t.d[r][j];
                acc += (j % 2 == 0) ? term : -term;
            }
            t.c[r][n - i] = acc;
        }
        Int s = 0;
        for (int j = 0; j <= n; ++j) {
            if (j == r) continue;
            s += (j % 2 == 0) ? t.c[r][j] : -t.c[r][j];
        }
        Int cr = catalan(r) - s;
        t.c[r][r] = (r % 2 == 0) ? cr : -cr;
        for (int i = r; i <= n; ++i) {
            Int acc = 0;
            for (int j = n - i; j <= n; ++j) {
                Int term = binomial(Int(j), n - i) * t.c[r][j];
                acc += (j % 2 == 0) ? term : -term;
            }
            t.d[r][i] = acc;
        }
        std::vector<std::pair<Rational, Rational>> pc, pd;
        for (int row = 0; row <= r; ++row) {
            pc.emplace_back(Rational(row), Rational(r <= 2 * row ? t.c[row][r] : Int(0)));
            pd.emplace_back(Rational(row), Rational(r <= 2 * row ? t.d[row][r] : Int(0)));
        }
        t.polc[r] = lagrange_interpolate(pc);
        t.pold[r] = lagrange_interpolate(pd);
    }
    return t;
}

namespace detail {

// 4xy(1+y)/(1-x) route: (1 - sqrt(1-u))/(2xy(1+y)).
inline Series2 generating_g_sqrt(long ox, long oy) {
    const long px = ox + 1, py = oy + 1;
    Series2 one_minus_x(px, py);
    one_minus_x.at(0, 0) = 1;
    one_minus_x.at(1, 0) = -1;
    const Series2 inv = one_minus_x.unit_inverse();
    Series2 u(px, py);
    for (long a = 0; a + 1 <= px; ++a)
        for (long b = 0; b <= py; ++b) {
            if (inv.at(a, b) == 0) continue;
            if (b + 1 <= py) u.at(a + 1, b + 1) += 4 * inv.at(a, b);
            if (b + 2 <= py) u.at(a + 1, b + 2) += 4 * inv.at(a, b);
        }
    Series2 radicand = Series2::constant(1, px, py) - u;
    Series2 top = Series2::constant(1, px, py) - radicand.sqrt_of_unit();
    Series2 shifted = top.divide_by_monomial(1, 1);  // orders (ox, oy)
    Series2 two_one_plus_y(ox, oy);
    two_one_plus_y.at(0, 0) = 2;
    if (oy >= 1) two_one_plus_y.at(0, 1) = 2;
    return shifted * two_one_plus_y.unit_inverse();
}

// Catalan route: sum_k C_k x^k y^k (1+y)^k / (1-x)^{k+1}.
inline Series2 generating_g_catalan(long ox, long oy) {
    Series2 geom(ox, oy);  // 1/(1-x)
    for (long a = 0; a <= ox; ++a) geom.at(a, 0) = 1;
    Series2 step(ox, oy);  // x y (1+y) / (1-x)
    for (long a = 1; a <= ox; ++a)
        for (long b = 0; b <= oy; ++b) {
            if (geom.at(a - 1, b) == 0) continue;
            if (b + 1 <= oy) step.at(a, b + 1) += geom.at(a - 1, b);
            if (b + 2 <= oy) step.at(a, b + 2) += geom.at(a - 1, b);
        }
    Series2 total(ox, oy), term = geom;
    for (long k = 0;; ++k) {
        total = total + term * Rational(catalan(k));
        if (k >= std::min(ox, oy)) break;
        term = term * step;
    }
    return total;
}

// -4xy/(1-x(1+y)^2) route: (1 - sqrt(1-v))/(-2xy).
inline Series2 generating_f_sqrt(long ox, long oy) {
    const long px = ox + 1, py = oy + 1;
    Series2 den(px, py);
    den.at(0, 0) = 1;
    den.at(1, 0) = -1;
    if (py >= 1) den.at(1, 1) = -2;
    if (py >= 2) den.at(1, 2) = -1;
    const Series2 inv = den.unit_inverse();
    Series2 v(px, py);
    for (long a = 0; a + 1 <= px; ++a)
        for (long b = 0; b + 1 <= py; ++b)
            if (inv.at(a, b) != 0) v.at(a + 1, b + 1) -= 4 * inv.at(a, b);
    Series2 radicand = Series2::constant(1, px, py) - v;
    Series2 top = Series2::constant(1, px, py) - radicand.sqrt_of_unit();
    return top.divide_by_monomial(1, 1) * Rational(-1, 2);
}

// Coefficient grid straight from a closed form.
template <typename F>
Series2 grid_from(F&& coeff, long ox, long oy) {
    Series2 s(ox, oy);
    for (long a = 0; a <= ox; ++a)
        for (long b = 0; b <= oy; ++b) s.at(a, b) = Rational(coeff(b, a));
    return s;
}

}  // namespace detail

// Generating function of the d-table: [x^r y^i] g = d_i(r). Expanded both via
// the Catalan summation and via the algebraic square-root form; any
// disagreement is an internal bug.
inline Series2 generating_g(long order_x, long order_y) {
    Series2 a = detail::generating_g_catalan(order_x, order_y);
    Series2 b = detail::generating_g_sqrt(order_x, order_y);
    for (long r = 0; r <= order_x; ++r)
        for (long i = 0; i <= order_y; ++i)
            if (a.at(r, i) != b.at(r, i))
                throw std::logic_error("generating_g: route disagreement");
    return a;
}

// Generating function of the c-table: [x^r y^i] f = c_i(r). Expanded via the
// alternating Catalan coefficient formula and via the square-root form.
inline Series2 generating_f(long order_x, long order_y) {
    Series2 a = detail::grid_from([](long i, long r) { return alt_form_c(i, r); }, order_x, order_y);
    Series2 b = detail::generating_f_sqrt(order_x, order_y);
    for (long r = 0; r <= order_x; ++r)
        for (long i = 0; i <= order_y; ++i)
            if (a.at(r, i) != b.at(r, i))
                throw std::logic_error("generating_f: route disagreement");
    return a;
}

// p_i(x) = sum_r d_i(r) x^r, truncated at x^rmax.
inline Series1 p_series(long i, long rmax) {
    Series1 p(rmax);
    for (long r = 0; r <= rmax; ++r) p.at(r) = Rational(closed_form_d(i, r));
    return p;
}

// q_i(x) = (1-x)^{i+1} p_i(x) / x^{floor((i+1)/2)}: a polynomial of degree
// <= floor(i/2). The division must be exact and the tail must vanish.
inline Poly q_poly(long i) {
    if (i < 0) throw std::invalid_argument("q_poly needs i >= 0");
    const long pad = i + 4;
    std::vector<Rational> prod(pad + 1);
    for (long m = 0; m <= pad; ++m) {
        Rational acc = 0;
        for (long j = 0; j <= std::min(m, i + 1); ++j) {
            Rational term = Rational(binomial(Int(i + 1), j) * closed_form_d(i, m - j));
            acc += (j % 2 == 0) ? term : -term;
        }
        prod[m] = acc;
    }
    for (long m = i + 1; m <= pad; ++m)
        if (prod[m] != 0) throw std::logic_error("q_poly: series tail does not terminate");
    const long shift = (i + 1) / 2;
    for (long m = 0; m < shift; ++m)
        if (prod[m] != 0) throw std::logic_error("q_poly: inexact division by x-power");
    Poly q(std::vector<Rational>(prod.begin() + shift, prod.begin() + i + 1));
    if (q.degree() > i / 2) throw std::logic_error("q_poly: degree bound violated");
    return q;
}

// The coefficient list of q_n read from the highest power down equals
// (T(n,0), T(n,1), ...).
inline bool kl_reversal_check(long n) {
    const Poly q = q_poly(n);
    const long half = n / 2;
    for (long k = 0; k <= half; ++k)
        if (q[static_cast<std::size_t>(half - k)] != Rational(dyck_T(n, k))) return false;
    return true;
}

struct PropertyFailure {
    int r = 0;
    long i = -1;  // -1 when the check is row-global
    std::string what;
};

struct PropertyReport {
    std::vector<PropertyFailure> failures;
    bool ok() const { return failures.empty(); }
};

// Per-row checks: symmetry, positivity (including the strict binomial
// domination of the c-row), d-row log-concavity with no internal zeros, the
// alternating-sum identities, and the Narayana parity split of the c-row.
inline PropertyReport property_suite(const InvariantTable& table) {
    PropertyReport rep;
    const auto fail = [&rep](int r, long i, std::string what) {
        rep.failures.push_back({r, i, std::move(what)});
    };
    for (int r = 0; r <= table.rmax; ++r) {
        const int n = 2 * r;
        const auto& c = table.c[r];
        const auto& d = table.d[r];
        for (int i = 0; i <= n; ++i) {
            if (c[i] != c[n - i]) fail(r, i, "symmetry");
            if (c[i] <= 0) fail(r, i, "c positivity");
            // binomial domination: strict below the top, exactly zero at i = 2r
            const Int margin = binomial(Int(n + 1), n - i) - c[i];
            if (i < n ? margin <= 0 : margin != 0) fail(r, i, "binomial domination");
            // ceiling variant, strict everywhere
            if (r >= 1 && binomial(Int(n + 1), n - i) <= binomial(Int(r), i / 2) * binomial(Int(r), (i + 2) / 2))
                fail(r, i, "binomial domination (ceiling form)");
        }
        for (int i = 0; i <= n; ++i)
            if (d[i] <= 0) fail(r, i, "d internal zero");
        for (int i = 1; i < n; ++i)
            if (d[i - 1] * d[i + 1] > d[i] * d[i]) fail(r, i, "log-concavity");
        Int alt_c = 0, alt_d = 0;
        for (int i = 0; i <= n; ++i) {
            alt_c += (i % 2 == 0) ? c[i] : -c[i];
            alt_d += (i % 2 == 0) ? d[i] : -d[i];
        }
        if (alt_c != catalan(r)) fail(r, -1, "alternating c-sum vs Catalan");
        if (alt_d != 1 || c[0] != 1) fail(r, -1, "alternating d-sum vs Euler characteristic");
        for (int a = 0; 2 * a <= n; ++a)
            if (c[2 * a] != binomial(Int(r), a) * binomial(Int(r), a))
                fail(r, 2 * a, "even split");
        for (int a = 1; 2 * a - 1 <= n; ++a) {
            const Int expect = binomial(Int(r), a - 1) * binomial(Int(r), a);
            if (c[2 * a - 1] != expect) fail(r, 2 * a - 1, "odd split");
            if (a <= r && expect != Int(r) * narayana(r, a)) fail(r, 2 * a - 1, "Narayana refinement");
        }
    }
    return rep;
}

}  // namespace ccsec
