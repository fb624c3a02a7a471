#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ccsec/binomial.hpp"
#include "ccsec/chow.hpp"
#include "ccsec/poly.hpp"
#include "ccsec/rational.hpp"

namespace ccsec {

// Projective degrees (d_0,...,d_n) of a rational map P^n --> P^n whose
// coordinates have common degree generator_degree. For the gradient map of a
// degree-k hypersurface, generator_degree = k - 1.
struct DegreeVector {
    int ambient_dim = 0;
    std::vector<Int> entries;  // d_0..d_n
    int generator_degree = 1;

    DegreeVector(int n, std::vector<Int> d, int r_gen)
        : ambient_dim(n), entries(std::move(d)), generator_degree(r_gen) {
        if (n < 0) throw std::invalid_argument("negative ambient dimension");
        if (entries.size() != static_cast<std::size_t>(n + 1))
            throw std::invalid_argument("degree vector must have ambient_dim + 1 entries");
        if (r_gen < 1) throw std::invalid_argument("generator degree must be positive");
        for (const auto& e : entries)
            if (e < 0) throw std::invalid_argument("projective degrees must be nonnegative");
    }

    // Degrees of the restriction to a generic hyperplane: d_i is unchanged
    // for i <= n-1, the last entry is dropped.
    DegreeVector section() const {
        if (ambient_dim == 0) throw std::invalid_argument("cannot section ambient P^0");
        return DegreeVector(ambient_dim - 1,
                            std::vector<Int>(entries.begin(), entries.end() - 1),
                            generator_degree);
    }

    bool operator==(const DegreeVector& o) const = default;
};

// s_l = -sum_{i+j=l} (-1)^j binom(l,i) d_i r^j, s_0 = 0.
inline ChowClass segre_from_degrees(const DegreeVector& dv) {
    const int n = dv.ambient_dim;
    const Int r(dv.generator_degree);
    ChowClass s(n);
    for (int l = 1; l <= n; ++l) {
        Rational acc = 0;
        for (int i = 0; i <= l; ++i) {
            const int j = l - i;
            Int term = binomial(Int(l), i) * dv.entries[i] * int_pow(r, j);
            acc += Rational((j % 2 == 0) ? term : -term);
        }
        s.h_coeff(l) = -acc;
    }
    return s;
}

// d_k = r^k - sum_{j=1}^{n} binom(k,j) s_j r^{k-j}. Inverts segre_from_degrees
// for maps defined on all of P^n (d_0 = 1).
inline DegreeVector degrees_from_segre(int n, int r_gen, const ChowClass& s) {
    if (s.ambient_dim() != n) throw std::invalid_argument("ambient dimension mismatch");
    if (s.h_coeff(0) != 0) throw std::invalid_argument("Segre class must have s_0 = 0");
    const Int r(r_gen);
    std::vector<Int> d(n + 1);
    for (int k = 0; k <= n; ++k) {
        Rational acc = Rational(int_pow(r, k));
        for (int j = 1; j <= k; ++j)
            acc -= Rational(binomial(Int(k), j)) * s.h_coeff(j) * Rational(int_pow(r, k - j));
        d[k] = to_integer(acc);
    }
    return DegreeVector(n, std::move(d), r_gen);
}

// (1+h)^{n+1} - sum_j d_j (-h)^j (1+h)^{n-j}, truncated at h^{n+1}.
inline ChowClass csm_hypersurface(const DegreeVector& dv) {
    const int n = dv.ambient_dim;
    ChowClass out = ChowClass::one_plus_h_pow(n, n + 1);
    for (int j = 0; j <= n; ++j) {
        if (dv.entries[j] == 0) continue;
        for (int m = j; m <= n; ++m) {
            Int term = dv.entries[j] * binomial(Int(n - j), m - j);
            out.h_coeff(m) -= Rational((j % 2 == 0) ? term : -term);
        }
    }
    return out;
}

// sum_j d_j (-h)^j (1+h)^{n-j}: the CSM class of the complement of the
// hypersurface, so csm_complement + csm_hypersurface = (1+h)^{n+1}.
inline ChowClass csm_complement(const DegreeVector& dv) {
    const int n = dv.ambient_dim;
    ChowClass out(n);
    for (int j = 0; j <= n; ++j) {
        if (dv.entries[j] == 0) continue;
        for (int m = j; m <= n; ++m) {
            Int term = dv.entries[j] * binomial(Int(n - j), m - j);
            out.h_coeff(m) += Rational((j % 2 == 0) ? term : -term);
        }
    }
    return out;
}

// Fulton class of any degree-k hypersurface in P^n:
// (1+h)^{n+1} (kh - k^2 h^2 + k^3 h^3 - ...), truncated at h^{n+1}.
inline ChowClass fulton_hypersurface(int n, int k) {
    if (n < 1 || k < 1) throw std::invalid_argument("fulton_hypersurface needs n,k >= 1");
    ChowClass segre(n);
    for (int m = 1; m <= n; ++m) {
        Int p = int_pow(Int(k), m);
        segre.h_coeff(m) = Rational((m % 2 == 1) ? p : -p);
    }
    return ChowClass::one_plus_h_pow(n, n + 1) * segre;
}

// (-1)^{dim_x} (fulton - csm); zero for a nonsingular hypersurface.
inline ChowClass milnor_class(const ChowClass& fulton, const ChowClass& csm, int dim_x) {
    ChowClass diff = fulton - csm;
    return (dim_x % 2 == 0) ? diff : diff * Rational(-1);
}

// Degree of the Milnor class (the coefficient of h^n).
inline Rational milnor_number(const ChowClass& milnor) { return milnor.integral(); }

// Alternating-sum functional int M(X)/(1+h) = mu(X) + mu(X cap H).
inline Rational milnor_number_with_section(const ChowClass& milnor) {
    return milnor.alternating_integral();
}

// (k-1)^n - total Milnor number, for isolated singularities.
inline Int grad_degree_isolated(int n, int k, const Int& total_milnor_number) {
    return int_pow(Int(k - 1), n) - total_milnor_number;
}

// (k-1)^n - mu(X) - mu(X cap H), valid for arbitrary singularities.
inline Int grad_degree_milnor(int n, int k, const Int& mu, const Int& mu_section) {
    return int_pow(Int(k - 1), n) - mu - mu_section;
}

// (-1)^n (1 - (chi(X) - chi(X cap H))).
inline Int grad_degree_chi(int n, const Int& chi_x, const Int& chi_section) {
    Int v = 1 - (chi_x - chi_section);
    return (n % 2 == 0) ? v : -v;
}

// The polynomials exchanged by involution_I, plus the hyperplane-section
// coefficient map. gamma is indexed by dimension: gamma_j = coefficient of
// [P^j] in the class; chi(0) recovers the degree of the class (the Euler
// characteristic when the class is a CSM class).
struct ChiGamma {
    Poly gamma;
    Poly chi;
    // b_k = sum_{i<=k} (-1)^{k-i} a_i over the h-power coefficients a_i,
    // k = 1..n-1: the h^k coefficients of the generic-section class.
    std::vector<Rational> section_coeffs;
};

inline ChiGamma chi_gamma_relations(const ChowClass& csm) {
    const int n = csm.ambient_dim();
    if (csm.h_coeff(0) != 0)
        throw std::invalid_argument("class must have zero constant term (proper subset)");
    std::vector<Rational> g(n);
    for (int j = 0; j < n; ++j) g[j] = csm.dimension_coeff(j);
    ChiGamma out;
    out.gamma = Poly(std::move(g));
    out.chi = involution_I(out.gamma);
    out.section_coeffs.resize(n >= 1 ? n - 1 : 0);
    for (int k = 1; k <= n - 1; ++k) {
        Rational b = 0;
        for (int i = 1; i <= k; ++i)
            b += ((k - i) % 2 == 0) ? csm.h_coeff(i) : -csm.h_coeff(i);
        out.section_coeffs[k - 1] = b;
    }
    return out;
}

// Inverse of csm_hypersurface: recover the gradient-map degrees from a known
// CSM class of a degree-k hypersurface. Works in any ambient parity; the
// factor (-1)^n drops out when n is even.
inline DegreeVector degrees_from_csm(int n, int k, const ChowClass& csm) {
    ChowClass compl_cls = ChowClass::one_plus_h_pow(n, n + 1) - csm;
    const std::vector<Rational> c = compl_cls.dimension_coeffs();
    std::vector<Int> d(n + 1);
    for (int i = 0; i <= n; ++i) {
        Rational acc = 0;
        for (int j = n - i; j <= n; ++j) {
            Rational term = Rational(binomial(Int(j), n - i)) * c[j];
            acc += (j % 2 == 0) ? term : -term;
        }
        if (n % 2 == 1) acc = -acc;
        d[i] = to_integer(acc);
    }
    return DegreeVector(n, std::move(d), k - 1);
}

// Everything derivable from the gradient-map degrees of one hypersurface:
// classes, Parusinski numbers of it and of a generic section, and the
// gradient-map degree.
struct HypersurfaceReport {
    int n = 0;
    int k = 0;
    ChowClass csm{0};
    ChowClass fulton{0};
    ChowClass milnor{0};
    Rational mu;
    Rational mu_section;
    Int grad_degree;
};

inline HypersurfaceReport hypersurface_report(const DegreeVector& dv) {
    HypersurfaceReport rep;
    rep.n = dv.ambient_dim;
    rep.k = dv.generator_degree + 1;
    rep.csm = csm_hypersurface(dv);
    rep.fulton = fulton_hypersurface(rep.n, rep.k);
    rep.milnor = milnor_class(rep.fulton, rep.csm, rep.n - 1);
    rep.mu = milnor_number(rep.milnor);
    const Rational both = milnor_number_with_section(rep.milnor);
    rep.mu_section = both - rep.mu;
    rep.grad_degree = grad_degree_milnor(rep.n, rep.k, to_integer(rep.mu), to_integer(rep.mu_section));
    return rep;
}

}  // namespace ccsec
