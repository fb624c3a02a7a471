#pragma once

#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ccsec/binomial.hpp"
#include "ccsec/rational.hpp"

namespace ccsec {

// Univariate polynomial over Rational, dense, index = exponent.
// Trailing zeros are normalized away; the zero polynomial has no coefficients.
class Poly {
   public:
    Poly() = default;
    Poly(std::initializer_list<Rational> cs) : coeffs_(cs) { normalize(); }
    explicit Poly(std::vector<Rational> cs) : coeffs_(std::move(cs)) { normalize(); }
    explicit Poly(const Rational& c) : coeffs_{c} { normalize(); }

    static Poly monomial(std::size_t e, const Rational& c = 1) {
        std::vector<Rational> v(e + 1);
        v[e] = c;
        return Poly(std::move(v));
    }

    bool is_zero() const { return coeffs_.empty(); }
    // -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

    Rational operator[](std::size_t i) const {
        return i < coeffs_.size() ? coeffs_[i] : Rational(0);
    }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    bool operator==(const Poly& o) const = default;

    Poly operator-() const {
        Poly r(*this);
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    Poly& operator+=(const Poly& o) {
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        normalize();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        normalize();
        return *this;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly& operator*=(const Rational& s) {
        for (auto& c : coeffs_) c *= s;
        normalize();
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> r(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                r[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return Poly(std::move(r));
    }
    friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
    friend Poly operator*(const Rational& s, Poly a) { return a *= s; }

    Rational operator()(const Rational& x) const {
        Rational v = 0;
        for (std::size_t i = coeffs_.size(); i-- > 0;) v = v * x + coeffs_[i];
        return v;
    }

    Poly derivative() const {
        if (coeffs_.size() <= 1) return {};
        std::vector<Rational> r(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i) r[i - 1] = coeffs_[i] * Rational(i);
        return Poly(std::move(r));
    }

    // p(x + shift), exact.
    Poly shifted_argument(const Rational& shift) const {
        Poly result;
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            result = result * Poly{shift, 1} + Poly(coeffs_[i]);
        }
        return result;
    }

    // p(c * x)
    Poly scaled_argument(const Rational& c) const {
        Poly r(*this);
        Rational p = 1;
        for (auto& a : r.coeffs_) {
            a *= p;
            p *= c;
        }
        r.normalize();
        return r;
    }

    Poly pow(long e) const {
        if (e < 0) throw std::invalid_argument("negative polynomial power");
        Poly r{Rational(1)}, b = *this;
        for (; e > 0; e >>= 1) {
            if (e & 1) r *= b;
            if (e > 1) b *= b;
        }
        return r;
    }

    // Quotient of division by (x - root); throws on nonzero remainder.
    Poly divide_exact_by_linear(const Rational& root) const {
        if (is_zero()) return {};
        std::vector<Rational> q(coeffs_.size() - 1);
        Rational carry = 0;  // synthetic division
        for (std::size_t i = coeffs_.size(); i-- > 1;) {
            carry = coeffs_[i] + carry * root;
            q[i - 1] = carry;
        }
        if (coeffs_[0] + carry * root != 0)
            throw std::logic_error("inexact division by linear factor");
        return Poly(std::move(q));
    }

    std::string to_string(const char* var = "t") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            const Rational& c = coeffs_[i];
            if (c == 0) continue;
            if (!first) os << (c > 0 ? " + " : " - ");
            else if (c < 0) os << "-";
            first = false;
            const Rational abs = c > 0 ? c : Rational(-c);
            if (abs != 1 || i == 0) os << ccsec::to_string(abs);
            if (i > 0) {
                if (abs != 1) os << "*";
                os << var;
                if (i > 1) os << "^" << i;
            }
        }
        return os.str();
    }

   private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

// Unique polynomial of degree <= len-1 through the given points, exact.
inline Poly lagrange_interpolate(const std::vector<std::pair<Rational, Rational>>& points) {
    if (points.empty()) throw std::invalid_argument("empty interpolation data");
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i].first == points[j].first)
                throw std::invalid_argument("degenerate interpolation nodes");
    Poly result;
    for (std::size_t i = 0; i < points.size(); ++i) {
        Poly basis{Rational(1)};
        Rational denom = 1;
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (j == i) continue;
            basis *= Poly{-points[j].first, 1};
            denom *= points[i].first - points[j].first;
        }
        result += basis * (points[i].second / denom);
    }
    return result;
}

// p(t) -> (t*p(-t-1) + p(0)) / (t+1). The numerator always vanishes at t = -1,
// so the division is exact; a nonzero remainder trips a hard failure.
inline Poly involution_I(const Poly& p) {
    if (p.is_zero()) return {};
    Poly reflected = p.shifted_argument(-1).scaled_argument(-1);  // p(-t-1)
    Poly numerator = Poly::monomial(1) * reflected + Poly(p[0]);
    return numerator.divide_exact_by_linear(-1);
}

}  // namespace ccsec
