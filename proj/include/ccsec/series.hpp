#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "ccsec/rational.hpp"

namespace ccsec {

// Truncated formal power series in one variable. The truncation order is
// explicit state: coefficients 0..order are meaningful, everything above is
// unknown. Mixing two series takes the minimum order.
class Series1 {
   public:
    explicit Series1(long order) : order_(check(order)), a_(order + 1) {}
    Series1(long order, std::vector<Rational> coeffs) : order_(check(order)), a_(std::move(coeffs)) {
        a_.resize(order_ + 1);
    }

    long order() const { return order_; }
    const Rational& operator[](std::size_t i) const { return a_.at(i); }
    Rational& at(std::size_t i) { return a_.at(i); }

    friend Series1 operator+(const Series1& x, const Series1& y) {
        Series1 r(std::min(x.order_, y.order_));
        for (long i = 0; i <= r.order_; ++i) r.a_[i] = x.a_[i] + y.a_[i];
        return r;
    }
    friend Series1 operator-(const Series1& x, const Series1& y) {
        Series1 r(std::min(x.order_, y.order_));
        for (long i = 0; i <= r.order_; ++i) r.a_[i] = x.a_[i] - y.a_[i];
        return r;
    }
    friend Series1 operator*(const Series1& x, const Series1& y) {
        Series1 r(std::min(x.order_, y.order_));
        for (long i = 0; i <= r.order_; ++i)
            for (long j = 0; i + j <= r.order_; ++j)
                if (x.a_[i] != 0 && y.a_[j] != 0) r.a_[i + j] += x.a_[i] * y.a_[j];
        return r;
    }
    friend Series1 operator*(Series1 x, const Rational& s) {
        for (auto& c : x.a_) c *= s;
        return x;
    }

    // Multiplicative inverse; requires a unit (nonzero constant term).
    Series1 unit_inverse() const {
        if (a_[0] == 0) throw std::domain_error("series inverse of a non-unit");
        Series1 b(order_);
        b.a_[0] = 1 / a_[0];
        for (long n = 1; n <= order_; ++n) {
            Rational acc = 0;
            for (long k = 1; k <= n; ++k) acc += a_[k] * b.a_[n - k];
            b.a_[n] = -acc / a_[0];
        }
        return b;
    }

    // Square root with constant term 1; (result)^2 = input up to truncation.
    Series1 sqrt_of_unit() const {
        if (a_[0] != 1) throw std::domain_error("series sqrt requires constant term 1");
        Series1 s(order_);
        s.a_[0] = 1;
        for (long n = 1; n <= order_; ++n) {
            Rational acc = 0;
            for (long k = 1; k < n; ++k) acc += s.a_[k] * s.a_[n - k];
            s.a_[n] = (a_[n] - acc) / 2;
        }
        return s;
    }

    // Quotient by z^k; the k lowest coefficients must vanish. Order drops by k.
    Series1 divide_by_power(long k) const {
        if (k > order_) throw std::domain_error("order too small for monomial division");
        for (long i = 0; i < k; ++i)
            if (a_[i] != 0) throw std::logic_error("inexact series division by monomial");
        Series1 r(order_ - k);
        for (long i = 0; i <= r.order_; ++i) r.a_[i] = a_[i + k];
        return r;
    }

    // this(g) for g with zero constant term.
    Series1 compose(const Series1& g) const {
        if (g.a_[0] != 0) throw std::domain_error("composition target must have zero constant term");
        long ord = std::min(order_, g.order_);
        Series1 r(ord), p(ord);
        p.a_[0] = 1;
        for (long k = 0; k <= ord; ++k) {
            if (a_[k] != 0)
                for (long i = 0; i <= ord; ++i) r.a_[i] += a_[k] * p.a_[i];
            if (k < ord) p = p * g;
        }
        return r;
    }

   private:
    static long check(long order) {
        if (order < 0) throw std::invalid_argument("negative truncation order");
        return order;
    }
    long order_;
    std::vector<Rational> a_;
};

// Truncated formal power series in two variables, dense rectangular grid with
// a separate truncation order per variable.
class Series2 {
   public:
    Series2(long ox, long oy)
        : ox_(check(ox)), oy_(check(oy)), grid_((ox + 1) * (oy + 1)) {}

    long order_x() const { return ox_; }
    long order_y() const { return oy_; }

    const Rational& at(long a, long b) const { return grid_[index(a, b)]; }
    Rational& at(long a, long b) { return grid_[index(a, b)]; }

    static Series2 constant(const Rational& c, long ox, long oy) {
        Series2 s(ox, oy);
        s.at(0, 0) = c;
        return s;
    }

    friend Series2 operator+(const Series2& x, const Series2& y) {
        Series2 r(std::min(x.ox_, y.ox_), std::min(x.oy_, y.oy_));
        for (long a = 0; a <= r.ox_; ++a)
            for (long b = 0; b <= r.oy_; ++b) r.at(a, b) = x.at(a, b) + y.at(a, b);
        return r;
    }
    friend Series2 operator-(const Series2& x, const Series2& y) {
        Series2 r(std::min(x.ox_, y.ox_), std::min(x.oy_, y.oy_));
        for (long a = 0; a <= r.ox_; ++a)
            for (long b = 0; b <= r.oy_; ++b) r.at(a, b) = x.at(a, b) - y.at(a, b);
        return r;
    }
    friend Series2 operator*(const Series2& x, const Series2& y) {
        Series2 r(std::min(x.ox_, y.ox_), std::min(x.oy_, y.oy_));
        for (long a = 0; a <= r.ox_; ++a)
            for (long b = 0; b <= r.oy_; ++b) {
                if (x.at(a, b) == 0) continue;
                for (long u = 0; a + u <= r.ox_; ++u)
                    for (long v = 0; b + v <= r.oy_; ++v)
                        if (y.at(u, v) != 0) r.at(a + u, b + v) += x.at(a, b) * y.at(u, v);
            }
        return r;
    }
    friend Series2 operator*(Series2 x, const Rational& s) {
        for (auto& c : x.grid_) c *= s;
        return x;
    }

    Series2 unit_inverse() const {
        if (at(0, 0) == 0) throw std::domain_error("series inverse of a non-unit");
        Series2 b(ox_, oy_);
        b.at(0, 0) = 1 / at(0, 0);
        for (long s = 1; s <= ox_ + oy_; ++s)
            for (long a = std::max<long>(0, s - oy_); a <= std::min(ox_, s); ++a) {
                const long bb = s - a;
                Rational acc = 0;
                for (long u = 0; u <= a; ++u)
                    for (long v = 0; v <= bb; ++v) {
                        if (u == 0 && v == 0) continue;
                        if (at(u, v) != 0) acc += at(u, v) * b.at(a - u, bb - v);
                    }
                b.at(a, bb) = -acc / at(0, 0);
            }
        return b;
    }

    Series2 sqrt_of_unit() const {
        if (at(0, 0) != 1) throw std::domain_error("series sqrt requires constant term 1");
        Series2 s(ox_, oy_);
        s.at(0, 0) = 1;
        for (long t = 1; t <= ox_ + oy_; ++t)
            for (long a = std::max<long>(0, t - oy_); a <= std::min(ox_, t); ++a) {
                const long b = t - a;
                Rational acc = 0;
                for (long u = 0; u <= a; ++u)
                    for (long v = 0; v <= b; ++v) {
                        if ((u == 0 && v == 0) || (u == a && v == b)) continue;
                        if (s.at(u, v) != 0) acc += s.at(u, v) * s.at(a - u, b - v);
                    }
                s.at(a, b) = (at(a, b) - acc) / 2;
            }
        return s;
    }

    // Quotient by x^p y^q; all coefficients below the monomial must vanish.
    Series2 divide_by_monomial(long p, long q) const {
        if (p > ox_ || q > oy_) throw std::domain_error("order too small for monomial division");
        for (long a = 0; a <= ox_; ++a)
            for (long b = 0; b <= oy_; ++b)
                if ((a < p || b < q) && at(a, b) != 0)
                    throw std::logic_error("inexact series division by monomial");
        Series2 r(ox_ - p, oy_ - q);
        for (long a = 0; a <= r.ox_; ++a)
            for (long b = 0; b <= r.oy_; ++b) r.at(a, b) = at(a + p, b + q);
        return r;
    }

    // Substitute a two-variable series with zero constant term into a
    // one-variable series: sum_k outer[k] * inner^k.
    static Series2 compose(const Series1& outer, const Series2& inner) {
        if (inner.at(0, 0) != 0)
            throw std::domain_error("composition target must have zero constant term");
        Series2 r(inner.ox_, inner.oy_);
        Series2 p = constant(1, inner.ox_, inner.oy_);
        const long bound = std::min<long>(outer.order(), inner.ox_ + inner.oy_);
        for (long k = 0; k <= bound; ++k) {
            if (outer[k] != 0) {
                for (long a = 0; a <= r.ox_; ++a)
                    for (long b = 0; b <= r.oy_; ++b) r.at(a, b) += outer[k] * p.at(a, b);
            }
            if (k < bound) p = p * inner;
        }
        return r;
    }

   private:
    static long check(long order) {
        if (order < 0) throw std::invalid_argument("negative truncation order");
        return order;
    }
    std::size_t index(long a, long b) const {
        if (a < 0 || a > ox_ || b < 0 || b > oy_) throw std::out_of_range("series coefficient");
        return static_cast<std::size_t>(a) * (oy_ + 1) + b;
    }

    long ox_, oy_;
    std::vector<Rational> grid_;
};

}  // namespace ccsec
