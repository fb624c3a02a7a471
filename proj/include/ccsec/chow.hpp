#pragma once

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ccsec/binomial.hpp"
#include "ccsec/rational.hpp"

namespace ccsec {

// Element of the Chow group of projective n-space, identified with
// Z[h]/(h^{n+1}): coefficient vector of h^0..h^n. The coefficient of [P^i]
// is the h^{n-i} coefficient.
class ChowClass {
   public:
    explicit ChowClass(int ambient_dim)
        : n_(check(ambient_dim)), coeffs_(ambient_dim + 1) {}
    ChowClass(int ambient_dim, std::vector<Rational> h_coeffs)
        : n_(check(ambient_dim)), coeffs_(std::move(h_coeffs)) {
        if (coeffs_.size() != static_cast<std::size_t>(n_ + 1))
            throw std::invalid_argument("coefficient count must be ambient_dim + 1");
    }

    static ChowClass from_dimension_coeffs(int ambient_dim, const std::vector<Rational>& by_dim) {
        ChowClass c(ambient_dim);
        if (by_dim.size() != static_cast<std::size_t>(ambient_dim + 1))
            throw std::invalid_argument("coefficient count must be ambient_dim + 1");
        for (int j = 0; j <= ambient_dim; ++j) c.coeffs_[ambient_dim - j] = by_dim[j];
        return c;
    }

    // (1+h)^p truncated at h^{n+1}; p may exceed n.
    static ChowClass one_plus_h_pow(int ambient_dim, long p) {
        ChowClass c(ambient_dim);
        for (int m = 0; m <= ambient_dim; ++m) c.coeffs_[m] = Rational(binomial(Int(p), m));
        return c;
    }

    int ambient_dim() const { return n_; }
    const Rational& h_coeff(int m) const { return coeffs_.at(m); }
    Rational& h_coeff(int m) { return coeffs_.at(m); }
    const Rational& dimension_coeff(int j) const { return coeffs_.at(n_ - j); }
    const std::vector<Rational>& h_coeffs() const { return coeffs_; }

    std::vector<Rational> dimension_coeffs() const {
        std::vector<Rational> v(n_ + 1);
        for (int j = 0; j <= n_; ++j) v[j] = coeffs_[n_ - j];
        return v;
    }

    // Degree of the class: coefficient of [P^0] = h^n.
    const Rational& integral() const { return coeffs_[n_]; }

    bool operator==(const ChowClass& o) const = default;

    friend ChowClass operator+(const ChowClass& a, const ChowClass& b) {
        check_ambient(a, b);
        ChowClass r(a.n_);
        for (int m = 0; m <= a.n_; ++m) r.coeffs_[m] = a.coeffs_[m] + b.coeffs_[m];
        return r;
    }
    friend ChowClass operator-(const ChowClass& a, const ChowClass& b) {
        check_ambient(a, b);
        ChowClass r(a.n_);
        for (int m = 0; m <= a.n_; ++m) r.coeffs_[m] = a.coeffs_[m] - b.coeffs_[m];
        return r;
    }
    friend ChowClass operator*(const ChowClass& a, const ChowClass& b) {
        check_ambient(a, b);
        ChowClass r(a.n_);
        for (int i = 0; i <= a.n_; ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (int j = 0; i + j <= a.n_; ++j)
                if (b.coeffs_[j] != 0) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return r;
    }
    friend ChowClass operator*(ChowClass a, const Rational& s) {
        for (auto& c : a.coeffs_) c *= s;
        return a;
    }

    // Multiplication by h/(1+h): the class of a generic hyperplane section.
    ChowClass section_operator() const {
        ChowClass factor(n_);
        for (int m = 1; m <= n_; ++m) factor.coeffs_[m] = (m % 2 == 1) ? 1 : -1;
        return *this * factor;
    }

    // Integral of this/(1+h): the alternating-sum functional.
    Rational alternating_integral() const {
        Rational acc = 0;
        for (int j = 0; j <= n_; ++j) acc += ((n_ - j) % 2 == 0 ? coeffs_[j] : -coeffs_[j]);
        return acc;
    }

    // Pushforward along P^n -> P^{n+1}: multiply by h, reindex in the larger ambient.
    ChowClass pushed_to(int bigger_ambient) const {
        if (bigger_ambient < n_) throw std::invalid_argument("pushforward target too small");
        ChowClass r(bigger_ambient);
        for (int m = 0; m <= n_; ++m) r.coeffs_[m + (bigger_ambient - n_)] = coeffs_[m];
        return r;
    }

    std::string to_string() const {
        std::ostringstream os;
        bool first = true;
        for (int m = 0; m <= n_; ++m) {
            if (coeffs_[m] == 0) continue;
            const Rational& c = coeffs_[m];
            if (!first) os << (c > 0 ? " + " : " - ");
            else if (c < 0) os << "-";
            first = false;
            const Rational abs = c > 0 ? c : Rational(-c);
            if (abs != 1 || m == 0) os << ccsec::to_string(abs);
            if (m > 0) {
                os << "h";
                if (m > 1) os << "^" << m;
            }
        }
        if (first) os << "0";
        return os.str();
    }

   private:
    static int check(int n) {
        if (n < 0) throw std::invalid_argument("negative ambient dimension");
        return n;
    }
    static void check_ambient(const ChowClass& a, const ChowClass& b) {
        if (a.n_ != b.n_) throw std::invalid_argument("ambient dimension mismatch");
    }

    int n_;
    std::vector<Rational> coeffs_;
};

}  // namespace ccsec
