#pragma once

#include <stdexcept>

#include "ccsec/rational.hpp"

namespace ccsec {

inline Int factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial of negative argument");
    Int f = 1;
    for (long j = 2; j <= n; ++j) f *= j;
    return f;
}

// Binomial polynomial evaluated at an integer: a(a-1)...(a-d+1)/d! for d > 0,
// 1 for d = 0, 0 for d < 0. Defined for any integer a; in particular
// binomial(a, d) = 0 when 0 <= a < d and nonzero values occur for a < 0.
inline Int binomial(const Int& a, long d) {
    if (d < 0) return 0;
    if (d == 0) return 1;
    Int num = 1;
    for (long j = 0; j < d; ++j) num *= (a - j);
    if (num == 0) return 0;
    Int q, r;
    boost::multiprecision::divide_qr(num, factorial(d), q, r);
    if (r != 0) throw std::logic_error("binomial: inexact division");
    return q;
}

inline Int binomial(long a, long d) { return binomial(Int(a), d); }

// C_k = binomial(2k, k)/(k+1), always an integer.
inline Int catalan(long k) {
    if (k < 0) throw std::invalid_argument("catalan of negative index");
    Int q, r;
    boost::multiprecision::divide_qr(binomial(Int(2 * k), k), Int(k + 1), q, r);
    if (r != 0) throw std::logic_error("catalan: inexact division");
    return q;
}

inline Int int_pow(const Int& base, long e) {
    if (e < 0) throw std::invalid_argument("negative exponent");
    Int r = 1, b = base;
    for (; e > 0; e >>= 1) {
        if (e & 1) r *= b;
        if (e > 1) b *= b;
    }
    return r;
}

}  // namespace ccsec
