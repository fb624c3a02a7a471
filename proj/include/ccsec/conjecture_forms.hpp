#pragma once

#include <map>
#include <stdexcept>
#include <utility>

#include "ccsec/binomial.hpp"
#include "ccsec/rational.hpp"

namespace ccsec {

// c_i(r) = binom(r, floor(i/2)) binom(r, floor((i+1)/2)).
inline Int closed_form_c(long i, long r) {
    if (i < 0 || r < 0) throw std::invalid_argument("closed_form_c needs i, r >= 0");
    return binomial(Int(r), i / 2) * binomial(Int(r), (i + 1) / 2);
}

// d_i(r) = sum_{k=0}^{i} binom(k, i-k) binom(r, k) C_k.
inline Int closed_form_d(long i, long r) {
    if (i < 0 || r < 0) throw std::invalid_argument("closed_form_d needs i, r >= 0");
    Int acc = 0;
    for (long k = 0; k <= i; ++k)
        acc += binomial(Int(k), i - k) * binomial(Int(r), k) * catalan(k);
    return acc;
}

// Alternating Catalan form: sum_{k=0}^{r} (-1)^k binom(2r-2k, i-k) binom(r,k) C_k;
// equal to closed_form_c for all i, r.
inline Int alt_form_c(long i, long r) {
    if (i < 0 || r < 0) throw std::invalid_argument("alt_form_c needs i, r >= 0");
    Int acc = 0;
    for (long k = 0; k <= r; ++k) {
        Int term = binomial(Int(2 * r - 2 * k), i - k) * binomial(Int(r), k) * catalan(k);
        acc += (k % 2 == 0) ? term : -term;
    }
    return acc;
}

// Memoized double recursion
//   d_i(r) = sum_{a+u=i-1, b+v=r-1} d_a(b) d_u(v) + sum_{a+u=i-2, b+v=r-1} d_a(b) d_u(v)
// with d_0(r) = 1 and d_i(0) = 0 for i >= 1.
class RecursionD {
   public:
    const Int& operator()(long i, long r) {
        if (i < 0 || r < 0) throw std::invalid_argument("recursion_d needs i, r >= 0");
        const auto key = std::make_pair(i, r);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        Int value;
        if (i == 0) value = 1;
        else if (r == 0) value = 0;
        else {
            for (long off = 1; off <= 2; ++off) {
                if (i - off < 0) continue;
                for (long a = 0; a <= i - off; ++a) {
                    const long u = i - off - a;
                    for (long b = 0; b <= r - 1; ++b) {
                        const Int& left = (*this)(a, b);
                        if (left == 0) continue;
                        value += left * (*this)(u, r - 1 - b);
                    }
                }
            }
        }
        return memo_.emplace(key, std::move(value)).first->second;
    }

   private:
    std::map<std::pair<long, long>, Int> memo_;
};

// N_{r,a} = binom(r, a-1) binom(r, a) / r, integral for 1 <= a <= r.
inline Int narayana(long r, long a) {
    if (r < 1 || a < 1 || a > r) throw std::invalid_argument("narayana needs 1 <= a <= r");
    Int q, rem;
    boost::multiprecision::divide_qr(binomial(Int(r), a - 1) * binomial(Int(r), a), Int(r), q, rem);
    if (rem != 0) throw std::logic_error("narayana: inexact division");
    return q;
}

// Dyck paths of semilength n with k long ascents: T(n,0) = 1 and
// T(n,k) = binom(n+1,k)/(n+1) * sum_{j=2k}^{n} binom(j-k-1, k-1) binom(n+1-k, n-j).
inline Int dyck_T(long n, long k) {
    if (n < 0 || k < 0 || 2 * k > n) throw std::invalid_argument("dyck_T needs 0 <= k <= n/2");
    if (k == 0) return 1;
    Int sum = 0;
    for (long j = 2 * k; j <= n; ++j)
        sum += binomial(Int(j - k - 1), k - 1) * binomial(Int(n + 1 - k), n - j);
    Int q, rem;
    boost::multiprecision::divide_qr(binomial(Int(n + 1), k) * sum, Int(n + 1), q, rem);
    if (rem != 0) throw std::logic_error("dyck_T: inexact division");
    return q;
}

}  // namespace ccsec
