#pragma once

#include <algorithm>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "ccsec/charclass.hpp"
#include "ccsec/chow.hpp"
#include "ccsec/conjecture.hpp"
#include "ccsec/hilbert.hpp"
#include "ccsec/secant.hpp"

namespace ccsec {

struct VerifyFailure {
    std::string suite;
    std::string detail;
};

struct VerifyReport {
    std::vector<VerifyFailure> failures;
    int checks_run = 0;
    bool ok() const { return failures.empty(); }
};

namespace detail {

class FailureSink {
   public:
    explicit FailureSink(VerifyReport& rep) : rep_(rep) {}
    void require(bool cond, const std::string& suite, const std::string& detail) {
        std::lock_guard<std::mutex> lock(mu_);
        ++rep_.checks_run;
        if (!cond) rep_.failures.push_back({suite, detail});
    }

   private:
    VerifyReport& rep_;
    std::mutex mu_;
};

// Split 0..count-1 across at most `threads` workers; deterministic join order.
template <typename F>
void parallel_indices(int count, int threads, F&& body) {
    if (threads <= 1 || count <= 1) {
        for (int i = 0; i < count; ++i) body(i);
        return;
    }
    const int workers = std::min(threads, count);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            for (int i = w; i < count; i += workers) body(i);
        });
    for (auto& th : pool) th.join();
}

inline std::string cell(int r, long i) {
    std::ostringstream os;
    os << "(r=" << r << ", i=" << i << ")";
    return os.str();
}

// Projective degrees of the Hankel gradient maps for r <= 5, computed
// independently with Macaulay2 (Cremona package, projectiveDegrees): the
// unconditional geometric check the algorithm must reproduce.
inline const std::vector<std::vector<long long>>& golden_degree_rows() {
    static const std::vector<std::vector<long long>> rows = {
        {1},
        {1, 1, 1},
        {1, 2, 4, 4, 2},
        {1, 3, 9, 17, 21, 15, 5},
        {1, 4, 16, 44, 86, 116, 104, 56, 14},
        {1, 5, 25, 90, 240, 472, 680, 700, 490, 210, 42},
    };
    return rows;
}

// The matching CSM-coefficient rows for the hypersurface complements, same source.
inline const std::vector<std::vector<long long>>& golden_csm_rows() {
    static const std::vector<std::vector<long long>> rows = {
        {1},
        {1, 1, 1},
        {1, 2, 4, 2, 1},
        {1, 3, 9, 9, 9, 3, 1},
        {1, 4, 16, 24, 36, 24, 16, 4, 1},
        {1, 5, 25, 50, 100, 100, 100, 50, 25, 5, 1},
    };
    return rows;
}

inline void verify_algebra(FailureSink& sink) {
    const char* suite = "algebra";
    for (long a = 0; a <= 30; ++a)
        for (long d = 0; d <= 30; ++d) {
            if (d <= a) {
                const Int expect = factorial(a) / (factorial(d) * factorial(a - d));
                sink.require(binomial(a, d) == expect, suite, "binomial vs factorial " + cell(a, d));
            } else {
                sink.require(binomial(a, d) == 0, suite, "binomial vanishing " + cell(a, d));
            }
        }
    // deterministic rational round trips
    for (int p = -6; p <= 6; ++p)
        for (int q = 1; q <= 6; ++q) {
            const Rational a(p, q), b(q, p == 0 ? 1 : (p < 0 ? -p : p));
            sink.require((a + b) - b == a, suite, "additive cancellation");
            if (b != 0) sink.require((a * b) / b == a, suite, "multiplicative cancellation");
            sink.require(parse_rational(to_string(a)) == a, suite, "string round trip");
        }
    // involution is an involution (sample of degrees up to 20)
    unsigned state = 12345;
    const auto next = [&state] {
        state = state * 1103515245u + 12345u;
        return static_cast<long>((state >> 16) % 19) - 9;
    };
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Rational> cs(1 + trial % 21);
        for (auto& x : cs) x = Rational(next());
        const Poly p(cs);
        sink.require(involution_I(involution_I(p)) == p, suite, "involution squared");
    }
    // series sqrt squares back
    Series1 s(12);
    s.at(0) = 1;
    for (long i = 1; i <= 12; ++i) s.at(i) = Rational(next());
    const Series1 root = s.sqrt_of_unit();
    const Series1 sq = root * root;
    for (long i = 0; i <= 12; ++i)
        sink.require(sq[i] == s[i], suite, "sqrt square");
    // Chow ring laws
    const ChowClass u(4, {Rational(1), Rational(2), Rational(0), Rational(-3), Rational(5)});
    const ChowClass v(4, {Rational(2), Rational(-1), Rational(4), Rational(0), Rational(1)});
    const ChowClass w(4, {Rational(0), Rational(1), Rational(1), Rational(2), Rational(-2)});
    sink.require(u * v == v * u, suite, "chow commutativity");
    sink.require((u * v) * w == u * (v * w), suite, "chow associativity");
    const ChowClass hpow = ChowClass(4, {Rational(0), Rational(0), Rational(0), Rational(0), Rational(1)});
    sink.require((hpow * hpow).h_coeffs() == std::vector<Rational>(5), suite, "chow truncation");
}

inline void verify_charclass(FailureSink& sink) {
    const char* suite = "charclass";
    unsigned state = 777;
    const auto next = [&state](long mod) {
        state = state * 1103515245u + 12345u;
        return static_cast<long>((state >> 16) % mod);
    };
    for (int trial = 0; trial < 120; ++trial) {
        const int n = 1 + static_cast<int>(next(8));
        const int rg = 1 + static_cast<int>(next(5));
        std::vector<Int> d(n + 1);
        d[0] = 1;
        for (int i = 1; i <= n; ++i) d[i] = next(51);
        const DegreeVector dv(n, d, rg);
        sink.require(degrees_from_segre(n, rg, segre_from_degrees(dv)) == dv, suite,
                     "segre/degrees round trip");
        sink.require(csm_hypersurface(dv) + csm_complement(dv) == ChowClass::one_plus_h_pow(n, n + 1),
                     suite, "csm complement sum rule");
        // alternating-sum identity for the csm class of the hypersurface
        const ChowClass cs = csm_hypersurface(dv);
        const Rational lhs = cs.integral() - cs.section_operator().integral();
        const Rational rhs = Rational(1) - Rational((n % 2 == 0) ? dv.entries[n] : -dv.entries[n]);
        sink.require(lhs == rhs, suite, "csm section defect identity");
    }
    for (int n = 1; n <= 8; ++n)
        for (int k = 1; k <= 6; ++k) {
            const ChowClass cf = fulton_hypersurface(n, k);
            const Rational section_int =
                n >= 2 ? fulton_hypersurface(n - 1, k).pushed_to(n).integral() : Rational(0);
            const Int pw = int_pow(Int(k - 1), n);
            const Rational rhs = Rational(1) - Rational((n % 2 == 0) ? pw : -pw);
            sink.require(cf.integral() - section_int == rhs, suite, "fulton section defect identity");
            // a smooth hypersurface has vanishing Milnor class: csm computed
            // from the Fulton data must agree with the Fulton class (k >= 2:
            // a hyperplane has no gradient-map degree vector)
            if (k >= 2) {
                const DegreeVector smooth = degrees_from_csm(n, k, cf);
                const ChowClass milnor = milnor_class(cf, csm_hypersurface(smooth), n - 1);
                sink.require(milnor == ChowClass(n), suite, "smooth Milnor class vanishes");
            }
        }
    // milnor- and chi-based gradient degrees agree on pipeline data
    for (int r = 1; r <= 6; ++r) {
        const DegreeVector dv = secant_degree_row(r);
        const HypersurfaceReport rep = hypersurface_report(dv);
        const Int chi_x = to_integer(rep.csm.integral());
        const Int chi_sec = to_integer(rep.csm.section_operator().integral());
        sink.require(grad_degree_chi(2 * r, chi_x, chi_sec) == rep.grad_degree, suite,
                     "milnor vs chi gradient degree");
    }
}

inline void verify_hilbert(FailureSink& sink) {
    const char* suite = "hilbert";
    const Poly one_minus_t{Rational(1), Rational(-1)};
    for (int k = 1; k <= 6; ++k)
        for (int c = 0; c <= 5; ++c) {
            const Poly q = maximal_minor_numerator(k, c);
            sink.require(abhyankar_numerator(k + 1 + c, k + 1, k) == q, suite,
                         "abhyankar vs maximal-minor " + cell(k, c));
            sink.require(one_minus_t.pow(c + 1) * q == eagon_northcott_numerator(k + 1, c), suite,
                         "eagon-northcott vs maximal-minor " + cell(k, c));
            for (long j = 0; j <= k; ++j)
                sink.require(q[static_cast<std::size_t>(j)] == Rational(binomial(Int(c + j), j)),
                             suite, "h-vector reading");
        }
    for (int m = 2; m <= 7; ++m)
        for (int n = 2; n <= 7; ++n)
            for (int k = 1; k <= std::min(m, n); ++k)
                sink.require(abhyankar_numerator(m, n, k) == abhyankar_numerator(n, m, k), suite,
                             "transpose invariance " + cell(m, n));
    for (int r = 2; r <= 40; ++r)
        sink.require(section_curve_genus(r) == section_curve_genus_closed_form(r), suite,
                     "genus closed form r=" + std::to_string(r));
    for (int n = 2; n <= 12; ++n)
        for (int k = 1; 2 * k <= n; ++k) {
            const HilbertSeries hs = secant_hilbert_series(n, k);
            sink.require(hs.numerator(1) == Rational(binomial(Int(n - k + 1), k)), suite,
                         "degree from numerator " + cell(n, k));
            const HilbertPolynomial hp = hilbert_polynomial(hs);
            const long dmax = 3 * std::max<long>(hs.numerator.degree(), 1);
            for (long t = hs.numerator.degree(); t <= dmax; ++t)
                sink.require(hp(Rational(t)) == hs.coefficient(t), suite,
                             "polynomial vs series " + cell(n, k));
        }
}

inline void verify_secant(FailureSink& sink, int threads) {
    const char* suite = "secant";
    for (int n = 2; n <= 16; ++n)
        for (int k = 1; 2 * k <= n; ++k) {
            const EulerCertificate cert = euler_char_secant(n, k);
            sink.require(cert.euler_char == 2 * k, suite, "euler characteristic " + cell(n, k));
        }
    parallel_indices(30, threads, [&](int idx) {
        const int r = idx + 1;
        const ChowClass m = mather_class_secant(r);  // internal parity cross-check
        for (int j = 1; j <= 2 * r; ++j)
            sink.require(m.h_coeff(j) > 0, suite, "mather positivity " + cell(r, j));
        // alternating dual identity behind the gEDdeg closed form
        Int alt = 0;
        for (int j = 0; j <= r; ++j) {
            const Int term =
                binomial(Int(r + 1), r - j) * int_pow(Int(2), j) * (int_pow(Int(2), j + 1) - 1);
            alt += ((r + j) % 2 == 0) ? term : -term;
        }
        sink.require(alt == (int_pow(Int(3), r + 1) - 1) / 2, suite,
                     "gEDdeg binomial identity r=" + std::to_string(r));
        const auto low = low_projective_degrees(r);
        for (long i = 0; i < 5; ++i)
            sink.require(low[i] == closed_form_d(i, r), suite, "low degrees " + cell(r, i));
        if (r <= 12) g_ed_degree_secant(r);  // throws on internal mismatch
        if (r <= 6)
            sink.require(mather_from_dual(r, veronese_dual_mather(r)) == m, suite,
                         "duality involution r=" + std::to_string(r));
        if (r <= 10) {
            const ChowClass cs = csm_secant(r, secant_degree_row(r));
            sink.require(cs.integral() == Rational(2 * r), suite,
                         "csm degree r=" + std::to_string(r));
            for (int j = 1; j <= 2 * r; ++j)
                sink.require(cs.h_coeff(j) > 0, suite, "csm positivity " + cell(r, j));
        }
    });
}

inline void verify_conjecture(FailureSink& sink, int rmax, int nmax, int threads) {
    const char* suite = "conjecture";
    const InvariantTable table = run_algorithm(rmax);
    const auto& golden_d = golden_degree_rows();
    const auto& golden_c = golden_csm_rows();
    for (int r = 0; r <= std::min(rmax, 5); ++r)
        for (int i = 0; i <= 2 * r; ++i) {
            sink.require(table.d[r][i] == golden_d[r][i], suite, "golden degree row " + cell(r, i));
            sink.require(table.c[r][i] == golden_c[r][i], suite, "golden csm row " + cell(r, i));
        }
    parallel_indices(rmax + 1, threads, [&](int r) {
        for (long i = 0; i <= 2 * r; ++i) {
            sink.require(table.c[r][i] == closed_form_c(i, r), suite, "c closed form " + cell(r, i));
            sink.require(table.d[r][i] == closed_form_d(i, r), suite, "d closed form " + cell(r, i));
            sink.require(alt_form_c(i, r) == closed_form_c(i, r), suite,
                         "alternating c form " + cell(r, i));
        }
        const auto crow = aluffi_c_from_d(r, table.d[r]);
        const auto drow = aluffi_d_from_c(r, table.c[r]);
        sink.require(crow == table.c[r] && drow == table.d[r], suite,
                     "table rows satisfy the linear relations r=" + std::to_string(r));
        sink.require(table.d[r][2 * r] == catalan(r), suite,
                     "Catalan degree r=" + std::to_string(r));
    });
    {
        RecursionD rec;
        for (int r = 0; r <= std::min(rmax, 15); ++r)
            for (long i = 0; i <= 2 * r; ++i)
                sink.require(rec(i, r) == closed_form_d(i, r), suite, "recursion " + cell(r, i));
    }
    {
        const Series2 g = generating_g(12, 12);  // throws on route disagreement
        const Series2 f = generating_f(12, 12);
        for (long r = 0; r <= 12; ++r)
            for (long i = 0; i <= 12; ++i) {
                sink.require(g.at(r, i) == Rational(closed_form_d(i, r)), suite,
                             "g grid " + cell(static_cast<int>(r), i));
                sink.require(f.at(r, i) == Rational(closed_form_c(i, r)), suite,
                             "f grid " + cell(static_cast<int>(r), i));
            }
    }
    for (long n = 0; n <= nmax; ++n)
        sink.require(kl_reversal_check(n), suite, "coefficient reversal n=" + std::to_string(n));
    for (long r = 0; r <= std::max(rmax, 40); ++r) {
        Int alt = 0;
        for (long i = 0; i <= 2 * r; ++i) {
            const Int v = closed_form_c(i, r);
            alt += (i % 2 == 0) ? v : -v;
        }
        sink.require(alt == catalan(r), suite, "alternating Catalan identity r=" + std::to_string(r));
    }
    const PropertyReport props = property_suite(table);
    for (const auto& f : props.failures)
        sink.require(false, suite, "property " + f.what + " " + cell(f.r, f.i));
    sink.require(true, suite, "property suite");
}

}  // namespace detail

// Diffs a computed table against reference rows (first column of each row is
// r, then the values). Any discrepancy is reported with its coordinates.
inline VerifyReport verify_table_against(const InvariantTable& table,
                                         const std::vector<std::vector<Int>>& golden_d_rows,
                                         const std::vector<std::vector<Int>>& golden_c_rows) {
    VerifyReport rep;
    detail::FailureSink sink(rep);
    const auto diff = [&](const std::vector<std::vector<Int>>& golden,
                          const std::vector<std::vector<Int>>& computed, const char* which) {
        for (const auto& row : golden) {
            const int r = static_cast<int>(row.front());
            const bool in_range = r >= 0 && r <= table.rmax &&
                                  row.size() == computed[r].size() + 1;
            sink.require(in_range, "golden", std::string(which) + " row shape r=" + std::to_string(r));
            if (!in_range) continue;
            for (std::size_t i = 1; i < row.size(); ++i)
                sink.require(row[i] == computed[r][i - 1], "golden",
                             std::string(which) + " " + detail::cell(r, static_cast<long>(i) - 1));
        }
    };
    diff(golden_d_rows, table.d, "d");
    diff(golden_c_rows, table.c, "c");
    return rep;
}

// Runs every module's invariant suite; rmax/nmax bound the conjecture-side
// table and reversal checks. threads caps parallel per-r work (>=1).
inline VerifyReport run_verification(int rmax, int nmax, int threads = 1) {
    VerifyReport rep;
    detail::FailureSink sink(rep);
    detail::verify_algebra(sink);
    detail::verify_charclass(sink);
    detail::verify_hilbert(sink);
    detail::verify_secant(sink, threads);
    detail::verify_conjecture(sink, rmax, nmax, threads);
    // parallel workers may interleave; keep the report order deterministic
    std::sort(rep.failures.begin(), rep.failures.end(), [](const auto& a, const auto& b) {
        return std::tie(a.suite, a.detail) < std::tie(b.suite, b.detail);
    });
    return rep;
}

}  // namespace ccsec
