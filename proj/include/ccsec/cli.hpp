#pragma once

#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ccsec/conjecture.hpp"
#include "ccsec/hilbert.hpp"
#include "ccsec/secant.hpp"
#include "ccsec/verify.hpp"

namespace ccsec::cli {

using json = nlohmann::json;

enum class OutputFormat { markdown, csv, json };

inline OutputFormat parse_format(const std::string& s) {
    if (s == "md" || s == "markdown") return OutputFormat::markdown;
    if (s == "csv") return OutputFormat::csv;
    if (s == "json") return OutputFormat::json;
    throw CLI::ValidationError("--format", "expected one of md|csv|json");
}

// Integers render as JSON numbers while they fit in 64 bits and as decimal
// strings beyond, keeping the output machine-stable.
inline json json_int(const Int& v) {
    if (fits_int64(v)) return json(static_cast<std::int64_t>(v));
    return json(v.str());
}

inline json json_int_string(const Int& v) { return json(v.str()); }

inline json json_rational_array(const std::vector<Rational>& v) {
    json arr = json::array();
    for (const auto& x : v) arr.push_back(to_string(x));
    return arr;
}

inline json json_chow(const ChowClass& c) { return json_rational_array(c.h_coeffs()); }

inline json json_poly(const Poly& p) {
    json arr = json::array();
    for (long i = 0; i <= p.degree(); ++i) arr.push_back(to_string(p[static_cast<std::size_t>(i)]));
    return arr;
}

inline void emit_json(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

namespace detail {

struct TableRow {
    std::string label;
    std::vector<std::string> cells;
};

inline void emit_rows(std::ostream& out, OutputFormat fmt, const std::string& corner,
                      const std::vector<std::string>& header, const std::vector<TableRow>& rows) {
    const char sep = fmt == OutputFormat::csv ? ',' : '|';
    if (fmt == OutputFormat::markdown) {
        out << "| " << corner;
        for (const auto& h : header) out << " | " << h;
        out << " |\n|";
        for (std::size_t i = 0; i <= header.size(); ++i) out << " --- |";
        out << "\n";
        for (const auto& r : rows) {
            out << "| " << r.label;
            for (const auto& c : r.cells) out << " | " << c;
            out << " |\n";
        }
    } else {
        out << corner;
        for (const auto& h : header) out << sep << h;
        out << "\n";
        for (const auto& r : rows) {
            out << r.label;
            for (const auto& c : r.cells) out << sep << c;
            out << "\n";
        }
    }
}

inline std::string rational_poly_str(const Poly& p, const char* var) { return p.to_string(var); }

}  // namespace detail

// r >= 6 rows of the csm/degrees tables rest on the polynomial-behavior
// conjecture; r <= 5 is certified by direct computation.
inline bool conjectural_row(int r) { return r >= 6; }

inline int cmd_table(const std::string& kind, int bound, OutputFormat fmt, std::ostream& out,
                     std::ostream& err) {
    if (bound < 0) {
        err << "table: bound must be nonnegative\n";
        return 2;
    }
    if (kind == "csm" || kind == "degrees") {
        const bool csm = kind == "csm";
        const InvariantTable t = run_algorithm(bound);
        if (fmt == OutputFormat::json) {
            json rows = json::array();
            for (int r = 0; r <= bound; ++r) {
                json row;
                row["r"] = r;
                row["conjectural"] = conjectural_row(r);
                json vals = json::array();
                for (const auto& v : (csm ? t.c[r] : t.d[r])) vals.push_back(json_int(v));
                row["values"] = vals;
                rows.push_back(row);
            }
            emit_json(out, json{{"kind", kind}, {"rows", rows}});
        } else {
            std::vector<std::string> header;
            for (int i = 0; i <= 2 * bound; ++i)
                header.push_back((csm ? "c_" : "d_") + std::to_string(i));
            std::vector<detail::TableRow> rows;
            for (int r = 0; r <= bound; ++r) {
                detail::TableRow row;
                row.label = std::to_string(r) + (conjectural_row(r) ? "*" : "");
                for (int i = 0; i <= 2 * bound; ++i)
                    row.cells.push_back(i <= 2 * r ? (csm ? t.c[r][i] : t.d[r][i]).str() : "");
                rows.push_back(std::move(row));
            }
            detail::emit_rows(out, fmt, "r", header, rows);
            if (bound >= 6 && fmt == OutputFormat::markdown)
                out << "\nrows marked * are conjectural (certified only for r <= 5)\n";
        }
        return 0;
    }
    if (kind == "qpoly") {
        if (fmt == OutputFormat::json) {
            json rows = json::array();
            for (long i = 0; i <= bound; ++i) {
                std::vector<std::pair<Rational, Rational>> pts;
                for (long r = 0; r <= i; ++r)
                    pts.emplace_back(Rational(r), Rational(closed_form_d(i, r)));
                json row;
                row["i"] = i;
                row["d_poly"] = json_poly(lagrange_interpolate(pts));
                row["q"] = json_poly(q_poly(i));
                row["x_shift"] = (i + 1) / 2;
                row["den_power"] = i + 1;
                rows.push_back(row);
            }
            emit_json(out, json{{"kind", "qpoly"}, {"rows", rows}});
        } else {
            std::vector<detail::TableRow> rows;
            for (long i = 0; i <= bound; ++i) {
                std::vector<std::pair<Rational, Rational>> pts;
                for (long r = 0; r <= i; ++r)
                    pts.emplace_back(Rational(r), Rational(closed_form_d(i, r)));
                detail::TableRow row;
                row.label = std::to_string(i);
                row.cells.push_back(detail::rational_poly_str(lagrange_interpolate(pts), "r"));
                std::string rf = "x^" + std::to_string((i + 1) / 2) + "/(1-x)^" +
                                 std::to_string(i + 1) + " * (" + q_poly(i).to_string("x") + ")";
                row.cells.push_back(std::move(rf));
                rows.push_back(std::move(row));
            }
            detail::emit_rows(out, fmt, "i", {"d_i(r)", "p_i(x)"}, rows);
        }
        return 0;
    }
    if (kind == "dyck") {
        if (fmt == OutputFormat::json) {
            json rows = json::array();
            for (long n = 0; n <= bound; ++n) {
                json vals = json::array();
                for (long k = 0; k <= n / 2; ++k) vals.push_back(json_int(dyck_T(n, k)));
                rows.push_back(json{{"n", n}, {"values", vals}});
            }
            emit_json(out, json{{"kind", "dyck"}, {"rows", rows}});
        } else {
            std::vector<std::string> header;
            for (long k = 0; k <= bound / 2; ++k) header.push_back("k=" + std::to_string(k));
            std::vector<detail::TableRow> rows;
            for (long n = 0; n <= bound; ++n) {
                detail::TableRow row;
                row.label = std::to_string(n);
                for (long k = 0; k <= bound / 2; ++k)
                    row.cells.push_back(k <= n / 2 ? dyck_T(n, k).str() : "");
                rows.push_back(std::move(row));
            }
            detail::emit_rows(out, fmt, "n", header, rows);
        }
        return 0;
    }
    err << "table: unknown kind '" << kind << "' (expected csm|degrees|qpoly|dyck)\n";
    return 2;
}

inline json hypersurface_json(const HypersurfaceReport& rep) {
    json j;
    j["n"] = rep.n;
    j["k"] = rep.k;
    j["csm"] = json_chow(rep.csm);
    j["fulton"] = json_chow(rep.fulton);
    j["milnor"] = json_chow(rep.milnor);
    j["mu"] = to_string(rep.mu);
    j["mu_section"] = to_string(rep.mu_section);
    j["grad_degree"] = json_int(rep.grad_degree);
    return j;
}

inline json secant_json(const SecantInvariants& inv) {
    json j;
    j["n"] = inv.n;
    j["k"] = inv.k;
    j["dim"] = inv.dim;
    j["degree"] = json_int(inv.degree);
    j["euler_char"] = inv.euler_char;
    j["fixed_points"] = inv.fixed_point_indices;
    if (inv.hypersurface) {
        j["mather"] = json_chow(inv.mather);
        json polar = json::array();
        for (const auto& d : inv.polar) polar.push_back(json_int(d));
        j["polar"] = polar;
        j["g_ed_degree"] = json_int(inv.g_ed_degree);
        j["grad_degree"] = json_int(inv.grad_degree);
        j["chi_section"] = json_int(inv.chi_section);
    }
    return j;
}

inline int cmd_secant(int r, int n, int k, OutputFormat fmt, std::ostream& out, std::ostream& err) {
    if (r >= 1) {
        n = 2 * r;
        k = r;
    }
    if (n < 2 || k < 1 || 2 * k > n) {
        err << "secant: need --r R (R >= 1) or --n N --k K with 1 <= K <= N/2\n";
        return 2;
    }
    const SecantInvariants inv = secant_invariants(n, k);
    if (fmt == OutputFormat::json) {
        emit_json(out, secant_json(inv));
        return 0;
    }
    const char* eq = fmt == OutputFormat::csv ? "," : ": ";
    out << "n" << eq << inv.n << "\n";
    out << "k" << eq << inv.k << "\n";
    out << "dim" << eq << inv.dim << "\n";
    out << "degree" << eq << inv.degree.str() << "\n";
    out << "euler_char" << eq << inv.euler_char << "\n";
    out << "fixed_points" << eq;
    for (std::size_t i = 0; i < inv.fixed_point_indices.size(); ++i)
        out << (i ? " " : "") << "e" << inv.fixed_point_indices[i];
    out << "\n";
    if (inv.hypersurface) {
        out << "mather" << eq << inv.mather.to_string() << "\n";
        out << "polar" << eq;
        for (std::size_t i = 0; i < inv.polar.size(); ++i) out << (i ? " " : "") << inv.polar[i].str();
        out << "\n";
        out << "g_ed_degree" << eq << inv.g_ed_degree.str() << "\n";
        out << "grad_degree" << eq << inv.grad_degree.str() << "\n";
        out << "chi_section" << eq << inv.chi_section.str() << "\n";
    }
    return 0;
}

inline int cmd_hilbert(int n, int k, OutputFormat fmt, std::ostream& out, std::ostream& err) {
    if (n < 2 || k < 1 || 2 * k > n) {
        err << "hilbert: need --n N --k K with 1 <= K <= N/2\n";
        return 2;
    }
    const HilbertSeries hs = secant_hilbert_series(n, k);
    const Int degree = to_integer(hs.numerator(1));
    const bool curve_section = (n == 2 * k + 2);  // generic P^4 section is a curve
    if (fmt == OutputFormat::json) {
        json j;
        j["n"] = n;
        j["k"] = k;
        j["numerator"] = json_poly(hs.numerator);
        j["denominator_power"] = hs.denominator_power;
        j["degree"] = json_int(degree);
        if (curve_section) j["section_curve_genus"] = json_int(section_curve_genus(k + 1));
        emit_json(out, j);
        return 0;
    }
    const char* eq = fmt == OutputFormat::csv ? "," : ": ";
    out << "n" << eq << n << "\n";
    out << "k" << eq << k << "\n";
    out << "numerator" << eq << hs.numerator.to_string() << "\n";
    out << "denominator_power" << eq << hs.denominator_power << "\n";
    out << "degree" << eq << degree.str() << "\n";
    if (curve_section) out << "section_curve_genus" << eq << section_curve_genus(k + 1).str() << "\n";
    return 0;
}

inline int cmd_algorithm(int rmax, bool emit_polys, OutputFormat fmt, std::ostream& out,
                         std::ostream& err) {
    if (rmax < 0) {
        err << "algorithm: --rmax must be nonnegative\n";
        return 2;
    }
    const InvariantTable t = run_algorithm(rmax);
    if (fmt == OutputFormat::json) {
        json j;
        json c = json::array(), d = json::array();
        for (int r = 0; r <= rmax; ++r) {
            json cr = json::array(), dr = json::array();
            for (const auto& v : t.c[r]) cr.push_back(json_int_string(v));
            for (const auto& v : t.d[r]) dr.push_back(json_int_string(v));
            c.push_back(cr);
            d.push_back(dr);
        }
        j["rmax"] = rmax;
        j["c"] = c;
        j["d"] = d;
        if (emit_polys) {
            json pc = json::array(), pd = json::array();
            for (int i = 0; i <= rmax; ++i) {
                pc.push_back(json_poly(t.polc[i]));
                pd.push_back(json_poly(t.pold[i]));
            }
            j["polc"] = pc;
            j["pold"] = pd;
        }
        emit_json(out, j);
        return 0;
    }
    const char sep = fmt == OutputFormat::csv ? ',' : ' ';
    out << "c:\n";
    for (int r = 0; r <= rmax; ++r) {
        for (std::size_t i = 0; i < t.c[r].size(); ++i) out << (i ? std::string(1, sep) : "") << t.c[r][i].str();
        out << "\n";
    }
    out << "d:\n";
    for (int r = 0; r <= rmax; ++r) {
        for (std::size_t i = 0; i < t.d[r].size(); ++i) out << (i ? std::string(1, sep) : "") << t.d[r][i].str();
        out << "\n";
    }
    if (emit_polys) {
        out << "polc:\n";
        for (int i = 0; i <= rmax; ++i) out << t.polc[i].to_string() << "\n";
        out << "pold:\n";
        for (int i = 0; i <= rmax; ++i) out << t.pold[i].to_string() << "\n";
    }
    return 0;
}

// CCSEC_THREADS caps parallelism; 0 or unset means auto.
inline int resolve_threads() {
    const char* env = std::getenv("CCSEC_THREADS");
    long requested = 0;
    if (env && *env) {
        try {
            requested = std::stol(env);
        } catch (...) {
            requested = 0;
        }
    }
    if (requested <= 0) {
        const unsigned hw = std::thread::hardware_concurrency();
        return hw == 0 ? 1 : static_cast<int>(hw);
    }
    return static_cast<int>(requested);
}

inline int print_verify_report(const VerifyReport& rep, int rmax, int nmax, std::ostream& out) {
    if (rep.ok()) {
        out << "ok: " << rep.checks_run << " checks passed (rmax=" << rmax << ", nmax=" << nmax
            << ")\n";
        return 0;
    }
    out << "FAILED: " << rep.failures.size() << " of " << rep.checks_run << " checks\n";
    for (const auto& f : rep.failures) out << "  [" << f.suite << "] " << f.detail << "\n";
    return 1;
}

inline int cmd_verify(int rmax, int nmax, std::ostream& out, std::ostream& err) {
    if (rmax < 0 || nmax < 0) {
        err << "verify: --rmax and --nmax must be nonnegative\n";
        return 2;
    }
    return print_verify_report(run_verification(rmax, nmax, resolve_threads()), rmax, nmax, out);
}

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"characteristic classes and combinatorial invariants of secants of rational normal curves"};
    app.name("ccsec");
    app.require_subcommand(1);
    app.fallthrough();

    std::string format;  // default: md for table, json elsewhere
    app.add_option("--format", format, "output format: md|csv|json (default md for table, json otherwise)");

    auto* table = app.add_subcommand("table", "print one of the invariant tables");
    table->fallthrough();
    std::string kind;
    int t_rmax = -1, t_nmax = -1;
    table->add_option("kind", kind, "csm|degrees|qpoly|dyck")->required();
    table->add_option("--rmax", t_rmax, "row bound for csm/degrees");
    table->add_option("--nmax", t_nmax, "row bound for qpoly/dyck");

    auto* secant = app.add_subcommand("secant", "invariants of a secant variety");
    secant->fallthrough();
    int s_r = 0, s_n = 0, s_k = 0;
    secant->add_option("--r", s_r, "hypersurface case: Sec_r in P^{2r}");
    secant->add_option("--n", s_n, "ambient dimension");
    secant->add_option("--k", s_k, "number of points");

    auto* hilbert = app.add_subcommand("hilbert", "Hilbert series of a secant variety");
    hilbert->fallthrough();
    int h_n = 0, h_k = 0;
    hilbert->add_option("--n", h_n, "ambient dimension")->required();
    hilbert->add_option("--k", h_k, "number of points")->required();

    auto* algorithm = app.add_subcommand("algorithm", "run the table algorithm");
    algorithm->fallthrough();
    int a_rmax = 0;
    bool emit_polys = false;
    algorithm->add_option("--rmax", a_rmax, "largest row")->required();
    algorithm->add_flag("--emit-polys", emit_polys, "also print the column polynomials");

    auto* verify = app.add_subcommand("verify", "run the full verification suite");
    verify->fallthrough();
    int v_rmax = 12, v_nmax = 20;
    verify->add_option("--rmax", v_rmax, "table bound")->capture_default_str();
    verify->add_option("--nmax", v_nmax, "reversal-check bound")->capture_default_str();

    std::vector<const char*> argv;
    argv.push_back("ccsec");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    if (format.empty()) format = table->parsed() ? "md" : "json";
    OutputFormat fmt;
    try {
        fmt = parse_format(format);
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (table->parsed()) {
            const int bound = std::max(t_rmax, t_nmax);
            if (bound < 0) {
                err << "table: give --rmax (csm/degrees) or --nmax (qpoly/dyck)\n";
                return 2;
            }
            return cmd_table(kind, bound, fmt, out, err);
        }
        if (secant->parsed()) return cmd_secant(s_r, s_n, s_k, fmt, out, err);
        if (hilbert->parsed()) return cmd_hilbert(h_n, h_k, fmt, out, err);
        if (algorithm->parsed()) return cmd_algorithm(a_rmax, emit_polys, fmt, out, err);
        if (verify->parsed()) return cmd_verify(v_rmax, v_nmax, out, err);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "no subcommand\n";
    return 2;
}

}  // namespace ccsec::cli
