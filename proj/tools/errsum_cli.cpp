// Command-line front end: error-sum computation, verification suites,
// triangle export, and OEIS b-file comparison.
//
// Exit codes: 0 ok; 2 bad arguments; 3 convergence failure;
// 4 infrastructure error; 5 OEIS mismatch.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "errsum/apery.hpp"
#include "errsum/cf_engine.hpp"
#include "errsum/exp_errsums.hpp"
#include "errsum/log1p_family.hpp"
#include "errsum/oeis_bridge.hpp"
#include "errsum/oracles.hpp"
#include "errsum/pi_logrho.hpp"
#include "errsum/triangles.hpp"

namespace es = errsum;
using json = nlohmann::ordered_json;

namespace {

constexpr const char* kVersion = "1.0.0";

struct ResultRow {
    std::string name;
    std::string value;
    std::string tail_bound;
    long terms_used = 0;
    std::string status;
};

es::Rat parse_rat(const std::string& s) {
    es::Rat q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("bad rational: " + s);
    q.canonicalize();
    return q;
}

// Render a value with digits justified by the tail bound (never more than
// the precision supports).
std::string render_value(const es::HPReal& v, const es::HPReal& tail) {
    int prec_digits =
        std::max(5, static_cast<int>(static_cast<double>(v.prec()) * 0.30103) - 1);
    int digits = prec_digits;
    if (tail.sign() > 0 && !v.is_zero()) {
        long ev = static_cast<long>(mpfr_get_exp(v.raw()));
        long et = static_cast<long>(mpfr_get_exp(tail.raw()));
        long good_bits = ev - et;
        if (good_bits < 8) good_bits = 8;
        digits = std::min<long>(digits,
                                static_cast<long>(static_cast<double>(good_bits) * 0.30103) + 1);
    }
    return v.str(static_cast<int>(digits));
}

void emit(const std::string& command, const json& params,
          const std::vector<ResultRow>& rows, const std::string& format) {
    if (format == "json") {
        json out;
        out["command"] = command;
        out["params"] = params;
        json results = json::array();
        for (const auto& r : rows) {
            json jr;
            jr["name"] = r.name;
            jr["value"] = r.value;
            jr["tail_bound"] = r.tail_bound;
            jr["terms_used"] = std::to_string(r.terms_used);
            jr["status"] = r.status;
            results.push_back(jr);
        }
        out["results"] = results;
        out["version"] = kVersion;
        std::cout << out.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "name,value,tail_bound,terms_used,status\n";
        for (const auto& r : rows)
            std::cout << r.name << ',' << r.value << ',' << r.tail_bound << ','
                      << r.terms_used << ',' << r.status << "\n";
    } else {
        for (const auto& r : rows)
            std::cout << r.name << " = " << r.value << "   (tail<=" << r.tail_bound
                      << ", terms=" << r.terms_used << ", " << r.status << ")\n";
    }
}

ResultRow row_from_report(const std::string& name, const es::ErrorSumReport& rep) {
    return {name, render_value(rep.value, rep.tail_bound), rep.tail_bound.str(3),
            rep.terms_used, rep.converged ? "converged" : "not-converged"};
}

struct VerifyRow {
    std::string claim;
    es::ClaimStatus status;
    std::string detail;
};

void append_claim(std::vector<VerifyRow>& rows, const es::ClaimReport& r) {
    rows.push_back({r.claim_id, r.status, r.range});
}

void append_bool(std::vector<VerifyRow>& rows, const std::string& claim, bool ok,
                 bool empirical, const std::string& detail) {
    es::ClaimStatus st = ok ? (empirical ? es::ClaimStatus::empirical_pass
                                         : es::ClaimStatus::proven_pass)
                            : (empirical ? es::ClaimStatus::empirical_fail
                                         : es::ClaimStatus::fail);
    rows.push_back({claim, st, detail});
}

bool within(const es::HPReal& a, const es::HPReal& b, const std::string& tol,
            mpfr_prec_t prec) {
    return es::abs(a - b) < es::HPReal::parse(tol, prec);
}

int run_verify(const std::string& suite, long max_n, mpfr_prec_t prec,
               const std::string& data_dir, const std::string& format) {
    std::vector<VerifyRow> rows;
    es::HPReal tol = es::HPReal::parse("1e-20", prec);

    if (suite == "recurrences") {
        // Eq (4.20) at deterministic pseudo-random rationals.
        std::vector<es::Rat> ts;
        unsigned long seed = 0x5eed;
        for (int i = 0; i < 20; ++i) {
            seed = seed * 6364136223846793005ULL + 1442695040888963407ULL;
            long num = static_cast<long>(seed % 97) + 1;
            seed = seed * 6364136223846793005ULL + 1442695040888963407ULL;
            long den = num + static_cast<long>(seed % 97);
            ts.emplace_back(num, den);
            ts.back().canonicalize();
        }
        bool ok420 = true;
        for (const auto& t : ts) {
            auto rep = es::verify_recurrence_420(t, std::min<long>(max_n, 50));
            if (!rep.ok) ok420 = false;
        }
        append_bool(rows, "recurrence_4.20", ok420, false, "20 rational t, n<=50");
        append_bool(rows, "apery_recurrence_zeta2",
                    es::verify_apery_recurrence(es::AperyConstant::zeta2, max_n).ok, false,
                    "n<=" + std::to_string(max_n));
        append_bool(rows, "apery_recurrence_zeta3",
                    es::verify_apery_recurrence(es::AperyConstant::zeta3, max_n).ok, false,
                    "n<=" + std::to_string(max_n));
        // convergent-vs-sequence equalities
        long ncv = std::min<long>(max_n, 40);
        {
            auto cv = es::gcf_convergents(es::pi_gcf(), ncv + 1);
            bool ok = true;
            for (long n = 0; n <= ncv; ++n) {
                es::PiSeqPair s = es::pi_seq(n);
                const auto& [P, Q] = cv[static_cast<std::size_t>(n)];
                if (P / Q != (s.B / 4) / s.A) ok = false;
            }
            append_bool(rows, "cf_equals_sequence_pi", ok, false, "n<=" + std::to_string(ncv));
        }
        {
            auto cv = es::gcf_convergents(es::logrho_gcf(), ncv + 1);
            bool ok = true;
            for (long n = 0; n <= ncv; ++n) {
                es::LogRhoSeqPair s = es::logrho_seq(n);
                const auto& [P, Q] = cv[static_cast<std::size_t>(n)];
                if (P / Q != s.D / s.C) ok = false;
            }
            append_bool(rows, "cf_equals_sequence_logrho", ok, false,
                        "n<=" + std::to_string(ncv));
        }
        for (auto c : {es::AperyConstant::zeta2, es::AperyConstant::zeta3}) {
            auto cv = es::gcf_convergents(es::apery_gcf(c), ncv);
            bool ok = true;
            for (long n = 1; n <= ncv; ++n) {
                es::AperySeqPair s = es::apery_pair(c, n);
                const auto& [P, Q] = cv[static_cast<std::size_t>(n - 1)];
                if (P / Q != s.num / es::Rat(s.den)) ok = false;
            }
            append_bool(rows,
                        c == es::AperyConstant::zeta2 ? "cf_equals_sequence_zeta2"
                                                      : "cf_equals_sequence_zeta3",
                        ok, false, "n<=" + std::to_string(ncv));
        }
        {
            es::Rat t(3, 7);
            auto cv = es::gcf_convergents(es::log1p_gcf(t), ncv);
            bool ok = true;
            for (long n = 1; n <= ncv; ++n) {
                es::Log1pSeqPair s = es::log1p_seq(t, n);
                const auto& [P, Q] = cv[static_cast<std::size_t>(n - 1)];
                if (P != s.A || Q != s.B) ok = false;
            }
            append_bool(rows, "cf_equals_sequence_log1p", ok, false,
                        "t=3/7, n<=" + std::to_string(ncv));
        }
    } else if (suite == "closed_forms") {
        es::HPReal t2 = es::thm2_closed_form(prec);
        auto r2 = es::errsum_pi(es::SignMode::signed_sum, prec, tol);
        append_bool(rows, "thm2_pi_error_sum", within(t2, r2.value, "1e-13", prec), false,
                    "closed form vs direct sum");
        es::HPReal t3 = es::thm3_closed_form(prec);
        auto r3 = es::errsum_logrho(es::SignMode::signed_sum, prec, tol);
        append_bool(rows, "thm3_logrho_error_sum", within(t3, r3.value, "1e-13", prec),
                    false, "closed form vs direct sum");
        // the 1e-30 agreement checks below need a tail well under 1e-30
        es::HPReal tight = es::HPReal::parse("1e-36", prec);
        auto c41s = es::errsum_log1p(es::Rat(1), es::Log1pMethod::series, prec, tight);
        auto c41c = es::errsum_log1p(es::Rat(1), es::Log1pMethod::closed_form, prec, tight);
        es::HPReal pi4 = es::const_value("pi", prec) / es::HPReal::of(4L, prec);
        append_bool(rows, "cor4.1_log1p_t1",
                    within(c41s.value, pi4, "1e-30", prec) &&
                        within(c41c.value, pi4, "1e-40", prec),
                    false, "t=1 equals pi/4");
        bool thm1 = true;
        for (long l = 2; l <= 5; ++l) {
            auto a = es::errsum_exp(l, es::ExpMethod::cf_sum, prec, tight);
            auto b = es::errsum_exp(l, es::ExpMethod::erf_form, prec, tight);
            auto g = es::errsum_exp(l, es::ExpMethod::gauss_cf, prec, tight);
            if (!within(a.value, b.value, "1e-30", prec) ||
                !within(b.value, g.value, "1e-30", prec))
                thm1 = false;
        }
        append_bool(rows, "thm1_exp_three_routes", thm1, false, "l in {2..5}");
    } else if (suite == "integrals") {
        es::QuadratureSpec qs;
        qs.nodes = 24;
        qs.depth = 14;  // corner singularity at (1,1) needs deep dyadic refinement
        auto i510 = es::integral_crosscheck("5.10", qs, prec);
        auto r510 = es::errsum_apery(es::AperyConstant::zeta2, es::SignMode::signed_sum,
                                     prec, tol);
        append_bool(rows, "integral_5.10", within(i510.value, r510.value, "1e-5", prec),
                    false, "2D quadrature vs series");
        auto i520 = es::integral_crosscheck("5.20", qs, prec);
        auto r520 = es::errsum_apery(es::AperyConstant::zeta2, es::SignMode::absolute,
                                     prec, tol);
        append_bool(rows, "integral_5.20", within(i520.value, r520.value, "1e-5", prec),
                    false, "2D quadrature vs series");
        es::QuadratureSpec qs3;
        qs3.nodes = 12;
        qs3.depth = 7;
        auto i530 = es::integral_crosscheck("5.30", qs3, prec);
        auto r530 = es::errsum_apery(es::AperyConstant::zeta3, es::SignMode::signed_sum,
                                     prec, tol);
        append_bool(rows, "integral_5.30", within(i530.value, r530.value, "1e-3", prec),
                    false, "3D quadrature vs series");
        es::QuadratureSpec qe;
        qe.dimension = 1;
        qe.nodes = 32;
        qe.depth = 4;
        qe.refine = {0, 0, 0};
        auto ierf = es::integrate(
            [](const std::vector<es::HPReal>& v) {
                return es::fn_eval("exp", -(v[0] * v[0]), v[0].prec());
            },
            qe, prec);
        es::HPReal erf_cf =
            es::fn_eval("erf", es::HPReal::of(1L, prec), prec) *
            es::sqrt(es::const_value("pi", prec)) / es::HPReal::of(2L, prec);
        append_bool(rows, "integral_exp_minus_t2", within(ierf.value, erf_cf, "1e-10", prec),
                    false, "int_0^1 e^{-t^2} dt vs erf");
    } else if (suite == "triangles") {
        append_claim(rows, es::lemma_recurrence_check(es::TriangleKind::a, max_n));
        append_claim(rows, es::lemma_recurrence_check(es::TriangleKind::b, max_n));
        append_claim(rows, es::rowsum_check(es::TriangleKind::a, std::max(max_n, 200L)));
        append_claim(rows, es::rowsum_check(es::TriangleKind::b, std::max(max_n, 200L)));
        auto alpha = es::row_functionals(es::TriangleKind::a, 4);
        auto beta = es::row_functionals(es::TriangleKind::b, 3);
        append_bool(rows, "alpha_beta_seeds",
                    alpha.values[3] == es::Rat(17, 70) && alpha.values[4] == es::Rat(68, 315) &&
                        beta.values[3] == es::Rat(47, 210),
                    false, "alpha_3, alpha_4, beta_3");
        append_claim(rows, es::symmetry_check(es::TriangleKind::a, std::min(max_n, 20L)));
        append_claim(rows, es::symmetry_check(es::TriangleKind::b, std::min(max_n, 20L)));
        append_claim(rows, es::binomial_formula_check(es::TriangleKind::a, std::min(max_n, 20L)));
        append_claim(rows, es::binomial_formula_check(es::TriangleKind::b, std::min(max_n, 20L)));
        append_claim(rows, es::row_functional_recurrence_check(es::TriangleKind::a, max_n));
        append_claim(rows, es::row_functional_recurrence_check(es::TriangleKind::b, max_n));
    } else if (suite == "genfuncs") {
        for (long d = 0; d <= 2; ++d) {
            append_claim(rows, es::diagonal_gf_check(es::TriangleKind::a, d,
                                                     std::min(max_n, 30L)));
            append_claim(rows, es::diagonal_gf_check(es::TriangleKind::b, d,
                                                     std::min(max_n, 30L)));
        }
        append_claim(rows, es::order2d_recurrence(1, std::min(max_n, 20L)));
        append_claim(rows, es::order2d_recurrence(2, std::min(max_n, 20L)));
        append_claim(rows, es::a108626_d1_identity(std::min(max_n, 20L)));
    } else if (suite == "oeis") {
        auto bindings = es::registered_bindings();
        for (const auto& bd : bindings) {
            if (!bd.enabled) {
                rows.push_back({"oeis_" + bd.oeis_id, es::ClaimStatus::empirical_pass,
                                "disabled by default (unconfirmed binding)"});
                continue;
            }
            std::string path = data_dir + "/b" + bd.oeis_id.substr(1) + ".txt";
            std::ifstream in(path);
            if (!in) {
                rows.push_back({"oeis_" + bd.oeis_id, es::ClaimStatus::fail,
                                "fixture missing: " + path});
                continue;
            }
            std::stringstream ss;
            ss << in.rdbuf();
            es::BFile bf = es::parse_bfile(ss.str(), path);
            es::OeisReport rep = es::compare(bd, bf, 18);
            append_bool(rows, "oeis_" + bd.oeis_id, rep.ok, true,
                        "matched=" + std::to_string(rep.matched) +
                            " shift=" + std::to_string(rep.offset_used));
        }
    } else {
        throw std::invalid_argument("unknown suite: " + suite);
    }

    std::vector<ResultRow> out;
    bool proven_fail = false, empirical_fail = false;
    for (const auto& r : rows) {
        if (r.status == es::ClaimStatus::fail) proven_fail = true;
        if (r.status == es::ClaimStatus::empirical_fail) empirical_fail = true;
        out.push_back({r.claim, r.detail, "0", 0, es::claim_status_str(r.status)});
    }
    json params;
    params["suite"] = suite;
    params["max_n"] = std::to_string(max_n);
    params["prec"] = std::to_string(prec);
    emit("verify", params, out, format);
    if (empirical_fail && !proven_fail)
        std::cerr << "warning: empirical claim(s) failed (exit 0 by contract)\n";
    return proven_fail ? 1 : 0;
}

int run_triangle(const std::string& kind, long nrows, const std::string& format) {
    if (kind == "alpha" || kind == "beta") {
        auto rf = es::row_functionals(
            kind == "alpha" ? es::TriangleKind::a : es::TriangleKind::b,
            std::max(nrows - 1, 1L));
        if (format == "json") {
            json out;
            out["command"] = "triangle";
            out["params"] = {{"kind", kind}, {"rows", std::to_string(nrows)}};
            json results = json::array();
            for (long v = 0; v < nrows; ++v)
                results.push_back({{"name", kind + "_" + std::to_string(v)},
                                   {"value", es::rat_str(rf.values[static_cast<std::size_t>(v)])},
                                   {"tail_bound", "0"},
                                   {"terms_used", "0"},
                                   {"status", "exact"}});
            out["results"] = results;
            out["version"] = kVersion;
            std::cout << out.dump(2) << "\n";
        } else {
            for (long v = 0; v < nrows; ++v)
                std::cout << v << ',' << es::rat_str(rf.values[static_cast<std::size_t>(v)])
                          << "\n";
        }
        return 0;
    }
    if (kind == "c") {
        auto fam = es::r_family(nrows - 1);
        if (format == "json") {
            json out;
            out["command"] = "triangle";
            out["params"] = {{"kind", kind}, {"rows", std::to_string(nrows)}};
            json results = json::array();
            for (long v = 0; v < nrows; ++v) {
                const auto& r = fam[static_cast<std::size_t>(v)];
                for (std::size_t i = 0; i < r.c.size(); ++i)
                    for (std::size_t j = 0; j < r.c[i].size(); ++j)
                        if (r.c[i][j] != 0)
                            results.push_back(
                                {{"name", "c_" + std::to_string(v) + "_" + std::to_string(i) +
                                              "_" + std::to_string(j)},
                                 {"value", es::rat_str(r.c[i][j])},
                                 {"tail_bound", "0"},
                                 {"terms_used", "0"},
                                 {"status", "exact"}});
            }
            out["results"] = results;
            out["version"] = kVersion;
            std::cout << out.dump(2) << "\n";
        } else {
            for (long v = 0; v < nrows; ++v) {
                const auto& r = fam[static_cast<std::size_t>(v)];
                std::string line;
                for (long i = 0; i <= 2 * v; ++i)
                    for (long j = 0; j <= 2 * v; ++j) {
                        if (!line.empty()) line += ';';
                        line += std::to_string(v) + ',' + std::to_string(i) + ',' +
                                std::to_string(j) + ',' +
                                es::rat_str(r.coeff(static_cast<std::size_t>(i),
                                                    static_cast<std::size_t>(j)));
                    }
                std::cout << line << "\n";
            }
        }
        return 0;
    }
    if (kind != "a" && kind != "b") throw std::invalid_argument("bad triangle kind: " + kind);
    es::CoeffTriangle tri = es::coeff_triangle(
        kind == "a" ? es::TriangleKind::a : es::TriangleKind::b, std::max(nrows - 1, 1L));
    if (format == "json") {
        json out;
        out["command"] = "triangle";
        out["params"] = {{"kind", kind}, {"rows", std::to_string(nrows)}};
        json results = json::array();
        for (long v = 0; v < nrows; ++v)
            for (long mu = 0; mu <= 2 * v; ++mu)
                results.push_back({{"name", kind + "_" + std::to_string(v) + "_" +
                                                std::to_string(mu)},
                                   {"value", tri.at(v, mu).get_str()},
                                   {"tail_bound", "0"},
                                   {"terms_used", "0"},
                                   {"status", "exact"}});
        out["results"] = results;
        out["version"] = kVersion;
        std::cout << out.dump(2) << "\n";
    } else {
        // CSV: per row, "nu,mu,value" entries joined by ';'
        for (long v = 0; v < nrows; ++v) {
            std::string line;
            for (long mu = 0; mu <= 2 * v; ++mu) {
                if (!line.empty()) line += ';';
                line += std::to_string(v) + ',' + std::to_string(mu) + ',' +
                        tri.at(v, mu).get_str();
            }
            std::cout << line << "\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"error sums with split denominators: computation and verification"};
    app.require_subcommand(1);

    // compute
    auto* compute = app.add_subcommand("compute", "compute an error sum");
    std::string family, mode = "signed", tol_str = "1e-30", format = "text";
    std::string t_str = "1/2", method;
    long l = 2, terms = 0;
    long prec = 256;
    compute->add_option("family", family, "pi|logrho|exp|log1p|zeta2|zeta3")->required();
    compute->add_option("--t", t_str, "rational t as p/q (log1p)");
    compute->add_option("--l", l, "integer l >= 2 (exp)");
    compute->add_option("--mode", mode, "signed|absolute");
    compute->add_option("--method", method, "family-specific method");
    compute->add_option("--terms", terms, "maximum number of terms");
    compute->add_option("--prec", prec, "working precision in bits");
    compute->add_option("--tol", tol_str, "tail tolerance, decimal string");
    compute->add_option("--format", format, "json|csv|text");

    // verify
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite, data_dir = "data";
    long max_n = 50;
    long vprec = 256;
    std::string vformat = "text";
    verify->add_option("suite", suite,
                       "recurrences|closed_forms|integrals|triangles|genfuncs|oeis")
        ->required();
    verify->add_option("--max-n", max_n, "depth bound for exact suites");
    verify->add_option("--prec", vprec, "working precision in bits");
    verify->add_option("--data-dir", data_dir, "fixture directory (oeis suite)");
    verify->add_option("--format", vformat, "json|csv|text");

    // triangle
    auto* triangle = app.add_subcommand("triangle", "export coefficient triangles");
    std::string tkind, tformat = "csv";
    long trows = 5;
    triangle->add_option("kind", tkind, "a|b|c|alpha|beta")->required();
    triangle->add_option("--rows", trows, "number of rows")->check(CLI::PositiveNumber);
    triangle->add_option("--format", tformat, "csv|json");

    // oeis
    auto* oeis = app.add_subcommand("oeis", "compare a b-file against a generator");
    std::string oid, bfile_path;
    long count = 20;
    oeis->add_option("--id", oid, "OEIS id, e.g. A005259")->required();
    oeis->add_option("--bfile", bfile_path, "path to local b-file")->required();
    oeis->add_option("--count", count, "terms to compare");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*compute) {
            if (prec < MPFR_PREC_MIN || prec > 1 << 24)
                throw std::invalid_argument("bad precision");
            es::HPReal tol = es::HPReal::parse(tol_str, prec);
            if (!(tol.sign() > 0)) throw std::invalid_argument("tol must be > 0");
            es::SignMode sm;
            if (mode == "signed") sm = es::SignMode::signed_sum;
            else if (mode == "absolute") sm = es::SignMode::absolute;
            else throw std::invalid_argument("bad mode: " + mode);

            es::ErrorSumReport rep{es::HPReal(prec), 0, es::HPReal(prec), "", false};
            if (family == "pi") {
                rep = es::errsum_pi(sm, prec, tol, terms > 0 ? terms : 400);
            } else if (family == "logrho") {
                rep = es::errsum_logrho(sm, prec, tol, terms > 0 ? terms : 400);
            } else if (family == "zeta2") {
                rep = es::errsum_apery(es::AperyConstant::zeta2, sm, prec, tol,
                                       terms > 0 ? terms : 200);
            } else if (family == "zeta3") {
                rep = es::errsum_apery(es::AperyConstant::zeta3, sm, prec, tol,
                                       terms > 0 ? terms : 200);
            } else if (family == "exp") {
                es::ExpMethod m = es::ExpMethod::erf_form;
                if (method == "cf_sum") m = es::ExpMethod::cf_sum;
                else if (method == "gauss_cf") m = es::ExpMethod::gauss_cf;
                else if (!method.empty() && method != "erf_form")
                    throw std::invalid_argument("bad exp method: " + method);
                rep = es::errsum_exp(l, m, prec, tol);
            } else if (family == "log1p") {
                es::Rat t = parse_rat(t_str);
                es::Log1pMethod m = es::Log1pMethod::closed_form;
                if (method == "series") m = es::Log1pMethod::series;
                else if (!method.empty() && method != "closed_form")
                    throw std::invalid_argument("bad log1p method: " + method);
                rep = es::errsum_log1p(t, m, prec, tol, terms > 0 ? terms : 4000);
            } else {
                throw std::invalid_argument("unknown family: " + family);
            }
            if (!rep.converged && rep.terms_used > 0 && rep.method.find("closed") ==
                std::string::npos && rep.method.find("erf") == std::string::npos) {
                std::cerr << "error: did not converge within term budget\n";
                return 3;
            }
            json params;
            params["family"] = family;
            params["mode"] = mode;
            params["prec"] = std::to_string(prec);
            params["tol"] = tol_str;
            if (family == "log1p") params["t"] = t_str;
            if (family == "exp") params["l"] = std::to_string(l);
            emit("compute", params, {row_from_report(rep.method, rep)}, format);
            return 0;
        }
        if (*verify) return run_verify(suite, max_n, vprec, data_dir, vformat);
        if (*triangle) return run_triangle(tkind, trows, tformat);
        if (*oeis) {
            auto bindings = es::registered_bindings();
            const es::SequenceBinding* bd = nullptr;
            for (const auto& b : bindings)
                if (b.oeis_id == oid) bd = &b;
            if (!bd) {
                std::cerr << "error: no registered binding for " << oid << "\n";
                return 2;
            }
            std::ifstream in(bfile_path);
            if (!in) {
                std::cerr << "error: cannot open " << bfile_path << "\n";
                return 4;
            }
            std::stringstream ss;
            ss << in.rdbuf();
            es::BFile bf;
            try {
                bf = es::parse_bfile(ss.str(), bfile_path);
            } catch (const std::runtime_error& e) {
                std::cerr << "error: " << e.what() << "\n";
                return 4;
            }
            es::OeisReport rep = es::compare(*bd, bf, count);
            json out;
            out["command"] = "oeis";
            out["params"] = {{"id", oid},
                             {"bfile", bfile_path},
                             {"count", std::to_string(count)}};
            out["results"] = json::array(
                {{{"name", "matched"}, {"value", std::to_string(rep.matched)},
                  {"tail_bound", "0"}, {"terms_used", std::to_string(rep.matched)},
                  {"status", rep.ok ? "match" : "mismatch"}},
                 {{"name", "offset_used"}, {"value", std::to_string(rep.offset_used)},
                  {"tail_bound", "0"}, {"terms_used", "0"},
                  {"status", rep.ok ? "match" : "mismatch"}},
                 {{"name", "first_mismatch"}, {"value", std::to_string(rep.first_mismatch)},
                  {"tail_bound", "0"}, {"terms_used", "0"},
                  {"status", rep.ok ? "match" : "mismatch"}}});
            out["version"] = kVersion;
            std::cout << out.dump(2) << "\n";
            return rep.ok ? 0 : 5;
        }
    } catch (const es::divergence_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
