#pragma once
// Section 4: B_n, A_n for log(1+t), recurrence (4.20), Lemma 4.1,
// closed-form error sum (Cor 4.1), ODE check (Cor 4.2), and the
// Cor 4.3 irrationality-inequality audit.

#include <stdexcept>
#include <string>
#include <vector>

#include "cf_engine.hpp"
#include "numkernel.hpp"
#include "oracles.hpp"

namespace errsum {

struct Log1pSeqPair {
    long n;
    Rat A, B;
    std::vector<Rat> c_partial;  // c_0..c_n
};

inline void log1p_check_domain(const Rat& t) {
    if (!(t > Rat(-1) && t <= Rat(1)))
        throw std::domain_error("log1p family: need -1 < t <= 1");
}

// c_k = sum_{m=1..k} (-1)^{m-1} t^m / m.
inline std::vector<Rat> log1p_c(const Rat& t, long n) {
    std::vector<Rat> c(static_cast<std::size_t>(n) + 1, Rat(0));
    Rat tp = 1;
    for (long m = 1; m <= n; ++m) {
        tp *= t;
        Rat term = tp / m;
        if (m % 2 == 0) term = -term;
        c[static_cast<std::size_t>(m)] = c[static_cast<std::size_t>(m - 1)] + term;
    }
    return c;
}

inline Log1pSeqPair log1p_seq(const Rat& t, long n) {
    log1p_check_domain(t);
    if (n < 0) throw std::invalid_argument("log1p_seq: n >= 0");
    std::vector<Rat> c = log1p_c(t, n);
    Rat A = 0, B = 0;
    for (long k = 0; k <= n; ++k) {
        Rat w = Rat(binomial(n, k)) * Rat(binomial(n + k, k));
        Rat tp = 1;
        for (long i = 0; i < n - k; ++i) tp *= t;
        B += w * tp;
        A += w * tp * c[static_cast<std::size_t>(k)];
    }
    return {n, A, B, std::move(c)};
}

// (4.10) pre-transform CF whose convergent pairs equal (A_n, B_n) exactly:
// a_1 = 2t, b_1 = 2+t, a_{n+1} = -n t^2/(n+1), b_{n+1} = (2n+1)(2+t)/(n+1).
inline GcfSpec log1p_gcf(const Rat& t) {
    return GcfSpec{Rat(0), [t](long d) -> std::pair<Rat, Rat> {
                       if (d == 1) return {2 * t, 2 + t};
                       long n = d - 1;
                       return {Rat(-n) * t * t / (n + 1),
                               Rat(2 * n + 1) * (2 + t) / (n + 1)};
                   }};
}

struct RecurrenceReport {
    bool ok = true;
    long first_failure = -1;
};

// (n+1)X_{n+1} - (2n+1)(2+t)X_n + n t^2 X_{n-1} = 0 for X = A and X = B,
// plus the Vandermonde side condition sum (-1)^k C(n,k)C(n+k,k)/(k+1) = 0.
inline RecurrenceReport verify_recurrence_420(const Rat& t, long n_max) {
    log1p_check_domain(t);
    std::vector<Rat> A, B;
    for (long n = 0; n <= n_max; ++n) {
        Log1pSeqPair s = log1p_seq(t, n);
        A.push_back(s.A);
        B.push_back(s.B);
    }
    for (long n = 1; n < n_max; ++n) {
        auto idx = static_cast<std::size_t>(n);
        Rat lhsA = Rat(n + 1) * A[idx + 1] - Rat(2 * n + 1) * (2 + t) * A[idx] +
                   Rat(n) * t * t * A[idx - 1];
        Rat lhsB = Rat(n + 1) * B[idx + 1] - Rat(2 * n + 1) * (2 + t) * B[idx] +
                   Rat(n) * t * t * B[idx - 1];
        if (lhsA != 0 || lhsB != 0) return {false, n};
    }
    for (long n = 1; n <= n_max; ++n) {
        Rat s = 0;
        for (long k = 0; k <= n; ++k) {
            Rat term = Rat(binomial(n, k)) * Rat(binomial(n + k, k)) / Rat(k + 1);
            if (k % 2) term = -term;
            s += term;
        }
        if (s != 0) return {false, n};
    }
    return {};
}

// Lemma 4.1: B_n log(1+t) - A_n = t^{2n+1} int_0^1 x^n(1-x)^n/(1+tx)^{n+1} dx.
// Returns (exact-side value, quadrature value).
inline std::pair<HPReal, IntegralResult> lemma41_check(const Rat& t, long n,
                                                       mpfr_prec_t prec) {
    log1p_check_domain(t);
    Log1pSeqPair s = log1p_seq(t, n);
    mpfr_prec_t wp = prec + 32 + static_cast<mpfr_prec_t>(detail::rat_bits(s.B));
    HPReal lhs = HPReal::of(s.B, wp) * fn_eval("log1p", t, wp) - HPReal::of(s.A, wp);
    HPReal exact(prec);
    mpfr_set(exact.raw(), lhs.raw(), MPFR_RNDN);

    HPReal ht = HPReal::of(t, prec + 32);
    QuadratureSpec qs;
    qs.dimension = 1;
    qs.nodes = 32;
    qs.depth = 6;
    qs.refine = {0, 0, 0};  // smooth integrand on [0,1]
    auto un = static_cast<unsigned long>(n);
    IntegralResult ir = integrate(
        [&](const std::vector<HPReal>& x) {
            const HPReal& xx = x[0];
            HPReal one = HPReal::of(1L, xx.prec());
            HPReal num = pow_ui(xx * (one - xx), un);
            HPReal den = pow_ui(one + ht * xx, un + 1);
            return num / den;
        },
        qs, prec);
    HPReal scale = pow_ui(ht, 2 * un + 1);
    ir.value = ir.value * scale;
    ir.error_estimate = ir.error_estimate * abs(scale);
    return {exact, ir};
}

// Cor 4.1 closed form:
// (2/sqrt(3+2t-t^2)) (arctan((1+t)/sqrt(3+2t-t^2)) - arctan((1-t)/sqrt(3+2t-t^2))).
inline HPReal log1p_closed_form(const Rat& t, mpfr_prec_t prec) {
    log1p_check_domain(t);
    mpfr_prec_t wp = prec + 32;
    HPReal ht = HPReal::of(t, wp);
    HPReal one = HPReal::of(1L, wp);
    HPReal disc = HPReal::of(3L, wp) + HPReal::of(2L, wp) * ht - ht * ht;
    HPReal d = sqrt(disc);
    HPReal v = HPReal::of(2L, wp) / d *
               (fn_eval("arctan", (one + ht) / d, wp) - fn_eval("arctan", (one - ht) / d, wp));
    HPReal out(prec);
    mpfr_set(out.raw(), v.raw(), MPFR_RNDN);
    return out;
}

enum class Log1pMethod { series, closed_form };

inline ErrorSumReport errsum_log1p(const Rat& t, Log1pMethod method, mpfr_prec_t prec,
                                   const HPReal& tol, long max_terms = 4000) {
    log1p_check_domain(t);
    if (method == Log1pMethod::closed_form) {
        HPReal v = log1p_closed_form(t, prec);
        return ErrorSumReport{v, 0, HPReal::of(0L, prec), "errsum_log1p/closed_form", true};
    }
    ErrorSumSpec spec{
        [t](mpfr_prec_t p) { return fn_eval("log1p", t, p); },
        [t](long n) -> std::pair<Rat, Rat> {
            Log1pSeqPair s = log1p_seq(t, n);
            return {s.B, s.A};
        },
        SignMode::absolute};
    ErrorSumReport rep = rounded_to(accumulate(spec, tol, max_terms), prec);
    rep.method = "errsum_log1p/series";
    return rep;
}

// Cor 4.2 ODE residual (3+2t-t^2) f' + (1-t) f - 3 with f' by central difference.
inline HPReal ode_check(const std::vector<Rat>& samples, const Rat& h, mpfr_prec_t prec) {
    HPReal maxres(prec);
    for (const Rat& t : samples) {
        HPReal fp = log1p_closed_form(t + h, prec);
        HPReal fm = log1p_closed_form(t - h, prec);
        HPReal f = log1p_closed_form(t, prec);
        HPReal fd = (fp - fm) / HPReal::of(2 * h, prec);
        HPReal ht = HPReal::of(t, prec);
        HPReal res = (HPReal::of(3L, prec) + HPReal::of(2L, prec) * ht - ht * ht) * fd +
                     (HPReal::of(1L, prec) - ht) * f - HPReal::of(3L, prec);
        if (abs(res) > maxres) maxres = abs(res);
    }
    return maxres;
}

struct AuditRow {
    long n;
    Int int_B, int_A;   // b^n d_n B_n, b^n d_n A_n
    HPReal linear_form; // |b^n d_n B_n log(1+a/b) - b^n d_n A_n|
};

// Cor 4.3 audit: requires 0 < a/b <= 1 and e a^2 < 4b.
inline std::vector<AuditRow> irrationality_audit(long a, long b, long n_max,
                                                 mpfr_prec_t prec) {
    Rat t(a, b);
    t.canonicalize();
    if (!(t > 0 && t <= 1)) throw std::domain_error("irrationality_audit: 0 < a/b <= 1");
    HPReal e = const_value("e", prec);
    if (!(e * HPReal::of(a * a, prec) < HPReal::of(4 * b, prec)))
        throw std::domain_error("irrationality_audit: hypothesis e a^2 < 4b violated");
    std::vector<AuditRow> rows;
    Int bp = 1;
    for (long n = 1; n <= n_max; ++n) {
        bp *= b;
        Int dn = lcm_upto(static_cast<unsigned long>(n));
        Log1pSeqPair s = log1p_seq(t, n);
        Rat iB = Rat(bp) * Rat(dn) * s.B;
        Rat iA = Rat(bp) * Rat(dn) * s.A;
        if (iB.get_den() != 1 || iA.get_den() != 1)
            throw std::logic_error("irrationality_audit: cleared values not integers");
        mpfr_prec_t wp = prec + 32 + static_cast<mpfr_prec_t>(detail::rat_bits(iB));
        HPReal lf = abs(HPReal::of(iB, wp) * fn_eval("log1p", t, wp) - HPReal::of(iA, wp));
        HPReal lfo(prec);
        mpfr_set(lfo.raw(), lf.raw(), MPFR_RNDN);
        rows.push_back({n, iB.get_num(), iA.get_num(), lfo});
    }
    return rows;
}

}  // namespace errsum
