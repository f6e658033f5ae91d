#pragma once
// Section 3: sequences A_n, B_n (pi) and C_n, D_n ((log rho)/sqrt 5),
// their continued fractions, residual identities, and the closed-form
// error sums of Theorems 2 and 3.

#include <stdexcept>
#include <vector>

#include "cf_engine.hpp"
#include "numkernel.hpp"
#include "oracles.hpp"

namespace errsum {

struct PiSeqPair {
    long n;
    Rat A, B;
};

struct LogRhoSeqPair {
    long n;
    Rat C, D;
};

inline PiSeqPair pi_seq(long n) {
    if (n < 0) throw std::invalid_argument("pi_seq: n >= 0");
    auto un = static_cast<unsigned long>(n);
    Rat pre = Rat(2) * Rat(Int(1) << (2 * (un + 1))) / Rat(factorial(un));
    Rat B = 0, A = 0;
    for (long k = 0; k <= n; ++k) {
        Rat pk = Rat(binomial(n, k)) * Rat(2 * k + 3) *
                 pochhammer(Rat(2 * k + 5, 2), un);
        B += pk;
        Rat inner = 0;
        for (long v = 0; v <= k; ++v) {
            Rat t(1, 2 * k - 2 * v + 1);
            if ((k + v) % 2) t = -t;
            inner += t;
        }
        A += pk * inner;
    }
    Rat corr = Rat(Int(1) << (2 * (un + 1)));  // 4^{n+1}
    if (n % 2 == 0) corr = -corr;              // (-4)^{n+1}
    PiSeqPair out{n, pre * A + corr, pre * B};
    if (!(Rat(out.B / 4).get_den() == 1))
        throw std::logic_error("pi_seq: B_n/4 not an integer");
    return out;
}

// The 1/pi generalized CF: convergent n equals B_n/(4 A_n) as a value.
inline GcfSpec pi_gcf() {
    return GcfSpec{Rat(0), [](long d) -> std::pair<Rat, Rat> {
                       if (d == 1) return {Rat(3), Rat(10)};
                       if (d == 2) return {Rat(-14), Rat(25)};
                       long m = d - 1;
                       Rat a = Rat(-m) * (m - 1) * (2 * m - 1) * (2 * m + 1) *
                               (4 * m - 5) * (4 * m + 3) / 9;
                       Rat b = Rat(4 * m + 1) * (4 * m * m + 2 * m - 1);
                       a.canonicalize();
                       return {a, b};
                   }};
}

// Residual A_n - pi*B_n/4 (positive, geometrically decaying).
inline HPReal pi_residual(long n, mpfr_prec_t prec) {
    PiSeqPair s = pi_seq(n);
    mpfr_prec_t wp = prec + 32 + static_cast<mpfr_prec_t>(detail::rat_bits(s.B));
    HPReal pi = const_value("pi", wp);
    HPReal r = HPReal::of(s.A, wp) - pi * HPReal::of(s.B / 4, wp);
    HPReal out(prec);
    mpfr_set(out.raw(), r.raw(), MPFR_RNDN);
    return out;
}

// Upper bound 4(10/3-pi)(n+3/2)(2(6-4*sqrt2))^n, attained with equality at n=0.
// (The often-quoted variant 8(...)(6-4*sqrt2)^n fails numerically for
// n >= 2; max of 4t(1-t)/(2-t) on [0,1] is 2(6-4*sqrt2), giving this bound.)
inline HPReal pi_residual_bound(long n, mpfr_prec_t prec) {
    mpfr_prec_t wp = prec + 32;
    HPReal pi = const_value("pi", wp);
    HPReal c = HPReal::of(Rat(10, 3), wp) - pi;
    HPReal u = (HPReal::of(6L, wp) - HPReal::of(4L, wp) * sqrt(HPReal::of(2L, wp))) *
               HPReal::of(2L, wp);
    return HPReal::of(4L, wp) * c * HPReal::of(Rat(2 * n + 3, 2), wp) *
           pow_ui(u, static_cast<unsigned long>(n));
}

// Error sum for b_n = B_n/4, r_n = A_n (all terms negative; signed = -absolute).
inline ErrorSumReport errsum_pi(SignMode mode, mpfr_prec_t prec, const HPReal& tol,
                                long max_terms = 400) {
    ErrorSumSpec spec{
        [](mpfr_prec_t p) { return const_value("pi", p); },
        [](long n) -> std::pair<Rat, Rat> {
            PiSeqPair s = pi_seq(n);
            return {s.B / 4, s.A};
        },
        mode};
    ErrorSumReport rep = rounded_to(accumulate(spec, tol, max_terms), prec);
    rep.method = mode == SignMode::absolute ? "errsum_pi/absolute" : "errsum_pi/signed";
    return rep;
}

// Thm 2 closed form: sqrt7/49 * log((3-sqrt7)/(3+sqrt7)) - 3pi/2 - 4/7.
inline HPReal thm2_closed_form(mpfr_prec_t prec) {
    mpfr_prec_t wp = prec + 32;
    HPReal s7 = sqrt(HPReal::of(7L, wp));
    HPReal lg = fn_eval("log", (HPReal::of(3L, wp) - s7) / (HPReal::of(3L, wp) + s7), wp);
    HPReal pi = const_value("pi", wp);
    HPReal v = s7 / HPReal::of(49L, wp) * lg -
               HPReal::of(3L, wp) * pi / HPReal::of(2L, wp) - HPReal::of(Rat(4, 7), wp);
    HPReal out(prec);
    mpfr_set(out.raw(), v.raw(), MPFR_RNDN);
    return out;
}

// ---------------------------------------------------------------------------

inline LogRhoSeqPair logrho_seq(long n) {
    if (n < 0) throw std::invalid_argument("logrho_seq: n >= 0");
    auto un = static_cast<unsigned long>(n);
    Rat pre = Rat(Int(1) << (2 * (un + 1))) / Rat(factorial(un));
    Rat D = 0, C = 0;
    Int p5 = 1;
    for (long k = 0; k <= n; ++k) {
        Rat pk = Rat(binomial(n, k)) * Rat(2 * k + 3) *
                 pochhammer(Rat(2 * k + 5, 2), un);
        if ((n + k) % 2) pk = -pk;
        D += pk * Rat(p5);
        Rat inner = 0;
        Int pv = 1;
        for (long v = 0; v <= k; ++v) {
            inner += Rat(pv) / Rat(2 * k - 2 * v + 1);
            pv *= 5;
        }
        C += pk * inner;
        p5 *= 5;
    }
    Rat pow4n = Rat(Int(1) << (2 * un));  // 4^n
    LogRhoSeqPair out{n, pow4n + pre * C, Rat(5) * pre * D};
    if (!(out.D.get_den() == 1))
        throw std::logic_error("logrho_seq: D_n not an integer");
    return out;
}

// The sqrt5/log(rho) generalized CF: convergent n equals D_n/C_n as a value.
inline GcfSpec logrho_gcf() {
    return GcfSpec{Rat(0), [](long d) -> std::pair<Rat, Rat> {
                       if (d == 1) return {Rat(60), Rat(13)};
                       if (d == 2) return {Rat(-7), Rat(80)};
                       long m = d - 1;
                       Rat a = Rat(-m) * (m - 1) * (2 * m - 1) * (2 * m + 1) *
                               (4 * m - 5) * (4 * m + 3) / 9;
                       Rat b = Rat(2) * (4 * m + 1) * (6 * m * m + 3 * m - 1);
                       a.canonicalize();
                       return {a, b};
                   }};
}

inline HPReal logrho_target(mpfr_prec_t prec) {  // (log rho)/sqrt 5
    mpfr_prec_t wp = prec + 16;
    HPReal v = const_value("log_rho", wp) / sqrt(HPReal::of(5L, wp));
    HPReal out(prec);
    mpfr_set(out.raw(), v.raw(), MPFR_RNDN);
    return out;
}

inline HPReal logrho_residual(long n, mpfr_prec_t prec) {
    LogRhoSeqPair s = logrho_seq(n);
    mpfr_prec_t wp = prec + 32 + static_cast<mpfr_prec_t>(detail::rat_bits(s.D));
    HPReal r = HPReal::of(s.C, wp) - logrho_target(wp) * HPReal::of(s.D, wp);
    HPReal out(prec);
    mpfr_set(out.raw(), r.raw(), MPFR_RNDN);
    return out;
}

// Independent route: (5/2)_n (n+1)! / (4 (5/2)_{2n+1}) * 2F1(n+1, n+2; 2n+7/2; -1/4).
inline HPReal logrho_residual_2f1(long n, mpfr_prec_t prec) {
    auto un = static_cast<unsigned long>(n);
    mpfr_prec_t wp = prec + 32;
    Rat pref = pochhammer(Rat(5, 2), un) * Rat(factorial(un + 1)) /
               (Rat(4) * pochhammer(Rat(5, 2), 2 * un + 1));
    // 2F1 by direct series: term_{k+1}/term_k = (a+k)(b+k)/((c+k)(k+1)) * z, z=-1/4
    Rat a(n + 1), b(n + 2), c(4 * n + 7, 2);
    HPReal sum(wp), term = HPReal::of(1L, wp);
    sum += term;
    HPReal cutoff(wp);
    mpfr_set_ui_2exp(cutoff.raw(), 1, -static_cast<mpfr_exp_t>(prec + 8), MPFR_RNDN);
    for (long k = 0; k < 100000; ++k) {
        Rat ratio = -(a + k) * (b + k) / ((c + k) * Rat(k + 1) * 4);
        term *= HPReal::of(ratio, wp);
        sum += term;
        if (abs(term) < cutoff) break;
    }
    HPReal v = HPReal::of(pref, wp) * sum;
    HPReal out(prec);
    mpfr_set(out.raw(), v.raw(), MPFR_RNDN);
    return out;
}

inline ErrorSumReport errsum_logrho(SignMode mode, mpfr_prec_t prec, const HPReal& tol,
                                    long max_terms = 400) {
    ErrorSumSpec spec{
        [](mpfr_prec_t p) { return logrho_target(p); },
        [](long n) -> std::pair<Rat, Rat> {
            LogRhoSeqPair s = logrho_seq(n);
            return {s.D, s.C};
        },
        mode};
    ErrorSumReport rep = rounded_to(accumulate(spec, tol, max_terms), prec);
    rep.method = mode == SignMode::absolute ? "errsum_logrho/absolute" : "errsum_logrho/signed";
    return rep;
}

// Thm 3 closed form:
// ( sqrt(124 sqrt5 - 265) log(1 + sqrt5/2 - sqrt(4 sqrt5 + 5)/2)
//   - sqrt(124 sqrt5 + 265) arccos(sqrt5/2 - 1) ) / (55 sqrt 11) + 1/11.
inline HPReal thm3_closed_form(mpfr_prec_t prec) {
    mpfr_prec_t wp = prec + 32;
    HPReal s5 = sqrt(HPReal::of(5L, wp));
    HPReal c265 = HPReal::of(124L, wp) * s5;
    HPReal lg_arg = HPReal::of(1L, wp) + s5 / HPReal::of(2L, wp) -
                    sqrt(HPReal::of(4L, wp) * s5 + HPReal::of(5L, wp)) / HPReal::of(2L, wp);
    HPReal v = (sqrt(c265 - HPReal::of(265L, wp)) * fn_eval("log", lg_arg, wp) -
                sqrt(c265 + HPReal::of(265L, wp)) *
                    fn_eval("arccos", s5 / HPReal::of(2L, wp) - HPReal::of(1L, wp), wp)) /
                   (HPReal::of(55L, wp) * sqrt(HPReal::of(11L, wp))) +
               HPReal::of(Rat(1, 11), wp);
    HPReal out(prec);
    mpfr_set(out.raw(), v.raw(), MPFR_RNDN);
    return out;
}

}  // namespace errsum
