#pragma once
// Section 2: error sums for e^{1/l} (regular-CF summation, erf closed form,
// Gauss-type CF of 1F1) and Cor 1's minor-convergent sum for e with
// Cohn's exact integral residuals.

#include <deque>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "cf_engine.hpp"
#include "numkernel.hpp"
#include "oracles.hpp"

namespace errsum {

struct ExactExpIntegral {
    Rat alpha, beta;  // value = alpha*e + beta
};

enum class ExpMethod { cf_sum, erf_form, gauss_cf };
enum class CohnBranch { idx_3m_minus_1, idx_3m, idx_3m_plus_1 };

namespace detail {

// int_0^1 x^p e^x dx as alpha*e + beta (integration by parts).
inline ExactExpIntegral exp_power_integral(long p) {
    Rat a = 1, b = -1;  // I_0 = e - 1
    for (long pp = 1; pp <= p; ++pp) {
        Rat na = Rat(1) - Rat(pp) * a;
        Rat nb = -Rat(pp) * b;
        a = na;
        b = nb;
    }
    return {a, b};
}

// int_0^1 x^j (x-1)^k e^x dx, exact.
inline ExactExpIntegral exp_jk_integral(long j, long k) {
    Rat A = 0, B = 0;
    for (long i = 0; i <= k; ++i) {
        Rat c = Rat(binomial(k, i));
        if ((k - i) % 2) c = -c;
        ExactExpIntegral ip = exp_power_integral(j + i);
        A += c * ip.alpha;
        B += c * ip.beta;
    }
    return {A, B};
}

// Tail estimate for |term| sequences that decay superexponentially but
// non-monotonically (e's quotients repeat the pattern 1, 1, 2k, so adjacent
// ratios periodically exceed 1).  Uses the geometric-mean ratio across a
// 4-window, with the worst single-step ratio as a safety factor.
inline bool window_tail(const std::deque<HPReal>& hist, HPReal& tail) {
    mpfr_prec_t wp = hist.back().prec();
    HPReal one = HPReal::of(1L, wp);
    HPReal rbar(wp);
    HPReal span = hist.back() / hist.front();
    mpfr_rootn_ui(rbar.raw(), span.raw(), 3, MPFR_RNDU);
    if (!(rbar < one)) return false;
    HPReal m = one;
    for (std::size_t i = 1; i < hist.size(); ++i) {
        HPReal r = hist[i] / hist[i - 1];
        if (r > m) m = r;
    }
    tail = hist.back() * m / (one - rbar);
    return true;
}

}  // namespace detail

// Cohn residuals: q_idx e - p_idx as exact alpha*e + beta, idx in
// {3m-1, 3m, 3m+1} (index -1 uses the p_{-1}=1, q_{-1}=0 convention).
inline ExactExpIntegral cohn_residual(long m, CohnBranch branch) {
    if (m < 0) throw std::invalid_argument("cohn_residual: m >= 0");
    Rat fm = Rat(factorial(static_cast<unsigned long>(m)));
    switch (branch) {
        case CohnBranch::idx_3m_minus_1: {
            ExactExpIntegral r = detail::exp_jk_integral(m + 1, m);
            return {-r.alpha / fm, -r.beta / fm};
        }
        case CohnBranch::idx_3m: {
            ExactExpIntegral r = detail::exp_jk_integral(m, m + 1);
            return {-r.alpha / fm, -r.beta / fm};
        }
        case CohnBranch::idx_3m_plus_1: {
            Rat fm1 = Rat(factorial(static_cast<unsigned long>(m) + 1));
            ExactExpIntegral r = detail::exp_jk_integral(m + 1, m + 1);
            return {r.alpha / fm1, r.beta / fm1};
        }
    }
    throw std::logic_error("cohn_residual: unreachable");
}

// 1F1(1, 3/2; z2) by direct series, exact rational terms.
inline HPReal hyp1f1_series(const Rat& z2, mpfr_prec_t prec) {
    if (z2 < 0) throw std::invalid_argument("hyp1f1: z2 >= 0");
    mpfr_prec_t wp = prec + 32;
    HPReal sum(wp), cutoff(wp);
    mpfr_set_ui_2exp(cutoff.raw(), 1, -static_cast<mpfr_exp_t>(prec + 16), MPFR_RNDN);
    Rat term = 1;        // z2^k / (3/2)_k
    Rat denom(3, 2);     // next Pochhammer factor
    for (long k = 0; k < 100000; ++k) {
        HPReal ht = HPReal::of(term, wp);
        sum += ht;
        if (k > 0 && abs(ht) < cutoff) break;
        term = term * z2 / denom;
        denom += 1;
    }
    HPReal out(prec);
    mpfr_set(out.raw(), sum.raw(), MPFR_RNDN);
    return out;
}

// Thm 1's Gauss-type CF with parameter z2 (= 1/l): a_1 = z2, b_1 = 1/2,
// a_{m+1} = (-1)^m m z2 / 2, b_{m+1} = (2m+1)/2.  Value = 2 z2 1F1(1,3/2;z2).
inline GcfSpec gauss_cf_spec(const Rat& z2) {
    return GcfSpec{Rat(0), [z2](long n) -> std::pair<Rat, Rat> {
                       if (n == 1) return {z2, Rat(1, 2)};
                       long m = n - 1;
                       Rat a = Rat(m) * z2 / 2;
                       if (m % 2) a = -a;
                       return {a, Rat(2 * m + 1, 2)};
                   }};
}

// Backward evaluation of a GcfSpec in HPReal at the given depth.
inline HPReal eval_gcf_real(const GcfSpec& spec, long depth, mpfr_prec_t prec) {
    mpfr_prec_t wp = prec + 32;
    auto tb = spec.terms(depth);
    HPReal tail = HPReal::of(tb.second, wp);
    for (long n = depth - 1; n >= 1; --n) {
        auto t = spec.terms(n);
        tail = HPReal::of(t.second, wp) + HPReal::of(spec.terms(n + 1).first, wp) / tail;
    }
    return HPReal::of(spec.b0, wp) + HPReal::of(spec.terms(1).first, wp) / tail;
}

// CF route for 1F1: evaluate at increasing even depths until stable.
inline HPReal hyp1f1_cf(const Rat& z2, mpfr_prec_t prec, const HPReal& tol) {
    if (z2 == 0) return HPReal::of(1L, prec);
    GcfSpec spec = gauss_cf_spec(z2);
    HPReal prev = eval_gcf_real(spec, 2, prec);
    for (long d = 4; d <= 4096; d += 2) {
        HPReal cur = eval_gcf_real(spec, d, prec);
        if (abs(cur - prev) < tol / HPReal::of(4L, tol.prec()))
            return cur / (HPReal::of(2L, prec + 32) * HPReal::of(z2, prec + 32));
        prev = cur;
    }
    throw std::runtime_error("hyp1f1_cf: CF did not stabilize");
}

// Cross-validated 1F1(1,3/2;z2): series value, asserted against the CF route.
inline HPReal hyp1f1_one_half(const Rat& z2, mpfr_prec_t prec) {
    HPReal s = hyp1f1_series(z2, prec);
    if (z2 != 0) {
        HPReal ulp4(prec);
        mpfr_set_ui_2exp(ulp4.raw(), 1,
                         static_cast<mpfr_exp_t>(mpfr_get_exp(s.raw())) -
                             static_cast<mpfr_exp_t>(prec) + 3,
                         MPFR_RNDN);
        HPReal c = hyp1f1_cf(z2, prec, ulp4);
        if (!(abs(s - c) <= ulp4))
            throw std::runtime_error("hyp1f1_one_half: series/CF disagreement");
    }
    return s;
}

// E(e^{1/l}) by one of the three Thm 1 routes.
inline ErrorSumReport errsum_exp(long l, ExpMethod method, mpfr_prec_t prec,
                                 const HPReal& tol) {
    if (l < 2) throw std::invalid_argument("errsum_exp: l >= 2 required");
    if (method == ExpMethod::erf_form) {
        mpfr_prec_t wp = prec + 32;
        HPReal invl = HPReal::of(Rat(1, l), wp);
        HPReal v = fn_eval("exp", invl, wp) * sqrt(const_value("pi", wp) / HPReal::of(l, wp)) *
                   fn_eval("erf", HPReal::of(1L, wp) / sqrt(HPReal::of(l, wp)), wp);
        HPReal out(prec);
        mpfr_set(out.raw(), v.raw(), MPFR_RNDN);
        return ErrorSumReport{out, 0, HPReal::of(0L, prec), "errsum_exp/erf_form", true};
    }
    if (method == ExpMethod::gauss_cf) {
        GcfSpec spec = gauss_cf_spec(Rat(1, l));
        HPReal prev = eval_gcf_real(spec, 2, prec);
        for (long d = 4; d <= 4096; d += 2) {
            HPReal cur = eval_gcf_real(spec, d, prec);
            HPReal diff = abs(cur - prev);
            if (diff < tol / HPReal::of(4L, tol.prec()))
                return ErrorSumReport{cur, d, diff, "errsum_exp/gauss_cf", true};
            prev = cur;
        }
        throw std::runtime_error("errsum_exp: gauss_cf did not stabilize");
    }
    // cf_sum: sum |e^{1/l} q_n - p_n| over regular-CF convergents.
    mpfr_prec_t wp = prec + 64;
    HPReal alpha = fn_eval("exp", Rat(1, l), wp);
    CfExpansion cf = regular_cf_expand(alpha, 100000);
    auto convs = std::make_shared<std::vector<Convergent>>(cf.convergents);
    ErrorSumSpec spec{
        [l](mpfr_prec_t p) { return fn_eval("exp", Rat(1, l), p); },
        [convs](long n) -> std::pair<Rat, Rat> {
            if (n >= static_cast<long>(convs->size()))
                throw std::runtime_error("errsum_exp: precision-exhausted (raise prec)");
            return {Rat((*convs)[static_cast<std::size_t>(n)].q),
                    Rat((*convs)[static_cast<std::size_t>(n)].p)};
        },
        SignMode::absolute};
    ErrorSumReport rep = accumulate(spec, tol, static_cast<long>(convs->size()));
    rep.method = "errsum_exp/cf_sum";
    return rep;
}

// Cor 1: sum over all minor convergents of e, direct or weighted route.
inline ErrorSumReport minor_convergent_sum_e(bool weighted, mpfr_prec_t prec,
                                             const HPReal& tol) {
    mpfr_prec_t wp = prec + 64;
    HPReal e = const_value("e", wp);
    CfExpansion cf = regular_cf_expand(e, 100000);
    const auto& a = cf.quotients;
    HPReal one = HPReal::of(1L, wp);

    HPReal sum(wp);
    std::deque<HPReal> hist;
    HPReal tail(wp);
    bool converged = false;
    long used = 0;
    if (!weighted) {
        // e-2 + sum_{n>=1} sum_{b=1..a_n} |q' e - p'|
        sum = e - HPReal::of(2L, wp);
        Int pp2 = 1, qq2 = 0, pp1 = a[0], qq1 = 1;
        for (std::size_t n = 1; n + 1 < a.size(); ++n) {
            HPReal group(wp);
            for (Int b = 1; b <= a[n]; ++b) {
                Int q = b * qq1 + qq2, p = b * pp1 + pp2;
                group += abs(HPReal::of(q, wp) * e - HPReal::of(p, wp));
            }
            sum += group;
            used = static_cast<long>(n);
            Int p = a[n] * pp1 + pp2, q = a[n] * qq1 + qq2;
            pp2 = pp1;
            qq2 = qq1;
            pp1 = p;
            qq1 = q;
            hist.push_back(group);
            if (hist.size() > 4) hist.pop_front();
            if (hist.size() == 4 && detail::window_tail(hist, tail) && tail < tol) {
                converged = true;
                break;
            }
        }
    } else {
        // e-1 + sum_{v>=0} (-1)^{v+1} (q_v e - p_v) ((1/2)(1+a_{v+1})a_{v+1} - a_{v+2})
        sum = e - one;
        Int pm2 = 1, qm2 = 0, pm1 = a[0], qm1 = 1;
        for (std::size_t v = 0; v + 2 < a.size(); ++v) {
            Int p, q;
            if (v == 0) {
                p = a[0];
                q = 1;
            } else {
                p = a[v] * pm1 + pm2;
                q = a[v] * qm1 + qm2;
                pm2 = pm1;
                qm2 = qm1;
                pm1 = p;
                qm1 = q;
            }
            Rat w = Rat(1, 2) * Rat(1 + a[v + 1]) * Rat(a[v + 1]) - Rat(a[v + 2]);
            HPReal term = (HPReal::of(q, wp) * e - HPReal::of(p, wp)) * HPReal::of(w, wp);
            if (v % 2 == 0) term = -term;
            sum += term;
            used = static_cast<long>(v) + 1;
            HPReal at = abs(term);
            if (at.is_zero()) continue;  // w vanishes when a_{v+1} = a_{v+2} = 1
            hist.push_back(at);
            if (hist.size() > 4) hist.pop_front();
            if (hist.size() == 4 && detail::window_tail(hist, tail) && tail < tol) {
                converged = true;
                break;
            }
        }
    }
    HPReal value(prec);
    mpfr_set(value.raw(), sum.raw(), MPFR_RNDN);
    return ErrorSumReport{value, used, tail,
                          weighted ? "minor_convergent_sum_e/weighted"
                                   : "minor_convergent_sum_e/direct",
                          converged};
}

}  // namespace errsum
