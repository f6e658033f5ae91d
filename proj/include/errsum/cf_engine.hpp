#pragma once
// Generalized continued fractions, regular CF expansion of reals,
// minor convergents, and error-sum accumulation with geometric tail bounds.

#include <deque>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hpreal.hpp"
#include "numkernel.hpp"

namespace errsum {

// b0 + a1/(b1 + a2/(b2 + ...)); terms(n) -> (a_n, b_n) for n >= 1.
struct GcfSpec {
    Rat b0;
    std::function<std::pair<Rat, Rat>(long)> terms;
};

struct Convergent {
    Int p, q;
    long index;
};

// Exact value of the depth-truncated CF via backward recurrence.
inline Rat eval_gcf(const GcfSpec& spec, long depth) {
    if (depth < 0) throw std::invalid_argument("eval_gcf: depth >= 0");
    if (depth == 0) return spec.b0;
    Rat tail = spec.terms(depth).second;
    for (long n = depth - 1; n >= 1; --n) {
        if (tail == 0) throw std::domain_error("eval_gcf: zero denominator");
        tail = spec.terms(n).second + spec.terms(n + 1).first / tail;
    }
    if (tail == 0) throw std::domain_error("eval_gcf: zero denominator");
    return spec.b0 + spec.terms(1).first / tail;
}

// Forward three-term recurrence P_n = b_n P_{n-1} + a_n P_{n-2};
// returns P_n/Q_n as (numerator, denominator) rationals for n = 1..depth.
inline std::vector<std::pair<Rat, Rat>> gcf_convergents(const GcfSpec& spec, long depth) {
    if (depth < 1) throw std::invalid_argument("gcf_convergents: depth >= 1");
    std::vector<std::pair<Rat, Rat>> out;
    Rat pm2 = 1, qm2 = 0;       // P_{-1}, Q_{-1}
    Rat pm1 = spec.b0, qm1 = 1; // P_0, Q_0
    for (long n = 1; n <= depth; ++n) {
        auto [a, b] = spec.terms(n);
        Rat p = b * pm1 + a * pm2;
        Rat q = b * qm1 + a * qm2;
        out.emplace_back(p, q);
        pm2 = pm1;
        qm2 = qm1;
        pm1 = p;
        qm1 = q;
    }
    return out;
}

struct CfExpansion {
    std::vector<Int> quotients;          // a_0, a_1, ...
    std::vector<Convergent> convergents; // p_n/q_n, same indexing
    bool exhausted = false;              // stopped on ambiguous floor (precision limit)
};

namespace detail {

inline Int rat_floor(const Rat& x) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return q;
}

inline CfExpansion interval_cf(Rat lo, Rat hi, long max_terms) {
    CfExpansion out;
    Int pm2 = 0, qm2 = 1, pm1 = 1, qm1 = 0;
    for (long n = 0; n < max_terms; ++n) {
        Int alo = rat_floor(lo), ahi = rat_floor(hi);
        bool exact_end = (lo == hi && lo == Rat(alo));
        if (alo != ahi) {
            out.exhausted = true;
            break;
        }
        Int a = alo;
        if (n > 0 && a < 1) {  // regular CF needs a_n >= 1 past index 0
            out.exhausted = true;
            break;
        }
        out.quotients.push_back(a);
        Int p = a * pm1 + pm2, q = a * qm1 + qm2;
        out.convergents.push_back({p, q, n});
        pm2 = pm1;
        qm2 = qm1;
        pm1 = p;
        qm1 = q;
        if (exact_end) break;  // rational input: Euclidean expansion terminated
        Rat fl = lo - Rat(a), fh = hi - Rat(a);
        if (fl == 0 || fh == 0) {
            // an endpoint hit an integer: cannot invert safely; stop here
            if (!(lo == hi)) out.exhausted = true;
            break;
        }
        Rat nlo = 1 / fh, nhi = 1 / fl;  // reciprocal swaps the interval
        lo = nlo;
        hi = nhi;
    }
    return out;
}

}  // namespace detail

// Expansion of an exact rational (plain Euclidean algorithm).
inline CfExpansion regular_cf_expand(const Rat& x, long max_terms) {
    return detail::interval_cf(x, x, max_terms);
}

// Expansion of a finite-precision real on the interval [x-ulp, x+ulp];
// stops (exhausted=true) when the endpoints disagree on the floor.
inline CfExpansion regular_cf_expand(const HPReal& x, long max_terms) {
    Rat mid = x.to_rational();
    Rat u = x.ulp();
    return detail::interval_cf(mid - u, mid + u, max_terms);
}

struct MinorConvergent {
    long n;   // CF index
    Int b;    // 1 <= b <= a_n
    Int p, q; // b*p_{n-1}+p_{n-2}, b*q_{n-1}+q_{n-2}
};

inline std::vector<MinorConvergent> minor_convergents(const std::vector<Int>& quotients) {
    std::vector<MinorConvergent> out;
    if (quotients.empty()) return out;
    // p_{-1}=1, q_{-1}=0; p_0 = a_0, q_0 = 1; enumerate b = 1..a_n for n >= 1
    Int pp2 = 1, qq2 = 0;
    Int pp1 = quotients[0], qq1 = 1;
    for (std::size_t n = 1; n < quotients.size(); ++n) {
        for (Int b = 1; b <= quotients[n]; ++b) {
            out.push_back({static_cast<long>(n), b, b * pp1 + pp2, b * qq1 + qq2});
        }
        Int p = quotients[n] * pp1 + pp2, q = quotients[n] * qq1 + qq2;
        pp2 = pp1;
        qq2 = qq1;
        pp1 = p;
        qq1 = q;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Error-sum accumulation.

enum class SignMode { signed_sum, absolute };

struct ErrorSumSpec {
    // alpha at a requested precision (re-evaluated lazily as coefficients grow)
    std::function<HPReal(mpfr_prec_t)> target;
    // n >= 0 -> (b_n, r_n); term is b_n*alpha - r_n
    std::function<std::pair<Rat, Rat>(long)> terms;
    SignMode sign_mode = SignMode::absolute;
};

struct ErrorSumReport {
    HPReal value;
    long terms_used = 0;
    HPReal tail_bound;
    std::string method;
    bool converged = false;
};

class divergence_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Round a report's value/tail to the precision requested by the caller.
inline ErrorSumReport rounded_to(ErrorSumReport rep, mpfr_prec_t prec) {
    HPReal v(prec), t(prec);
    mpfr_set(v.raw(), rep.value.raw(), MPFR_RNDN);
    mpfr_set(t.raw(), rep.tail_bound.raw(), MPFR_RNDU);
    rep.value = v;
    rep.tail_bound = t;
    return rep;
}

namespace detail {
inline std::size_t rat_bits(const Rat& q) {
    return mpz_sizeinbase(q.get_num().get_mpz_t(), 2) +
           mpz_sizeinbase(q.get_den().get_mpz_t(), 2);
}
}  // namespace detail

inline ErrorSumReport accumulate(const ErrorSumSpec& spec, const HPReal& tol,
                                 long max_terms) {
    if (!(tol.sign() > 0)) throw std::invalid_argument("accumulate: tol > 0 required");
    mpfr_prec_t base = tol.prec() + 32;
    mpfr_prec_t alpha_prec = base + 64;
    HPReal alpha = spec.target(alpha_prec);

    HPReal sum(base + 64);
    std::deque<HPReal> hist;  // last |term| values
    long n = 0;
    bool converged = false;
    HPReal tail(base);
    int grow_streak = 0;
    int zero_streak = 0;
    for (; n < max_terms; ++n) {
        auto [b, r] = spec.terms(n);
        mpfr_prec_t need =
            base + 16 + static_cast<mpfr_prec_t>(std::max(detail::rat_bits(b),
                                                          detail::rat_bits(r)));
        if (need > alpha_prec) {
            alpha_prec = need + need / 2;
            alpha = spec.target(alpha_prec);
        }
        HPReal term = HPReal::of(b, need) * alpha - HPReal::of(r, need);
        HPReal at = abs(term);
        sum += (spec.sign_mode == SignMode::absolute) ? at : term;

        if (at.is_zero()) {
            if (++zero_streak >= 3) {
                tail = HPReal::of(0L, base);
                converged = true;
                ++n;
                break;
            }
            hist.clear();
            continue;
        }
        zero_streak = 0;
        hist.push_back(at);
        if (hist.size() > 4) hist.pop_front();
        if (hist.size() == 4) {
            HPReal rhat(base);
            bool first = true;
            for (std::size_t i = 1; i < hist.size(); ++i) {
                HPReal ratio = hist[i] / hist[i - 1];
                if (first || ratio > rhat) rhat = ratio;
                first = false;
            }
            if (rhat < HPReal::of(1L, base)) {
                grow_streak = 0;
                tail = hist.back() * rhat / (HPReal::of(1L, base) - rhat);
                if (tail < tol) {
                    converged = true;
                    ++n;
                    break;
                }
            } else if (++grow_streak >= 16) {
                throw divergence_error("accumulate: |terms| growing persistently");
            }
        }
    }
    HPReal value(tol.prec() + 32);
    mpfr_set(value.raw(), sum.raw(), MPFR_RNDN);
    return ErrorSumReport{value, n, tail, "accumulate", converged};
}

}  // namespace errsum
