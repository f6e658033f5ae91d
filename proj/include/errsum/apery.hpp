#pragma once
// Section 5.1-5.2: Apery sequences and CFs for zeta(2), zeta(3); direct
// error sums for Eqs (5.10)/(5.20)/(5.30); Thm 5.10 multisums; quadrature
// cross-checks of the rational-function integrals.

#include <stdexcept>
#include <string>
#include <vector>

#include "cf_engine.hpp"
#include "numkernel.hpp"
#include "oracles.hpp"

namespace errsum {

enum class AperyConstant { zeta2, zeta3 };

struct AperySeqPair {
    long n;
    Rat num;  // A_n (zeta2) or C_n (zeta3)
    Int den;  // B_n (zeta2) or D_n (zeta3)
};

inline AperySeqPair apery_pair(AperyConstant c, long n) {
    if (n < 0) throw std::invalid_argument("apery_pair: n >= 0");
    AperySeqPair out{n, Rat(0), Int(0)};
    if (c == AperyConstant::zeta2) {
        // B_n = sum C(n,k)^2 C(n+k,k); A_n = sum ... (2 sum (-1)^{m-1}/m^2 + inner)
        Rat outer = 0;
        for (long m = 1; m <= n; ++m) {
            Rat t(2, m * m);
            t.canonicalize();  // mpq_class(a, b) does not reduce by itself
            if (m % 2 == 0) t = -t;
            outer += t;
        }
        for (long k = 0; k <= n; ++k) {
            Int w = binomial(n, k) * binomial(n, k) * binomial(n + k, k);
            out.den += w;
            Rat inner = outer;
            for (long m = 1; m <= k; ++m) {
                Rat t = Rat(1) / (Rat(m * m) * Rat(binomial(n, m) * binomial(n + m, m)));
                if ((n + m) % 2 == 0) t = -t;
                inner += t;
            }
            out.num += Rat(w) * inner;
        }
    } else {
        // D_n = sum C(n,k)^2 C(n+k,k)^2; C_n = sum ... (sum 1/m^3 + inner)
        Rat outer = 0;
        for (long m = 1; m <= n; ++m) outer += Rat(1, m * m * m);
        for (long k = 0; k <= n; ++k) {
            Int bk = binomial(n, k) * binomial(n + k, k);
            Int w = bk * bk;
            out.den += w;
            Rat inner = outer;
            for (long m = 1; m <= k; ++m) {
                Rat t = Rat(1) / (Rat(2 * m * m * m) * Rat(binomial(n, m) * binomial(n + m, m)));
                if (m % 2 == 0) t = -t;
                inner += t;
            }
            out.num += Rat(w) * inner;
        }
    }
    return out;
}

// zeta(2) = 5/3 + 1^4/25 + 2^4/69 + ... ; b_m = 11(m-1)^2 + 11(m-1) + 3.
inline GcfSpec apery_gcf(AperyConstant c) {
    if (c == AperyConstant::zeta2)
        return GcfSpec{Rat(0), [](long d) -> std::pair<Rat, Rat> {
                           long m = d - 1;
                           Rat a = d == 1 ? Rat(5) : Rat(m * m) * Rat(m * m);
                           Rat b = Rat(11 * m * m + 11 * m + 3);
                           return {a, b};
                       }};
    // zeta(3) = 6/5 - 1^6/117 - 2^6/535 - ...
    return GcfSpec{Rat(0), [](long d) -> std::pair<Rat, Rat> {
                       long m = d - 1;
                       Rat a = d == 1 ? Rat(6) : -Rat(m * m * m) * Rat(m * m * m);
                       Rat b = Rat(34 * m * m * m + 51 * m * m + 27 * m + 5);
                       return {a, b};
                   }};
}

struct RecReport {
    bool ok = true;
    long first_failure = -1;
};

// (n+1)^2 X_{n+1} = (11n^2+11n+3) X_n + n^2 X_{n-1}   (zeta2)
// (n+1)^3 X_{n+1} = (34n^3+51n^2+27n+5) X_n - n^3 X_{n-1}  (zeta3)
inline RecReport verify_apery_recurrence(AperyConstant c, long n_max) {
    std::vector<Rat> N, D;
    for (long n = 0; n <= n_max; ++n) {
        AperySeqPair s = apery_pair(c, n);
        N.push_back(s.num);
        D.push_back(Rat(s.den));
    }
    for (long n = 1; n < n_max; ++n) {
        auto i = static_cast<std::size_t>(n);
        Rat cn, sign;
        if (c == AperyConstant::zeta2) {
            cn = Rat(11 * n * n + 11 * n + 3);
            sign = 1;
        } else {
            cn = Rat(34 * n * n * n + 51 * n * n + 27 * n + 5);
            sign = -1;
        }
        long p = (c == AperyConstant::zeta2) ? 2 : 3;
        Rat np1 = 1, nn = 1;
        for (long j = 0; j < p; ++j) {
            np1 *= (n + 1);
            nn *= n;
        }
        if (np1 * N[i + 1] != cn * N[i] + sign * nn * N[i - 1]) return {false, n};
        if (np1 * D[i + 1] != cn * D[i] + sign * nn * D[i - 1]) return {false, n};
    }
    return {};
}

inline ErrorSumReport errsum_apery(AperyConstant c, SignMode mode, mpfr_prec_t prec,
                                   const HPReal& tol, long max_terms = 200) {
    std::string cname = c == AperyConstant::zeta2 ? "zeta2" : "zeta3";
    ErrorSumSpec spec{
        [cname](mpfr_prec_t p) { return const_value(cname, p); },
        [c](long n) -> std::pair<Rat, Rat> {
            AperySeqPair s = apery_pair(c, n);
            return {Rat(s.den), s.num};
        },
        mode};
    ErrorSumReport rep = rounded_to(accumulate(spec, tol, max_terms), prec);
    rep.method = "errsum_apery/" + cname +
                 (mode == SignMode::absolute ? "/absolute" : "/signed");
    return rep;
}

// Thm 5.10 truncated multisums with exact rational terms.
// zeta2: sum_n sum_k C(n+k,n) / ((2n+k+1)^2 C(2n+k,n)^2), sign per mode.
// zeta3: triple sum with inner (-1)^l alternation.
inline HPReal hyp_multisum(AperyConstant c, SignMode mode, long N_outer, long K_inner,
                           mpfr_prec_t prec) {
    if (N_outer < 1 || K_inner < 1)
        throw std::invalid_argument("hyp_multisum: truncation bounds >= 1");
    Rat total = 0;
    if (c == AperyConstant::zeta2) {
        for (long n = 0; n < N_outer; ++n) {
            Rat row = 0;
            for (long k = 0; k < K_inner; ++k) {
                Int b = binomial(2 * n + k, n);
                row += Rat(binomial(n + k, n)) / (Rat((2 * n + k + 1)) *
                                                  Rat((2 * n + k + 1)) * Rat(b * b));
            }
            if (mode == SignMode::signed_sum && (n % 2)) total -= row;
            else total += row;
        }
    } else {
        // (1/2) sum_n sum_k sum_{l<=k} (-1)^l C(k,l) C(n+l,n) /
        //       ( (2n+k+1)(2n+l+1)^2 C(2n+k,n) C(2n+l,n)^2 )
        for (long n = 0; n < N_outer; ++n) {
            Rat row = 0;
            for (long k = 0; k < K_inner; ++k) {
                Rat inner = 0;
                for (long l = 0; l <= k; ++l) {
                    Int bl = binomial(2 * n + l, n);
                    Rat t = Rat(binomial(k, l) * binomial(n + l, n)) /
                            (Rat(2 * n + k + 1) * Rat((2 * n + l + 1)) *
                             Rat((2 * n + l + 1)) * Rat(binomial(2 * n + k, n)) *
                             Rat(bl * bl));
                    if (l % 2) t = -t;
                    inner += t;
                }
                row += inner;
            }
            total += row;
        }
        total /= 2;
    }
    return HPReal::of(total, prec);
}

// Quadrature cross-check of the closed rational-integrand forms.
inline IntegralResult integral_crosscheck(const std::string& which, QuadratureSpec spec,
                                          mpfr_prec_t prec) {
    if (which == "5.10") {
        spec.dimension = 2;
        return integrate(
            [](const std::vector<HPReal>& v) {
                const HPReal &x = v[0], &y = v[1];
                HPReal one = HPReal::of(1L, x.prec());
                HPReal xy = x * y;
                return one / (one + xy * xy - x * y * y - y * x * x);
            },
            spec, prec);
    }
    if (which == "5.20") {
        spec.dimension = 2;
        return integrate(
            [](const std::vector<HPReal>& v) {
                const HPReal &x = v[0], &y = v[1];
                HPReal one = HPReal::of(1L, x.prec());
                HPReal xy = x * y;
                return one / (one - xy * xy - HPReal::of(2L, x.prec()) * xy + x * y * y +
                              y * x * x);
            },
            spec, prec);
    }
    if (which == "5.30") {
        spec.dimension = 3;
        // denominator 1 - M1 w + M2 w^2 with M1 = x^2y^2 - xy^2 - x^2y + 1,
        // M2 = x^2y^2 - xy^2 - x^2y + xy; singular on {w=1, xy=0} edges.
        spec.refine = {-1, -1, 1};
        return integrate(
            [](const std::vector<HPReal>& v) {
                const HPReal &x = v[0], &y = v[1], &w = v[2];
                HPReal one = HPReal::of(1L, x.prec());
                HPReal xy = x * y;
                HPReal m = xy * xy - x * y * y - y * x * x;
                HPReal m1 = m + one;
                HPReal m2 = m + xy;
                return one / (one - m1 * w + m2 * w * w) / HPReal::of(2L, x.prec());
            },
            spec, prec);
    }
    throw std::invalid_argument("integral_crosscheck: which in {5.10, 5.20, 5.30}");
}

}  // namespace errsum
