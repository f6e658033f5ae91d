#pragma once
// Independent high-precision reference values and numerical integration.
// Oracles never use the library's combinatorial sequences (zeta via Euler-Maclaurin,
// the rest via standard MPFR routines), so validation is non-circular.

#include <array>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "hpreal.hpp"
#include "numkernel.hpp"

namespace errsum {

// zeta(s) for integer s >= 2 by Euler-Maclaurin with exact Bernoulli terms.
inline HPReal zeta_euler_maclaurin(unsigned long s, mpfr_prec_t prec) {
    if (s < 2) throw std::invalid_argument("zeta_euler_maclaurin: s >= 2 required");
    mpfr_prec_t wp = prec + 64;
    unsigned long N = static_cast<unsigned long>(wp / 8) + 4;
    unsigned long K = 2 * N;
    bernoulli_upto(2 * K);

    HPReal sum(wp);
    for (unsigned long n = 1; n < N; ++n) {
        Rat t(1);
        Int np;
        mpz_ui_pow_ui(np.get_mpz_t(), n, s);
        t /= Rat(np);
        sum += HPReal::of(t, wp);
    }
    // tail from N: N^{1-s}/(s-1) + N^{-s}/2 + sum_k B_{2k}/(2k)! (s)_{2k-1} N^{1-s-2k}
    Int Ns1, Ns;
    mpz_ui_pow_ui(Ns1.get_mpz_t(), N, s - 1);
    mpz_ui_pow_ui(Ns.get_mpz_t(), N, s);
    sum += HPReal::of(Rat(1) / (Rat(Ns1) * Rat(static_cast<long>(s) - 1)), wp);
    sum += HPReal::of(Rat(1) / (Rat(Ns) * 2), wp);
    const auto& bern = bernoulli_upto(2 * K);
    Rat poch_s = Rat(static_cast<long>(s));  // (s)_1
    Int Npow = Ns * Int(N);                  // N^{s+1}
    HPReal cutoff(wp);
    mpfr_set_ui_2exp(cutoff.raw(), 1, -static_cast<mpfr_exp_t>(wp), MPFR_RNDN);
    for (unsigned long k = 1; k <= K; ++k) {
        // term = B_{2k}/(2k)! * (s)_{2k-1} / N^{s+2k-1}
        Rat term = bern[2 * k] / Rat(factorial(2 * k)) * poch_s / Rat(Npow);
        HPReal ht = HPReal::of(term, wp);
        sum += ht;
        if (abs(ht) < cutoff) break;
        // advance (s)_{2k-1} -> (s)_{2k+1} and N^{s+2k-1} -> N^{s+2k+1}
        poch_s *= Rat(static_cast<long>(s + 2 * k - 1)) * Rat(static_cast<long>(s + 2 * k));
        Npow *= Int(N) * Int(N);
    }
    HPReal out(prec);
    mpfr_set(out.raw(), sum.raw(), MPFR_RNDN);
    return out;
}

inline HPReal const_value(const std::string& name, mpfr_prec_t prec) {
    HPReal r(prec);
    if (name == "pi") {
        mpfr_const_pi(r.raw(), MPFR_RNDN);
    } else if (name == "e") {
        HPReal one = HPReal::of(1L, prec + 16);
        HPReal t(prec + 16);
        mpfr_exp(t.raw(), one.raw(), MPFR_RNDN);
        mpfr_set(r.raw(), t.raw(), MPFR_RNDN);
    } else if (name == "log2") {
        mpfr_const_log2(r.raw(), MPFR_RNDN);
    } else if (name == "zeta2") {
        return zeta_euler_maclaurin(2, prec);
    } else if (name == "zeta3") {
        return zeta_euler_maclaurin(3, prec);
    } else if (name == "golden_rho") {
        HPReal t(prec + 16);
        mpfr_sqrt_ui(t.raw(), 5, MPFR_RNDN);
        mpfr_add_ui(t.raw(), t.raw(), 1, MPFR_RNDN);
        mpfr_div_2ui(t.raw(), t.raw(), 1, MPFR_RNDN);
        mpfr_set(r.raw(), t.raw(), MPFR_RNDN);
    } else if (name == "log_rho") {
        HPReal t = const_value("golden_rho", prec + 16);
        mpfr_log(t.raw(), t.raw(), MPFR_RNDN);
        mpfr_set(r.raw(), t.raw(), MPFR_RNDN);
    } else {
        throw std::invalid_argument("const_value: unknown name " + name);
    }
    return r;
}

inline HPReal fn_eval(const std::string& name, const HPReal& x, mpfr_prec_t prec) {
    HPReal r(prec);
    if (name == "exp") {
        mpfr_exp(r.raw(), x.raw(), MPFR_RNDN);
    } else if (name == "log1p") {
        if (mpfr_cmp_si(x.raw(), -1) <= 0)
            throw std::domain_error("fn_eval: log1p requires x > -1");
        mpfr_log1p(r.raw(), x.raw(), MPFR_RNDN);
    } else if (name == "erf") {
        mpfr_erf(r.raw(), x.raw(), MPFR_RNDN);
    } else if (name == "arctan") {
        mpfr_atan(r.raw(), x.raw(), MPFR_RNDN);
    } else if (name == "arccos") {
        if (mpfr_cmp_si(x.raw(), 1) > 0 || mpfr_cmp_si(x.raw(), -1) < 0)
            throw std::domain_error("fn_eval: arccos requires |x| <= 1");
        mpfr_acos(r.raw(), x.raw(), MPFR_RNDN);
    } else if (name == "log") {
        if (mpfr_sgn(x.raw()) <= 0) throw std::domain_error("fn_eval: log requires x > 0");
        mpfr_log(r.raw(), x.raw(), MPFR_RNDN);
    } else if (name == "sqrt") {
        if (mpfr_sgn(x.raw()) < 0) throw std::domain_error("fn_eval: sqrt requires x >= 0");
        mpfr_sqrt(r.raw(), x.raw(), MPFR_RNDN);
    } else {
        throw std::invalid_argument("fn_eval: unknown name " + name);
    }
    return r;
}

inline HPReal fn_eval(const std::string& name, const Rat& x, mpfr_prec_t prec) {
    return fn_eval(name, HPReal::of(x, prec + 8), prec);
}

// ---------------------------------------------------------------------------
// Tensorized Gauss-Legendre quadrature over the unit cube with per-axis
// dyadic subdivision toward an endpoint (integrable singularities live on
// faces/edges touching 0 or 1 in the target integrands).

struct QuadratureSpec {
    int dimension = 1;
    int nodes = 16;              // per axis
    int depth = 8;               // dyadic subdivision levels
    std::array<int, 3> refine{1, 1, 1};  // per axis: +1 toward 1, -1 toward 0, 0 none
};

struct IntegralResult {
    HPReal value;
    HPReal error_estimate;
};

using Integrand = std::function<HPReal(const std::vector<HPReal>&)>;

// Nodes/weights of n-point Gauss-Legendre on [-1,1], by Newton iteration.
inline std::shared_ptr<const std::vector<std::pair<HPReal, HPReal>>> gl_rule(
    int n, mpfr_prec_t prec) {
    static std::map<std::pair<int, long>, std::shared_ptr<std::vector<std::pair<HPReal, HPReal>>>>
        cache;
    static std::mutex mtx;
    {
        std::lock_guard<std::mutex> lk(mtx);
        auto it = cache.find({n, static_cast<long>(prec)});
        if (it != cache.end()) return it->second;
    }
    mpfr_prec_t wp = prec + 32;
    auto rule = std::make_shared<std::vector<std::pair<HPReal, HPReal>>>();
    HPReal tol(wp);
    mpfr_set_ui_2exp(tol.raw(), 1, -static_cast<mpfr_exp_t>(wp - 4), MPFR_RNDN);
    for (int i = 0; i < n; ++i) {
        double x0 = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        HPReal x = HPReal::of(x0, wp);
        HPReal pn(wp), dpn(wp);
        for (int iter = 0; iter < 200; ++iter) {
            // Legendre recurrence
            HPReal p0 = HPReal::of(1L, wp), p1 = x;
            for (int k = 2; k <= n; ++k) {
                HPReal p2 = ((HPReal::of(2 * k - 1L, wp) * x * p1) -
                             HPReal::of(k - 1L, wp) * p0) /
                            HPReal::of(static_cast<long>(k), wp);
                p0 = p1;
                p1 = p2;
            }
            pn = p1;
            dpn = HPReal::of(static_cast<long>(n), wp) * (x * p1 - p0) /
                  (x * x - HPReal::of(1L, wp));
            HPReal dx = pn / dpn;
            x -= dx;
            if (abs(dx) < tol) break;
        }
        // refresh pn', weight = 2/((1-x^2) P_n'(x)^2)
        HPReal p0 = HPReal::of(1L, wp), p1 = x;
        for (int k = 2; k <= n; ++k) {
            HPReal p2 =
                ((HPReal::of(2 * k - 1L, wp) * x * p1) - HPReal::of(k - 1L, wp) * p0) /
                HPReal::of(static_cast<long>(k), wp);
            p0 = p1;
            p1 = p2;
        }
        HPReal one = HPReal::of(1L, wp);
        dpn = HPReal::of(static_cast<long>(n), wp) * (x * p1 - p0) / (x * x - one);
        HPReal w = HPReal::of(2L, wp) / ((one - x * x) * dpn * dpn);
        rule->emplace_back(x, w);
    }
    std::lock_guard<std::mutex> lk(mtx);
    cache[{n, static_cast<long>(prec)}] = rule;
    return rule;
}

namespace detail {

// Panel boundaries on [0,1] for one axis at the given refinement depth.
inline std::vector<Rat> axis_panels(int refine, int depth) {
    std::vector<Rat> b;
    b.emplace_back(0);
    if (refine != 0 && depth >= 1) {
        if (refine > 0) {  // toward 1: 0, 1/2, 3/4, ..., 1-2^-depth, 1
            Rat step(1, 2);
            for (int d = 1; d <= depth; ++d) {
                b.push_back(1 - step);
                step /= 2;
            }
        } else {  // toward 0: 0, 2^-depth, ..., 1/4, 1/2, 1
            Rat step(1);
            for (int d = 0; d < depth; ++d) step /= 2;
            for (int d = depth; d >= 1; --d) {
                b.push_back(step);
                step *= 2;
            }
        }
    }
    b.emplace_back(1);
    return b;
}

inline HPReal integrate_at_depth(const Integrand& f, const QuadratureSpec& spec, int depth,
                                 mpfr_prec_t prec) {
    mpfr_prec_t wp = prec + 32;
    auto rule = gl_rule(spec.nodes, wp);
    int dim = spec.dimension;
    std::vector<std::vector<Rat>> panels(static_cast<std::size_t>(dim));
    for (int a = 0; a < dim; ++a)
        panels[static_cast<std::size_t>(a)] =
            axis_panels(spec.refine[static_cast<std::size_t>(a)], depth);

    HPReal total(wp);
    std::vector<std::size_t> pi(static_cast<std::size_t>(dim), 0);  // panel index per axis
    std::vector<HPReal> pt(static_cast<std::size_t>(dim), HPReal(wp));
    bool done = false;
    while (!done) {
        // panel midpoints/half-widths
        std::vector<HPReal> mid, half;
        HPReal scale = HPReal::of(1L, wp);
        for (int a = 0; a < dim; ++a) {
            const auto& pb = panels[static_cast<std::size_t>(a)];
            Rat lo = pb[pi[static_cast<std::size_t>(a)]], hi = pb[pi[static_cast<std::size_t>(a)] + 1];
            mid.push_back(HPReal::of((lo + hi) / 2, wp));
            half.push_back(HPReal::of((hi - lo) / 2, wp));
            scale *= half.back();
        }
        // tensor nodes
        std::vector<std::size_t> ni(static_cast<std::size_t>(dim), 0);
        bool ndone = false;
        HPReal panel_sum(wp);
        while (!ndone) {
            HPReal w = HPReal::of(1L, wp);
            for (int a = 0; a < dim; ++a) {
                const auto& nw = (*rule)[ni[static_cast<std::size_t>(a)]];
                pt[static_cast<std::size_t>(a)] =
                    mid[static_cast<std::size_t>(a)] +
                    half[static_cast<std::size_t>(a)] * nw.first;
                w *= nw.second;
            }
            HPReal fv = f(pt);
            if (!mpfr_number_p(fv.raw()))
                throw std::runtime_error("integrate: non-finite sample at interior node");
            panel_sum += w * fv;
            for (int a = 0; a < dim; ++a) {
                if (++ni[static_cast<std::size_t>(a)] < static_cast<std::size_t>(spec.nodes)) break;
                ni[static_cast<std::size_t>(a)] = 0;
                if (a == dim - 1) ndone = true;
            }
        }
        total += scale * panel_sum;
        for (int a = 0; a < dim; ++a) {
            if (++pi[static_cast<std::size_t>(a)] <
                panels[static_cast<std::size_t>(a)].size() - 1)
                break;
            pi[static_cast<std::size_t>(a)] = 0;
            if (a == dim - 1) done = true;
        }
    }
    HPReal out(prec);
    mpfr_set(out.raw(), total.raw(), MPFR_RNDN);
    return out;
}

}  // namespace detail

inline IntegralResult integrate(const Integrand& f, const QuadratureSpec& spec,
                                mpfr_prec_t prec) {
    if (spec.nodes < 2) throw std::invalid_argument("integrate: node_count >= 2 required");
    HPReal fine = detail::integrate_at_depth(f, spec, spec.depth, prec);
    HPReal coarse =
        detail::integrate_at_depth(f, spec, spec.depth > 0 ? spec.depth - 1 : 0, prec);
    return IntegralResult{fine, abs(fine - coarse)};
}

}  // namespace errsum
