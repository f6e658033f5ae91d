#pragma once
// Exact arithmetic foundation: rationals, combinatorial primitives, and
// rational polynomials / truncated power series (with Laurent valuation).

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace errsum {

using Int = mpz_class;
using Rat = mpq_class;

inline Int binomial(long n, long k) {
    if (n < 0) throw std::invalid_argument("binomial: negative n");
    if (k < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

// Rising factorial x(x+1)...(x+n-1); empty product = 1.
inline Rat pochhammer(const Rat& x, unsigned long n) {
    Rat r = 1, f = x;
    for (unsigned long i = 0; i < n; ++i, f += 1) r *= f;
    return r;
}

inline Int lcm_upto(unsigned long n) {
    Int r = 1;
    for (unsigned long i = 2; i <= n; ++i) mpz_lcm_ui(r.get_mpz_t(), r.get_mpz_t(), i);
    return r;
}

// Bernoulli numbers B_0..B_n (B_1 = -1/2), exact.
inline const std::vector<Rat>& bernoulli_upto(std::size_t n) {
    static std::vector<Rat> cache{Rat(1)};
    while (cache.size() <= n) {
        std::size_t m = cache.size();
        Rat s = 0;
        for (std::size_t j = 0; j < m; ++j)
            s += Rat(binomial(static_cast<long>(m) + 1, static_cast<long>(j))) * cache[j];
        Rat b = -s / Rat(static_cast<long>(m) + 1);
        b.canonicalize();
        cache.push_back(b);
    }
    return cache;
}

// ---------------------------------------------------------------------------
// PolyQ: dense univariate polynomial over Q, lowest power first.

struct PolyQ {
    std::vector<Rat> c;

    PolyQ() = default;
    explicit PolyQ(std::vector<Rat> coeffs) : c(std::move(coeffs)) { trim(); }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    long degree() const { return static_cast<long>(c.size()) - 1; }
    Rat coeff(std::size_t i) const { return i < c.size() ? c[i] : Rat(0); }

    Rat eval(const Rat& t) const {
        Rat r = 0;
        for (std::size_t i = c.size(); i-- > 0;) r = r * t + c[i];
        return r;
    }

    friend PolyQ operator+(const PolyQ& a, const PolyQ& b) {
        std::vector<Rat> r(std::max(a.c.size(), b.c.size()), Rat(0));
        for (std::size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
        for (std::size_t i = 0; i < b.c.size(); ++i) r[i] += b.c[i];
        return PolyQ(std::move(r));
    }
    friend PolyQ operator*(const PolyQ& a, const PolyQ& b) {
        if (a.is_zero() || b.is_zero()) return PolyQ();
        std::vector<Rat> r(a.c.size() + b.c.size() - 1, Rat(0));
        for (std::size_t i = 0; i < a.c.size(); ++i) {
            if (a.c[i] == 0) continue;
            for (std::size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
        }
        return PolyQ(std::move(r));
    }
    friend bool operator==(const PolyQ& a, const PolyQ& b) { return a.c == b.c; }
};

// ---------------------------------------------------------------------------
// BiPolyQ: dense bivariate polynomial, c[i][j] = coefficient of x^i y^j.

struct BiPolyQ {
    std::vector<std::vector<Rat>> c;

    BiPolyQ() = default;
    BiPolyQ(std::size_t dx, std::size_t dy)
        : c(dx + 1, std::vector<Rat>(dy + 1, Rat(0))) {}

    Rat coeff(std::size_t i, std::size_t j) const {
        if (i >= c.size() || j >= c[i].size()) return 0;
        return c[i][j];
    }
    void set(std::size_t i, std::size_t j, const Rat& v) {
        if (i >= c.size()) c.resize(i + 1);
        if (j >= c[i].size()) c[i].resize(j + 1, Rat(0));
        c[i][j] = v;
    }

    friend BiPolyQ operator*(const BiPolyQ& a, const BiPolyQ& b) {
        BiPolyQ r;
        for (std::size_t i = 0; i < a.c.size(); ++i)
            for (std::size_t j = 0; j < a.c[i].size(); ++j) {
                if (a.c[i][j] == 0) continue;
                for (std::size_t k = 0; k < b.c.size(); ++k)
                    for (std::size_t l = 0; l < b.c[k].size(); ++l) {
                        if (b.c[k][l] == 0) continue;
                        r.set(i + k, j + l, r.coeff(i + k, j + l) + a.c[i][j] * b.c[k][l]);
                    }
            }
        return r;
    }
    friend BiPolyQ operator+(const BiPolyQ& a, const BiPolyQ& b) {
        BiPolyQ r = a;
        for (std::size_t k = 0; k < b.c.size(); ++k)
            for (std::size_t l = 0; l < b.c[k].size(); ++l)
                if (b.c[k][l] != 0) r.set(k, l, r.coeff(k, l) + b.c[k][l]);
        return r;
    }
    friend BiPolyQ operator-(const BiPolyQ& a, const BiPolyQ& b) {
        BiPolyQ r = a;
        for (std::size_t k = 0; k < b.c.size(); ++k)
            for (std::size_t l = 0; l < b.c[k].size(); ++l)
                if (b.c[k][l] != 0) r.set(k, l, r.coeff(k, l) - b.c[k][l]);
        return r;
    }
    bool equals(const BiPolyQ& o) const {
        std::size_t nx = std::max(c.size(), o.c.size());
        for (std::size_t i = 0; i < nx; ++i) {
            std::size_t ny = std::max(i < c.size() ? c[i].size() : 0,
                                      i < o.c.size() ? o.c[i].size() : 0);
            for (std::size_t j = 0; j < ny; ++j)
                if (coeff(i, j) != o.coeff(i, j)) return false;
        }
        return true;
    }
};

// ---------------------------------------------------------------------------
// SeriesQ: truncated power series with Laurent valuation.
// Coefficient of x^(val+i) is c[i]; exponents >= val+c.size() are unknown.

struct SeriesQ {
    std::vector<Rat> c;
    long val = 0;

    SeriesQ() = default;
    SeriesQ(std::vector<Rat> coeffs, long v = 0) : c(std::move(coeffs)), val(v) {}

    static SeriesQ one(std::size_t order) {
        std::vector<Rat> v(order, Rat(0));
        if (order) v[0] = 1;
        return SeriesQ(std::move(v), 0);
    }

    std::size_t order() const { return c.size(); }  // count of known coefficients
    long upper() const { return val + static_cast<long>(c.size()); }  // first unknown exponent

    Rat coeff(long e) const {
        long i = e - val;
        if (i < 0) return 0;
        if (i >= static_cast<long>(c.size()))
            throw std::out_of_range("SeriesQ: coefficient beyond truncation order");
        return c[static_cast<std::size_t>(i)];
    }

    SeriesQ shifted(long s) const { return SeriesQ(c, val + s); }

    // Drop leading zero coefficients, raising the valuation.
    SeriesQ normalized() const {
        std::size_t i = 0;
        while (i < c.size() && c[i] == 0) ++i;
        return SeriesQ(std::vector<Rat>(c.begin() + static_cast<long>(i), c.end()),
                       val + static_cast<long>(i));
    }
};

inline SeriesQ series_add(const SeriesQ& a, const SeriesQ& b) {
    long lo = std::min(a.val, b.val);
    long hi = std::min(a.upper(), b.upper());
    if (hi <= lo) return SeriesQ({}, lo);
    std::vector<Rat> r(static_cast<std::size_t>(hi - lo), Rat(0));
    for (long e = lo; e < hi; ++e) {
        Rat v = 0;
        if (e >= a.val && e < a.upper()) v += a.c[static_cast<std::size_t>(e - a.val)];
        if (e >= b.val && e < b.upper()) v += b.c[static_cast<std::size_t>(e - b.val)];
        r[static_cast<std::size_t>(e - lo)] = v;
    }
    return SeriesQ(std::move(r), lo);
}

inline SeriesQ series_neg(const SeriesQ& a) {
    SeriesQ r = a;
    for (auto& x : r.c) x = -x;
    return r;
}

inline SeriesQ series_mul(const SeriesQ& a0, const SeriesQ& b0) {
    SeriesQ a = a0.normalized(), b = b0.normalized();
    // known exponents of product: [a.val+b.val, min(a.upper+b.val, b.upper+a.val))
    long lo = a.val + b.val;
    long hi = std::min(a.upper() + b.val, b.upper() + a.val);
    if (hi <= lo) return SeriesQ({}, lo);
    std::vector<Rat> r(static_cast<std::size_t>(hi - lo), Rat(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        long base = a.val + static_cast<long>(i) + b.val - lo;
        for (std::size_t j = 0; j < b.c.size() && base + static_cast<long>(j) < hi - lo; ++j)
            r[static_cast<std::size_t>(base) + j] += a.c[i] * b.c[j];
    }
    return SeriesQ(std::move(r), lo);
}

// Multiplicative inverse; requires nonzero lowest known coefficient.
inline SeriesQ series_inv(const SeriesQ& f0) {
    SeriesQ f = f0.normalized();
    if (f.c.empty() || f.c[0] == 0)
        throw std::invalid_argument("series_inv: zero leading coefficient");
    std::size_t n = f.c.size();
    std::vector<Rat> g(n, Rat(0));
    g[0] = Rat(1) / f.c[0];
    for (std::size_t k = 1; k < n; ++k) {
        Rat s = 0;
        for (std::size_t j = 0; j < k; ++j) s += g[j] * f.c[k - j];
        g[k] = -s / f.c[0];
    }
    return SeriesQ(std::move(g), -f.val);
}

inline SeriesQ series_pow(const SeriesQ& f, long k) {
    if (k < 0) return series_inv(series_pow(f, -k));
    SeriesQ r = SeriesQ::one(f.order());
    r.val = 0;
    for (long i = 0; i < k; ++i) r = series_mul(r, f);
    return r;
}

// g with g^2 * f = 1 + O(x^order); requires f(0) = 1 (valuation 0).
inline SeriesQ series_inv_sqrt(const SeriesQ& f) {
    if (f.val != 0 || f.c.empty() || f.c[0] != 1)
        throw std::invalid_argument("series_inv_sqrt: constant term must be 1");
    std::size_t n = f.c.size();
    std::vector<Rat> g(n, Rat(0));
    g[0] = 1;
    // [x^k] g^2 f = 0 for k >= 1 gives 2 g_k = -(sum over other index splits).
    for (std::size_t k = 1; k < n; ++k) {
        Rat s = 0;
        for (std::size_t i = 0; i <= k; ++i)
            for (std::size_t j = 0; i + j <= k; ++j) {
                if ((i == k && j == 0) || (j == k && i == 0)) continue;
                std::size_t m = k - i - j;
                if (f.c[m] != 0 && g[i] != 0 && g[j] != 0) s += g[i] * g[j] * f.c[m];
            }
        g[k] = -s / 2;
    }
    return SeriesQ(std::move(g), 0);
}

// sqrt(f) = f * inv_sqrt(f); requires f(0) = 1.
inline SeriesQ series_sqrt(const SeriesQ& f) { return series_mul(f, series_inv_sqrt(f)); }

inline std::string rat_str(const Rat& q) { return q.get_str(); }

}  // namespace errsum
