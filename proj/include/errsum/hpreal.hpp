#pragma once
// HPReal: arbitrary-precision binary float (MPFR) with explicit precision.
// Arithmetic results carry the minimum precision of their operands.

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <utility>

#include "numkernel.hpp"

namespace errsum {

class HPReal {
  public:
    explicit HPReal(mpfr_prec_t prec = 128) {
        mpfr_init2(v_, std::max<mpfr_prec_t>(prec, MPFR_PREC_MIN));
        mpfr_set_zero(v_, 1);
    }
    HPReal(const HPReal& o) {
        mpfr_init2(v_, o.prec());
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    HPReal(HPReal&& o) noexcept {
        mpfr_init2(v_, MPFR_PREC_MIN);
        mpfr_swap(v_, o.v_);
    }
    HPReal& operator=(const HPReal& o) {
        if (this != &o) {
            mpfr_set_prec(v_, o.prec());
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    HPReal& operator=(HPReal&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~HPReal() { mpfr_clear(v_); }

    static HPReal of(long x, mpfr_prec_t prec) {
        HPReal r(prec);
        mpfr_set_si(r.v_, x, MPFR_RNDN);
        return r;
    }
    static HPReal of(const Rat& q, mpfr_prec_t prec) {
        HPReal r(prec);
        mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
        return r;
    }
    static HPReal of(const Int& z, mpfr_prec_t prec) {
        HPReal r(prec);
        mpfr_set_z(r.v_, z.get_mpz_t(), MPFR_RNDN);
        return r;
    }
    static HPReal of(double x, mpfr_prec_t prec) {
        HPReal r(prec);
        mpfr_set_d(r.v_, x, MPFR_RNDN);
        return r;
    }
    // Decimal string, e.g. "1e-12" or "0.5".
    static HPReal parse(const std::string& s, mpfr_prec_t prec) {
        HPReal r(prec);
        if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0 && mpfr_nan_p(r.v_))
            throw std::invalid_argument("HPReal::parse: bad decimal string: " + s);
        return r;
    }

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    int sign() const { return mpfr_sgn(v_); }
    bool is_zero() const { return mpfr_zero_p(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    // Exact rational value of the float (used by CF expansion).
    Rat to_rational() const {
        Rat q;
        mpfr_get_q(q.get_mpq_t(), v_);
        return q;
    }
    // One unit in the last place: 2^(exp - prec).
    Rat ulp() const {
        if (is_zero()) return 0;
        Rat u(1);
        long e = static_cast<long>(mpfr_get_exp(v_)) - static_cast<long>(prec());
        if (e >= 0)
            mpq_mul_2exp(u.get_mpq_t(), u.get_mpq_t(), static_cast<unsigned long>(e));
        else
            mpq_div_2exp(u.get_mpq_t(), u.get_mpq_t(), static_cast<unsigned long>(-e));
        return u;
    }

    friend HPReal operator+(const HPReal& a, const HPReal& b) {
        HPReal r(std::min(a.prec(), b.prec()));
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend HPReal operator-(const HPReal& a, const HPReal& b) {
        HPReal r(std::min(a.prec(), b.prec()));
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend HPReal operator*(const HPReal& a, const HPReal& b) {
        HPReal r(std::min(a.prec(), b.prec()));
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend HPReal operator/(const HPReal& a, const HPReal& b) {
        HPReal r(std::min(a.prec(), b.prec()));
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend HPReal operator-(const HPReal& a) {
        HPReal r(a.prec());
        mpfr_neg(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    HPReal& operator+=(const HPReal& o) {
        mpfr_add(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    HPReal& operator-=(const HPReal& o) {
        mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    HPReal& operator*=(const HPReal& o) {
        mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    HPReal& operator/=(const HPReal& o) {
        mpfr_div(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    // In-place small-integer ops (linear in precision; used by long recurrences).
    HPReal& imul_ui(unsigned long k) {
        mpfr_mul_ui(v_, v_, k, MPFR_RNDN);
        return *this;
    }
    HPReal& idiv_ui(unsigned long k) {
        mpfr_div_ui(v_, v_, k, MPFR_RNDN);
        return *this;
    }

    friend bool operator<(const HPReal& a, const HPReal& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const HPReal& a, const HPReal& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator<=(const HPReal& a, const HPReal& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>=(const HPReal& a, const HPReal& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }
    friend bool operator==(const HPReal& a, const HPReal& b) { return mpfr_cmp(a.v_, b.v_) == 0; }

    // Decimal rendering; digit count justified by precision unless given.
    std::string str(int digits = 0) const {
        if (digits <= 0)
            digits = std::max(5, static_cast<int>(static_cast<double>(prec()) * 0.30103) - 1);
        int n = mpfr_snprintf(nullptr, 0, "%.*Re", digits - 1, v_);
        std::string buf(static_cast<std::size_t>(n) + 1, '\0');
        mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits - 1, v_);
        buf.resize(static_cast<std::size_t>(n));
        return buf;
    }

  private:
    mpfr_t v_;
};

inline HPReal abs(const HPReal& a) {
    HPReal r(a.prec());
    mpfr_abs(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}
inline HPReal sqrt(const HPReal& a) {
    HPReal r(a.prec());
    mpfr_sqrt(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}
inline HPReal pow_ui(const HPReal& a, unsigned long k) {
    HPReal r(a.prec());
    mpfr_pow_ui(r.raw(), a.raw(), k, MPFR_RNDN);
    return r;
}

}  // namespace errsum
