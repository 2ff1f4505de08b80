#pragma once

#include <mpfr.h>

#include <string>

#include "mpinv/rational.hpp"

namespace mpinv {

// Minimal RAII wrapper over mpfr_t.  Every value carries its own precision;
// binary operations round to the wider operand's precision (MPFR_RNDN).
class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t prec = 64) { mpfr_init2(v_, prec); }
    BigFloat(const BigFloat& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigFloat(BigFloat&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }

    static BigFloat from_si(long v, mpfr_prec_t prec);
    static BigFloat from_double(double v, mpfr_prec_t prec);
    // log of a positive exact rational, computed at the given precision.
    static BigFloat log_of(const Rational& q, mpfr_prec_t prec);

    BigFloat operator+(const BigFloat&) const;
    BigFloat operator-(const BigFloat&) const;
    BigFloat operator*(const BigFloat&) const;
    BigFloat operator/(const BigFloat&) const;
    BigFloat& operator+=(const BigFloat& o) { return *this = *this + o; }
    BigFloat& operator-=(const BigFloat& o) { return *this = *this - o; }
    BigFloat operator-() const;

    BigFloat mul_si(long s) const;
    BigFloat div_si(long s) const;

    BigFloat exp() const;
    BigFloat log_abs() const;  // log(|x|); x must be nonzero

    int sign() const { return mpfr_sgn(v_); }
    bool is_zero() const { return mpfr_zero_p(v_); }
    bool is_nan() const { return mpfr_nan_p(v_); }
    int cmp(const BigFloat& o) const { return mpfr_cmp(v_, o.v_); }
    bool operator<(const BigFloat& o) const { return cmp(o) < 0; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    std::string to_string(size_t digits = 20) const;

private:
    mpfr_t v_;
};

}  // namespace mpinv
