#include "mpinv/big_float.hpp"

#include <stdexcept>

namespace mpinv {

BigFloat BigFloat::from_si(long v, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_si(r.v_, v, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::from_double(double v, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_d(r.v_, v, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::log_of(const Rational& q, mpfr_prec_t prec) {
    if (q <= 0) throw std::domain_error("log of nonpositive value");
    BigFloat r(prec);
    mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
    mpfr_log(r.v_, r.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::operator+(const BigFloat& o) const {
    BigFloat r(std::max(precision(), o.precision()));
    mpfr_add(r.v_, v_, o.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::operator-(const BigFloat& o) const {
    BigFloat r(std::max(precision(), o.precision()));
    mpfr_sub(r.v_, v_, o.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::operator*(const BigFloat& o) const {
    BigFloat r(std::max(precision(), o.precision()));
    mpfr_mul(r.v_, v_, o.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::operator/(const BigFloat& o) const {
    BigFloat r(std::max(precision(), o.precision()));
    mpfr_div(r.v_, v_, o.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::operator-() const {
    BigFloat r(precision());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::mul_si(long s) const {
    BigFloat r(precision());
    mpfr_mul_si(r.v_, v_, s, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::div_si(long s) const {
    BigFloat r(precision());
    mpfr_div_si(r.v_, v_, s, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::exp() const {
    BigFloat r(precision());
    mpfr_exp(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::log_abs() const {
    if (is_zero()) throw std::domain_error("log of zero");
    BigFloat r(precision());
    mpfr_abs(r.v_, v_, MPFR_RNDN);
    mpfr_log(r.v_, r.v_, MPFR_RNDN);
    return r;
}

std::string BigFloat::to_string(size_t digits) const {
    char* s = nullptr;
    if (mpfr_asprintf(&s, "%.*Rg", static_cast<int>(digits), v_) < 0) throw std::runtime_error("mpfr format failure");
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

}  // namespace mpinv
