#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace mpinv {

// Exact rational scalar used for all invariant values.
using Rational = mpq_class;
using BigInt = mpz_class;

inline BigInt int_pow(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// gmpxx has no long long constructor; long is 64-bit on every supported target.
inline BigInt big_int(long long v) { return BigInt(static_cast<long>(v)); }

inline BigInt int_pow(long long base, unsigned long e) { return int_pow(big_int(base), e); }

inline Rational rational_pow(const Rational& base, unsigned long e) {
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), e);
    return r;  // canonical since base was
}

inline BigInt binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return BigInt(0);
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

inline BigInt factorial(long long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

// Canonical "p/q" form, denominator always written and positive.
inline std::string to_fraction_string(const Rational& q) {
    Rational c = q;
    c.canonicalize();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

inline Rational rational_from_string(const std::string& s) {
    auto slash = s.find('/');
    Rational q;
    if (slash == std::string::npos) {
        if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
            throw std::invalid_argument("bad rational literal: " + s);
    } else {
        if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
            throw std::invalid_argument("bad rational literal: " + s);
    }
    q.canonicalize();
    if (q.get_den() <= 0) throw std::invalid_argument("bad rational literal: " + s);
    return q;
}

}  // namespace mpinv
