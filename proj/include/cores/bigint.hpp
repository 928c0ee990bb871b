#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace cores {

// All counts and sizes are exact: arbitrary-precision integers for the
// sequences, rationals for averages. No floating point anywhere.
using Int = mpz_class;
using Rat = mpq_class;

// gmpxx has no long long overloads; every 64-bit value goes through here.
inline Int make_int(long long v) {
    static_assert(sizeof(long) == sizeof(long long), "expects 64-bit long");
    return Int(static_cast<long>(v));
}

inline Int make_int(unsigned long long v) {
    static_assert(sizeof(unsigned long) == sizeof(unsigned long long), "expects 64-bit long");
    return Int(static_cast<unsigned long>(v));
}

inline Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

// Division that must leave no remainder. An inexact division here means a
// formula is wrong, so it throws instead of rounding.
inline Int exact_div(const Int& num, const Int& den, const char* context) {
    if (den == 0) {
        throw std::logic_error(std::string(context) + ": division by zero");
    }
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r != 0) {
        throw std::logic_error(std::string(context) + ": inexact division");
    }
    return q;
}

inline Rat make_rational(const Int& num, const Int& den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// Decimal rendering of a nonnegative rational with `digits` fractional
// digits, truncated toward zero.
std::string rational_decimal(const Rat& value, unsigned digits);

}  // namespace cores
