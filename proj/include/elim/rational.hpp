#pragma once

#include <gmpxx.h>

#include <string>

#include "elim/error.hpp"

namespace elim {

using Integer = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const Integer& z) { return z.get_str(); }

// mpz_class has no long long constructor; go through the decimal string so
// the conversion is lossless on every data model.
inline Integer to_integer(long long v) { return Integer(std::to_string(v)); }

// Canonical "num" or "num/den" form, denominator always positive.
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Integer integer_pow(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rational rational_pow(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (base == 0) {
        if (e < 0) throw Error(ErrorCode::InvalidArgument, "0 has no negative power");
        return Rational(0);
    }
    unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
    Rational r(integer_pow(base.get_num(), a), integer_pow(base.get_den(), a));
    r.canonicalize();
    if (e < 0) r = 1 / r;
    return r;
}

// Accepts the same syntax as the job files: "-3", "7/2".
inline Rational parse_rational(const std::string& text) {
    Rational q;
    if (q.set_str(text, 10) != 0)
        throw Error(ErrorCode::BadInput, "not a rational literal: '" + text + "'");
    if (q.get_den() == 0)
        throw Error(ErrorCode::BadInput, "zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

} // namespace elim
