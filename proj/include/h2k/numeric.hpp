#pragma once

// Arbitrary-precision scalars. Every value on the computational path is an
// exact integer or an exact rational in lowest terms; no floating point is
// used anywhere in this library.

#include <gmpxx.h>

#include <string>
#include <vector>

#include "h2k/errors.hpp"

namespace h2k {

using Integer = mpz_class;
using Rational = mpq_class;  // GMP keeps these canonical: lowest terms, den >= 1

using IntVector = std::vector<Integer>;

// num/den in lowest terms, or just "num" when the denominator is 1.
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline std::string to_string(const Integer& n) { return n.get_str(); }

// Exact rational num/den, reduced. Throws on zero denominator.
inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw SingularMatrix("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

inline bool is_even_integer(const Rational& q) {
    return is_integral(q) && mpz_even_p(q.get_num().get_mpz_t());
}

// floor(sqrt(n)) for n >= 0.
inline Integer isqrt(const Integer& n) {
    if (n < 0) throw InternalError("isqrt of negative value");
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

// Inverse of a modulo m (m >= 1). Throws when gcd(a, m) != 1.
inline Integer mod_inverse(const Integer& a, const Integer& m) {
    Integer r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw InternalError("no modular inverse for " + a.get_str() + " mod " + m.get_str());
    return r;
}

// a mod m normalized into [0, m).
inline Integer mod_floor(const Integer& a, const Integer& m) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline unsigned long to_ulong_checked(const Integer& n, const char* what) {
    if (n < 0 || !n.fits_ulong_p())
        throw InvalidArgument(std::string(what) + " does not fit in a machine word: " + n.get_str());
    return n.get_ui();
}

}  // namespace h2k
