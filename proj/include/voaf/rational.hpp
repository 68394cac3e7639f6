#ifndef VOAF_RATIONAL_HPP
#define VOAF_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

#include "voaf/error.hpp"

namespace voaf {

// Arbitrary-precision exact rational. GMP keeps values canonical as long as
// construction goes through rat(); all arithmetic operators preserve it.
using Rational = mpq_class;

inline Rational rat(long p, long q = 1) {
    if (q == 0) raise(ErrorKind::Internal, "rational with zero denominator");
    Rational r(p, q);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

// Largest integer <= q.
inline mpz_class floor_z(const Rational& q) {
    mpz_class out;
    mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return out;
}

inline bool fits_long(const mpz_class& z) { return z.fits_slong_p(); }

inline long to_long(const Rational& q) {
    if (!is_integer(q) || !q.get_num().fits_slong_p())
        raise(ErrorKind::Internal, "rational does not fit a machine integer: " + q.get_str());
    return q.get_num().get_si();
}

// True when q * n is an integer, i.e. den(q) | n.
inline bool denominator_divides(const Rational& q, long n) {
    if (n <= 0) return false;
    return mpz_divisible_p(mpz_class(n).get_mpz_t(), q.get_den_mpz_t()) != 0;
}

inline Rational pow_int(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    mpz_class num, den;
    unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), a);
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), a);
    if (e < 0) {
        if (num == 0) raise(ErrorKind::Internal, "inverse of zero rational");
        std::swap(num, den);
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational factorial(long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(f);
}

// Generalized binomial coefficient C(s, i) = s(s-1)...(s-i+1)/i! for rational s.
inline Rational binomial(const Rational& s, long i) {
    if (i < 0) return Rational(0);
    Rational acc(1);
    for (long j = 0; j < i; ++j) acc *= (s - j);
    return acc / factorial(i);
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

// lcm of the denominators of a list of rationals.
inline mpz_class denominator_lcm(const std::vector<Rational>& qs) {
    mpz_class l(1);
    for (const auto& q : qs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    return l;
}

} // namespace voaf

#endif
