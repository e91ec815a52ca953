#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace digitforge {

// All exact arithmetic sits on GMP. Int is an arbitrary-precision integer,
// Rat an arbitrary-precision rational kept canonical (lowest terms,
// positive denominator) at every construction point in this library.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Int floor_rat(const Rat& x) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int pow_uint(unsigned long base, unsigned long e) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, e);
    return r;
}

// Exact count of factors p in n (n != 0).
inline unsigned long p_adic_valuation(const Int& n, const Int& p) {
    Int rem;
    return mpz_remove(rem.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
}

// The minimal-denominator rational strictly between lo and hi (lo < hi),
// by the continued-fraction descent on the endpoints. Used to certify
// irrationality of isolated roots: once the isolating interval is narrower
// than 1/lc^2, the only possible rational root is the simplest rational
// inside it.
Rat simplest_rational_between(const Rat& lo, const Rat& hi);

std::string to_decimal_string(const Int& n);

} // namespace digitforge
