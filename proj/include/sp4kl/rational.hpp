#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace sp4kl {

// Exact rational scalar. mpq_class values stay canonical (lowest terms,
// positive denominator) as long as they are built through arithmetic or
// through rat() below.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational rat(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline const Integer& num(const Rational& q) { return q.get_num(); }
inline const Integer& den(const Rational& q) { return q.get_den(); }

inline bool is_integer(const Rational& q) { return den(q) == 1; }

inline Integer floor_int(const Rational& q) {
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), num(q).get_mpz_t(), den(q).get_mpz_t());
  return f;
}

inline Integer ceil_int(const Rational& q) {
  Integer c;
  mpz_cdiv_q(c.get_mpz_t(), num(q).get_mpz_t(), den(q).get_mpz_t());
  return c;
}

// x mod 1, canonical representative in [0, 1).
inline Rational mod1(const Rational& x) { return x - Rational(floor_int(x)); }

// True iff x is an integer multiple of step (step > 0).
inline bool divides(const Rational& step, const Rational& x) {
  return is_integer(Rational(x / step));
}

// gcd of two positive rationals: the generator of aZ + bZ.
Rational rational_gcd(const Rational& a, const Rational& b);

// lcm of two positive rationals: the generator of aZ intersect bZ.
Rational rational_lcm(const Rational& a, const Rational& b);

Integer gcd_int(const Integer& a, const Integer& b);

std::string to_string(const Rational& q);

}  // namespace sp4kl
