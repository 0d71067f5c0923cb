#include "sp4kl/rational.hpp"

namespace sp4kl {

Integer gcd_int(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Rational rational_gcd(const Rational& a, const Rational& b) {
  // gcd(p1/q1, p2/q2) = gcd(p1*q2, p2*q1) / (q1*q2)
  Integer cross1 = num(a) * den(b);
  Integer cross2 = num(b) * den(a);
  return rat(gcd_int(cross1, cross2), den(a) * den(b));
}

Rational rational_lcm(const Rational& a, const Rational& b) {
  Rational g = rational_gcd(a, b);
  Rational l = a / g * b;
  if (l < 0) l = -l;
  return l;
}

std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace sp4kl
