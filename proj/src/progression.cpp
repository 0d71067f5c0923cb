#include "sp4kl/progression.hpp"

#include <stdexcept>

namespace sp4kl {

Progression Progression::of(const Rational& base, const Rational& step) {
  if (step <= 0) throw std::invalid_argument("Progression: step must be > 0");
  Progression p;
  p.step = step;
  p.base = base - Rational(floor_int(base / step)) * step;
  return p;
}

bool Progression::contains(const Rational& t) const {
  if (empty) return false;
  if (is_all()) return true;
  return divides(step, t - base);
}

Progression solve_congruence(const Rational& alpha, const Rational& beta,
                             const Rational& d) {
  if (d <= 0) throw std::invalid_argument("solve_congruence: d must be > 0");
  if (alpha == 0) {
    return divides(d, beta) ? Progression::all() : Progression::none();
  }
  // alpha t = -beta (mod d): t = -beta/alpha + (d/|alpha|) Z.
  Rational step = d / alpha;
  if (step < 0) step = -step;
  return Progression::of(-beta / alpha, step);
}

Progression intersect(const Progression& a, const Progression& b) {
  if (a.empty || b.empty) return Progression::none();
  if (a.is_all()) return b;
  if (b.is_all()) return a;
  // Solve base_a + k step_a = base_b (mod step_b) over integers k.
  // Scale to integers: with D = lcm(denominators), the equation becomes
  // A + k SA = B (mod SB).
  Integer D = den(a.base);
  mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), den(a.step).get_mpz_t());
  mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), den(b.base).get_mpz_t());
  mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), den(b.step).get_mpz_t());
  auto scaled = [&](const Rational& q) -> Integer {
    Rational s = q * Rational(D);
    return num(s);
  };
  Integer A = scaled(a.base), SA = scaled(a.step);
  Integer B = scaled(b.base), SB = scaled(b.step);
  Integer g = gcd_int(SA, SB);
  Integer diff = B - A;
  if (!mpz_divisible_p(diff.get_mpz_t(), g.get_mpz_t()))
    return Progression::none();
  // k = (diff/g) * inv(SA/g) mod (SB/g)
  Integer sa = SA / g, sb = SB / g, inv;
  if (sb == 1) {
    inv = 0;
  } else if (mpz_invert(inv.get_mpz_t(), sa.get_mpz_t(), sb.get_mpz_t()) ==
             0) {
    throw std::logic_error("intersect: inverse must exist");
  }
  Integer k = (diff / g % sb) * inv % sb;
  if (k < 0) k += sb;
  Rational base = a.base + Rational(k) * a.step;
  Rational step = rational_lcm(a.step, b.step);
  return Progression::of(base, step);
}

std::vector<Rational> points_in_window(const Progression& p,
                                       const Rational& offset) {
  std::vector<Rational> out;
  if (p.empty) return out;
  if (p.is_all())
    throw std::logic_error("points_in_window: unbounded progression");
  Integer k0 = ceil_int((offset - p.base) / p.step);
  for (Integer k = k0;; k += 1) {
    Rational t = p.base + Rational(k) * p.step;
    if (t >= offset + 1) break;
    out.push_back(t);
  }
  return out;
}

std::vector<Rational> grid_points(const Rational& step,
                                  const Rational& offset) {
  return points_in_window(Progression::of(rat(0), step), offset);
}

}  // namespace sp4kl
