#pragma once

#include <map>
#include <optional>
#include <string>

#include "sp4kl/numeric.hpp"
#include "sp4kl/rational.hpp"

namespace sp4kl {

// A point of Q/Z: the argument of the unit phase e(x) = exp(2*pi*i*x),
// stored as the reduced representative in [0, 1).
struct PhasePoint {
  Rational r;  // 0 <= r < 1, lowest terms

  PhasePoint() : r(0) {}
  explicit PhasePoint(const Rational& x) : r(mod1(x)) {}

  Integer order() const { return den(r); }

  bool operator<(const PhasePoint& o) const { return r < o.r; }
  bool operator==(const PhasePoint& o) const { return r == o.r; }
};

inline PhasePoint phase_of(const Rational& x) { return PhasePoint(x); }

// Finite integer combination of unit phases, sum_x coeff(x) * e(x).
// Invariant: no zero coefficients are stored. Values of Kloosterman sums
// live here so that closed-form identities can be checked with equality
// instead of tolerances.
class PhaseSum {
 public:
  using Terms = std::map<PhasePoint, Integer>;

  PhaseSum() = default;

  static PhaseSum zero() { return PhaseSum(); }
  static PhaseSum integer(const Integer& n) {
    PhaseSum s;
    s.add_term(PhasePoint(), n);
    return s;
  }
  static PhaseSum unit(const PhasePoint& p) {
    PhaseSum s;
    s.add_term(p, 1);
    return s;
  }

  void add_term(const PhasePoint& p, const Integer& coeff);
  void add(const PhaseSum& o);
  void scale(const Integer& k);

  PhaseSum operator+(const PhaseSum& o) const {
    PhaseSum r = *this;
    r.add(o);
    return r;
  }
  PhaseSum operator*(const Integer& k) const {
    PhaseSum r = *this;
    r.scale(k);
    return r;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }

  // lcm of the denominators of all stored phases (1 for the empty sum).
  Integer order() const;

  // Canonical form in the tensor basis of Q(zeta_N): for every prime power
  // p^e dividing a term's denominator, the p-local exponent is rewritten
  // below phi(p^e) using zeta^{phi(p^e)+t} = -sum_i zeta^{t+i*p^(e-1)}.
  // Two sums have equal value iff their reduced forms are identical maps.
  PhaseSum reduced() const;

  bool value_equals(const PhaseSum& o) const;

  // Exact integer detection on the reduced form: the value is a rational
  // integer iff the reduction is empty or a single multiple of e(0).
  std::optional<Integer> integer_value() const;

  // 192-bit numeric evaluation (deterministic term order).
  ComplexValue numeric() const;

  std::string str() const;

 private:
  Terms terms_;
};

}  // namespace sp4kl
