#include "sp4kl/phase_sum.hpp"

#include <sstream>
#include <utility>
#include <vector>

namespace sp4kl {

namespace {

struct PrimePower {
  Integer p;
  Integer pk;       // p^e
  Integer totient;  // phi(p^e) = p^(e-1) * (p-1)
  Integer pk_over_p;
};

std::vector<PrimePower> factor_prime_powers(Integer n) {
  std::vector<PrimePower> out;
  Integer p = 2;
  while (n > 1) {
    if (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
      PrimePower pp;
      pp.p = p;
      pp.pk = 1;
      while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
        n /= p;
        pp.pk *= p;
      }
      pp.pk_over_p = pp.pk / p;
      pp.totient = pp.pk_over_p * (p - 1);
      out.push_back(pp);
    }
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
  }
  return out;
}

// Expand coeff * e(j/d) into basis terms, accumulating into acc.
// CRT-split j/d into p-local components, then rewrite each component whose
// exponent is >= phi(p^e). A single rewriting pass per prime suffices:
// exponents t + i*p^(e-1) with t < p^(e-1), i <= p-2 are already below
// phi(p^e).
void expand_term(const Rational& phase, const Integer& coeff,
                 PhaseSum::Terms& acc) {
  const Integer d = den(phase);
  const Integer j = num(phase);
  if (d == 1) {
    auto& c = acc[PhasePoint()];
    c += coeff;
    if (c == 0) acc.erase(PhasePoint());
    return;
  }

  std::vector<PrimePower> pps = factor_prime_powers(d);

  // p-local exponents: j/d = sum_p a_p / p^e (mod 1), a_p = j*(d/p^e)^{-1}.
  std::vector<Integer> local(pps.size());
  for (std::size_t i = 0; i < pps.size(); ++i) {
    Integer m = pps[i].pk;
    Integer cof = d / m;
    Integer inv;
    mpz_invert(inv.get_mpz_t(), cof.get_mpz_t(), m.get_mpz_t());
    local[i] = (j % m) * inv % m;
    if (local[i] < 0) local[i] += m;
  }

  // Expansion state: per prime, a list of (exponent, sign) alternatives.
  std::vector<std::vector<std::pair<Integer, int>>> alts(pps.size());
  for (std::size_t i = 0; i < pps.size(); ++i) {
    const PrimePower& pp = pps[i];
    if (local[i] < pp.totient) {
      alts[i].push_back({local[i], +1});
    } else {
      Integer t = local[i] - pp.totient;  // 0 <= t < p^(e-1)
      for (Integer step = 0; step < pp.p - 1; ++step) {
        alts[i].push_back({t + step * pp.pk_over_p, -1});
      }
    }
  }

  // Cartesian product over primes.
  std::vector<std::size_t> idx(pps.size(), 0);
  while (true) {
    Rational r(0);
    int sign = 1;
    for (std::size_t i = 0; i < pps.size(); ++i) {
      r += rat(alts[i][idx[i]].first, pps[i].pk);
      sign *= alts[i][idx[i]].second;
    }
    PhasePoint key(r);
    auto& c = acc[key];
    c += sign > 0 ? coeff : -coeff;
    if (c == 0) acc.erase(key);

    std::size_t k = 0;
    while (k < idx.size() && ++idx[k] == alts[k].size()) {
      idx[k] = 0;
      ++k;
    }
    if (k == idx.size()) break;
    if (idx.empty()) break;
  }
}

}  // namespace

void PhaseSum::add_term(const PhasePoint& p, const Integer& coeff) {
  if (coeff == 0) return;
  auto it = terms_.find(p);
  if (it == terms_.end()) {
    terms_.emplace(p, coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

void PhaseSum::add(const PhaseSum& o) {
  for (const auto& [p, c] : o.terms_) add_term(p, c);
}

void PhaseSum::scale(const Integer& k) {
  if (k == 0) {
    terms_.clear();
    return;
  }
  for (auto& [p, c] : terms_) c *= k;
}

Integer PhaseSum::order() const {
  Integer l = 1;
  for (const auto& [p, c] : terms_) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den(p.r).get_mpz_t());
  }
  return l;
}

PhaseSum PhaseSum::reduced() const {
  PhaseSum out;
  for (const auto& [p, c] : terms_) expand_term(p.r, c, out.terms_);
  return out;
}

bool PhaseSum::value_equals(const PhaseSum& o) const {
  return reduced().terms_ == o.reduced().terms_;
}

std::optional<Integer> PhaseSum::integer_value() const {
  PhaseSum r = reduced();
  if (r.terms_.empty()) return Integer(0);
  if (r.terms_.size() == 1) {
    const auto& [p, c] = *r.terms_.begin();
    if (p.r == 0) return c;
  }
  return std::nullopt;
}

ComplexValue PhaseSum::numeric() const {
  BigFloat two_pi = BigFloat(rat(2)) * BigFloat::pi();
  ComplexValue v;
  for (const auto& [p, c] : terms_) {
    BigFloat angle = two_pi * BigFloat(p.r);
    v.re += angle.cos().mul_int(c);
    v.im += angle.sin().mul_int(c);
  }
  return v;
}

std::string PhaseSum::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.get_str() << "*e(" << to_string(p.r) << ")";
  }
  return os.str();
}

}  // namespace sp4kl
