#pragma once

#include <map>
#include <vector>

#include "sp4kl/kloosterman.hpp"

namespace sp4kl {

// Phase sum with an overall positive integer denominator; the value of the
// truncated geometric-side sums sum Kl(c;1,1) / (c-power).
struct ScaledPhaseSum {
  PhaseSum numerator;
  Integer denom = 1;

  bool is_zero() const { return numerator.is_zero(); }
  // Exact rational value when the numerator reduces to an integer.
  std::optional<Rational> rational_value() const {
    auto n = numerator.integer_value();
    if (!n) return std::nullopt;
    return rat(*n, denom);
  }
  ComplexValue numeric() const;
};

// Truncated geometric-side sum S_Gamma(w) for a relevant w != 1. The
// truncation is strict with implied constant 1:
//   s1s2s1:   c = (c1, c1),   c1 <= Z, weight 1/c1^2
//   s2s1s2:   c = (c1, c1^2), c1 <= Z, weight 1/c1^3
//   s1s2s1s2: c = (c1, c2),   c1 <= Z, c2 <= Z^2, weight 1/(c1 c2)
struct GeometricSumSpec {
  LatticeDesc lattice;
  WeylWord w = WeylWord::s1s2s1;  // must be relevant and != 1
  Rational Z;

  int kappa() const { return w == WeylWord::s1s2s1 ? 1 : 2; }
};

struct GeometricLedgerRow {
  Modulus c;
  bool admissible = false;
  std::size_t set_size = 0;
  PhaseSum kl;
  Integer weight_denom;  // the c-power divisor for this term
};

struct GeometricSum {
  ScaledPhaseSum total;
  std::vector<GeometricLedgerRow> ledger;  // sorted by (c1, c2)
};

GeometricSum geometric_sum(const GeometricSumSpec& spec,
                           const CharacterPair& chars,
                           const EnumerationOptions& opts = {});

// delta = 3 alpha - 1, with the density-hypothesis gate alpha >= 1/3.
// z0_covolume_exponent is the threshold power: Z = Vol^alpha reaches the
// density hypothesis exactly from Z0 = Vol^(1/3) on.
struct ExponentReport {
  Rational alpha;
  Rational delta;
  Rational z0_covolume_exponent;
  bool meets_density_hypothesis = false;
};

ExponentReport density_exponent(const Rational& alpha);

// The threshold Z0(Gamma) = Vol(X_Gamma)^(1/3); for the paramodular group
// the covolume grows like q^2, giving the q-power 2/3.
struct Z0Report {
  Rational covolume_exponent;  // always 1/3
  Rational q_power;            // 2/3 for paramodular, 0 for the full lattice
};

Z0Report z0(const LatticeDesc& L);

}  // namespace sp4kl
