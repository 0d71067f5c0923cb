#include "sp4kl/geometric.hpp"

namespace sp4kl {

ComplexValue ScaledPhaseSum::numeric() const {
  ComplexValue v = numerator.numeric();
  BigFloat d{rat(Integer(1), denom)};
  v.re = v.re * d;
  v.im = v.im * d;
  return v;
}

GeometricSum geometric_sum(const GeometricSumSpec& spec,
                           const CharacterPair& chars,
                           const EnumerationOptions& opts) {
  if (!relevant(spec.w) || spec.w == WeylWord::one)
    throw std::invalid_argument(
        "geometric_sum: w must be a nontrivial relevant Weyl element");

  GeometricSum out;
  std::vector<std::pair<Modulus, Integer>> cells;  // (c, weight denominator)
  Integer zmax = floor_int(spec.Z);
  if (zmax < 1) return out;
  long z = zmax.get_si();
  if (spec.w == WeylWord::s1s2s1) {
    for (long c1 = 1; c1 <= z; ++c1)
      cells.push_back({Modulus(c1, c1), Integer(c1) * c1});
  } else if (spec.w == WeylWord::s2s1s2) {
    for (long c1 = 1; c1 <= z; ++c1)
      cells.push_back({Modulus(c1, c1 * c1), Integer(c1) * c1 * c1});
  } else {
    Integer z2max = floor_int(spec.Z * spec.Z);
    long z2 = z2max.get_si();
    for (long c1 = 1; c1 <= z; ++c1)
      for (long c2 = 1; c2 <= z2; ++c2)
        cells.push_back({Modulus(c1, c2), Integer(c1) * c2});
  }

  // Common denominator of all weights.
  Integer lcm = 1;
  for (const auto& [c, wd] : cells)
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), wd.get_mpz_t());
  out.total.denom = lcm;

  for (const auto& [c, wd] : cells) {
    GeometricLedgerRow row;
    row.c = c;
    row.weight_denom = wd;
    row.admissible = is_admissible(spec.w, c, chars);
    if (row.admissible) {
      ElementList elems =
          enumerate_kloosterman_set(spec.lattice, spec.w, c, opts);
      row.set_size = elems.size();
      row.kl = kloosterman_sum_over(elems, chars);
      PhaseSum scaled = row.kl;
      scaled.scale(lcm / wd);
      out.total.numerator.add(scaled);
    }
    out.ledger.push_back(std::move(row));
  }
  return out;
}

ExponentReport density_exponent(const Rational& alpha) {
  if (alpha < 0) throw std::invalid_argument("density_exponent: alpha >= 0");
  ExponentReport r;
  r.alpha = alpha;
  r.delta = 3 * alpha - 1;
  r.z0_covolume_exponent = rat(1, 3);
  r.meets_density_hypothesis = alpha >= r.z0_covolume_exponent;
  return r;
}

Z0Report z0(const LatticeDesc& L) {
  Z0Report r;
  r.covolume_exponent = rat(1, 3);
  r.q_power = L.is_paramodular()
                  ? rat(L.covolume_proxy_exponent(), 3)
                  : rat(0);
  return r;
}

}  // namespace sp4kl
