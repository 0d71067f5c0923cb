#include "sp4kl/lattice.hpp"

namespace sp4kl {

long LatticeDesc::discriminant() const {
  if (!is_paramodular()) return 1;
  long n = q, rad = 1;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      rad *= p;
      while (n % p == 0) n /= p;
    }
  }
  return rad * n;
}

Rational LatticeDesc::pattern_scale(int i, int j) const {
  if (!is_paramodular()) return rat(1);
  // Row-major paramodular pattern: entry (i, j) lies in scale * Z.
  //   [ Z    Z   q^-1 Z  Z ]
  //   [ qZ   Z   Z       Z ]
  //   [ qZ   qZ  Z       qZ ]
  //   [ qZ   Z   Z       Z ]
  static const int kPattern[4][4] = {
      {0, 0, -1, 0}, {1, 0, 0, 0}, {1, 1, 0, 1}, {1, 0, 0, 0}};
  switch (kPattern[i][j]) {
    case -1:
      return rat(1, q);
    case 1:
      return rat(q);
    default:
      return rat(1);
  }
}

bool LatticeDesc::pattern_ok(const Mat4& g) const {
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (!is_integer(Rational(g.m[i][j] / pattern_scale(i, j)))) return false;
  return true;
}

std::string LatticeDesc::name() const {
  return is_paramodular() ? "pa:" + std::to_string(q) : "full";
}

bool contains(const LatticeDesc& L, const Mat4& g) {
  try {
    if (multiplier(g) != 1) return false;
  } catch (const NotSymplecticError&) {
    return false;
  }
  return L.pattern_ok(g);
}

bool contains(const LatticeDesc& L, const GSpElement& g) {
  return g.mu == 1 && L.pattern_ok(g.g);
}

std::vector<UCoords> unipotent_coset_reps(const LatticeDesc& L) {
  // n(x) s(T) is a member iff x, b, c are integers and a in (1/q) Z, so the
  // classes mod U(Z) are represented by a = k/q, 0 <= k < q.
  std::vector<UCoords> reps;
  long q = L.unipotent_index();
  for (long k = 0; k < q; ++k)
    reps.push_back(UCoords{rat(0), rat(k, q), rat(0), rat(0)});
  return reps;
}

}  // namespace sp4kl
