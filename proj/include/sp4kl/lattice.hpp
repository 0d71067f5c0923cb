#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "sp4kl/gsp4.hpp"

namespace sp4kl {

enum class LatticeKind { full, paramodular };

// Descriptor of the lattice Gamma: either Sp4(Z) or the paramodular group
// of level q. Membership is a per-entry divisibility pattern intersected
// with Sp4(Q).
struct LatticeDesc {
  LatticeKind kind = LatticeKind::full;
  long q = 1;

  static LatticeDesc full() { return LatticeDesc{LatticeKind::full, 1}; }
  static LatticeDesc paramodular(long q) {
    if (q < 1) throw std::invalid_argument("paramodular level must be >= 1");
    return LatticeDesc{LatticeKind::paramodular, q};
  }

  bool is_paramodular() const { return kind == LatticeKind::paramodular; }

  // Discriminant: squarefree radical of q (1 for the full lattice).
  long discriminant() const;

  // [Gamma cap U(Q) : U(Z)]; equals q for the paramodular group.
  long unipotent_index() const { return is_paramodular() ? q : 1; }

  // The co-volume grows like q^2 up to constants; only the exponent is kept.
  int covolume_proxy_exponent() const { return 2; }

  // Entry (i, j) of a member lies in pattern_scale(i, j) * Z.
  Rational pattern_scale(int i, int j) const;

  bool pattern_ok(const Mat4& g) const;

  std::string name() const;
};

// True iff g is a member: multiplier 1 and every entry in its pattern class.
bool contains(const LatticeDesc& L, const GSpElement& g);
bool contains(const LatticeDesc& L, const Mat4& g);

// Coset representatives of (Gamma cap U(Q)) / U(Z), scanning the
// s-coordinate denominators admitted by the pattern. Used to cross-check
// unipotent_index at small q.
std::vector<UCoords> unipotent_coset_reps(const LatticeDesc& L);

// Stored reference constants; the symbolic values match the source
// displays verbatim.
struct ReferenceConstants {
  // Vol(Sp4(Z)\Sp4(R)) = zeta(2) zeta(4) / (2 pi^3) = pi^3 / 1080.
  static const char* sp4_covolume_display() {
    return "zeta(2)*zeta(4)/(2*pi^3)";
  }
  static Rational sp4_covolume_pi3_coefficient() { return rat(1, 1080); }

  // Local paramodular volume q^-2 (1+q^-2)^-1 = 1/(q^2+1). Stored with q as
  // written; the local factor at a single prime p is presumably intended,
  // but the displayed formula is kept verbatim.
  static Rational local_paramodular_volume(long q) {
    return rat(1, q * q + 1);
  }
};

}  // namespace sp4kl
