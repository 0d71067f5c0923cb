#pragma once

#include <array>
#include <optional>

#include "sp4kl/phase_sum.hpp"
#include "sp4kl/weyl.hpp"

namespace sp4kl {

// Modulus c = (c1, c2) of a Kloosterman cell.
struct Modulus {
  long c1 = 1, c2 = 1;

  Modulus() = default;
  Modulus(long a, long b) : c1(a), c2(b) {
    if (a < 1 || b < 1) throw std::invalid_argument("Modulus must be >= 1");
  }
  bool operator==(const Modulus& o) const { return c1 == o.c1 && c2 == o.c2; }
};

// Integer character data: psi^(X) reads the pair (x, c) of U-coordinates,
// psi^(X)(u) = e(X1 * x + X2 * c).
struct CharacterPair {
  std::array<long, 2> M{1, 1};
  std::array<long, 2> N{1, 1};
};

inline PhasePoint character_phase(const std::array<long, 2>& X,
                                  const UCoords& u) {
  return phase_of(X[0] * u.x + X[1] * u.c);
}

// Outcome of conjugating psi^(M) across w c* on Ubar_w: the character data
// the right-hand side is forced to carry. A component is nullopt when the
// corresponding coordinate is not seen on Ubar_w (no constraint); the
// conjugated character can also fail to be of psi^(N) shape at all, in
// which case m_side_ok is false and no N satisfies the condition.
struct ConjugatedCharacter {
  bool m_side_ok = true;
  std::optional<Rational> n1_required;
  std::optional<Rational> n2_required;
};

// Exact computation: conjugate the generic one-parameter subgroups of
// Ubar_w by w c* and match linear forms on both sides.
ConjugatedCharacter conjugated_character(WeylWord w, const Modulus& c,
                                         const std::array<long, 2>& M);

// Table-based admissibility predicate for (w, c) with data (M, N); agrees
// with the conjugation computation on all inputs.
bool is_admissible(WeylWord w, const Modulus& c, const CharacterPair& chars);

// Same predicate evaluated through conjugated_character (used to cross
// check the table).
bool is_admissible_by_conjugation(WeylWord w, const Modulus& c,
                                  const CharacterPair& chars);

// Relevant Weyl elements: those whose admissibility condition can hold
// with all of M1, M2, N1, N2 nonzero.
bool relevant(WeylWord w);

// Resolve the components of N that the admissibility table pins down for
// (w, c, M); unconstrained components fall back to the matching component
// of M. nullopt when a pinned component is not an integer.
std::optional<std::array<long, 2>> resolve_auto_n(WeylWord w, const Modulus& c,
                                                  const std::array<long, 2>& M);

}  // namespace sp4kl
