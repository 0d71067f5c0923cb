#pragma once

#include <optional>

#include "sp4kl/characters.hpp"
#include "sp4kl/weyl.hpp"

namespace sp4kl {

// Bruhat data of g in Sp4(Q): the unique (w, t, x, x') with
//   g = x * t * w * x',  x in U(Q), x' in U_w(Q), t = t(t1, t2).
// The torus part is reported as the signed rationals (c1, c2) with
// t = t(1/c1, c1/c2); reduction to a positive Modulus is a separate step.
struct BruhatData {
  WeylWord w = WeylWord::one;
  Rational c1, c2;
  UCoords left;   // x
  UCoords right;  // x', supported on the free coordinates of U_w
};

Mat4 assemble_bruhat(const BruhatData& d);

// Always succeeds for g with multiplier 1 (throws NotSymplecticError or
// std::invalid_argument otherwise). The decomposition is unique.
BruhatData bruhat_cell(const GSpElement& g);
BruhatData bruhat_cell(const Mat4& g);

// The decomposition is unique, signs included, so an element with negative
// torus data lies in no positive cell itself. The normalizer instead
// reports the positive-cell data of the torus-unit translate
// g * t(e1, e2); the recorded adjustment makes the move reversible.
// Returns nullopt when |c1|, |c2| are not integers.
struct NormalizedBruhat {
  WeylWord w;
  Modulus c;
  UCoords left;
  UCoords right;
  std::array<int, 2> unit_adjust{1, 1};
};
std::optional<NormalizedBruhat> normalize_bruhat(const BruhatData& d);

}  // namespace sp4kl
