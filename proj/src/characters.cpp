#include "sp4kl/characters.hpp"

namespace sp4kl {

namespace {

// One-parameter element of the coordinate subgroup, at parameter z.
UCoords coord_element(int coord, const Rational& z) {
  UCoords u{rat(0), rat(0), rat(0), rat(0)};
  switch (coord) {
    case kCoordX:
      u.x = z;
      break;
    case kCoordA:
      u.a = z;
      break;
    case kCoordB:
      u.b = z;
      break;
    case kCoordC:
      u.c = z;
      break;
  }
  return u;
}

}  // namespace

ConjugatedCharacter conjugated_character(WeylWord w, const Modulus& c,
                                         const std::array<long, 2>& M) {
  const Mat4 cstar = gen_c_star(rat(c.c1), rat(c.c2));
  const Mat4 cstar_inv = cstar.inverse();
  const Mat4& wm = weyl_matrix(w);
  const Mat4 wm_inv = wm.inverse();

  ConjugatedCharacter out;
  std::array<bool, 4> free = ubar_free_coords(w);
  for (int coord = 0; coord < 4; ++coord) {
    if (!free[coord]) continue;
    // Conjugate the unit-parameter element; entries are linear in the
    // parameter, so z = 1 determines the whole one-parameter image.
    Mat4 conj =
        wm * cstar * u_matrix(coord_element(coord, rat(1))) * cstar_inv *
        wm_inv;
    UCoords img = u_coords(conj);
    // Left side per unit parameter: M1 * img.x + M2 * img.c.
    Rational lhs = M[0] * img.x + M[1] * img.c;
    // Right side per unit parameter: N1 on the x coordinate, N2 on c.
    if (coord == kCoordX) {
      out.n1_required = lhs;
    } else if (coord == kCoordC) {
      out.n2_required = lhs;
    } else if (lhs != 0) {
      // The conjugate reads a coordinate the right side never sees.
      out.m_side_ok = false;
    }
  }
  return out;
}

bool is_admissible_by_conjugation(WeylWord w, const Modulus& c,
                                  const CharacterPair& chars) {
  ConjugatedCharacter cc = conjugated_character(w, c, chars.M);
  if (!cc.m_side_ok) return false;
  if (cc.n1_required && *cc.n1_required != chars.N[0]) return false;
  if (cc.n2_required && *cc.n2_required != chars.N[1]) return false;
  return true;
}

bool is_admissible(WeylWord w, const Modulus& c, const CharacterPair& chars) {
  const long M1 = chars.M[0], M2 = chars.M[1];
  const long N1 = chars.N[0], N2 = chars.N[1];
  const Integer c1(c.c1), c2(c.c2);
  // Cross-multiplied forms of the table conditions keep everything in Z.
  switch (w) {
    case WeylWord::one:
      // N1 = M1 c2/c1^2 and N2 = M2 c1^2/c2^2 (the "M = N" row, which at
      // nonzero data forces c = (1,1)).
      return N1 * c1 * c1 == M1 * c2 && N2 * c2 * c2 == M2 * c1 * c1;
    case WeylWord::s1:
      return M2 == 0 && N2 == 0;
    case WeylWord::s2:
      return M1 == 0 && N1 == 0;
    case WeylWord::s1s2:
      return M2 == 0 && N1 == 0;
    case WeylWord::s2s1:
      return M1 == 0 && N2 == 0;
    case WeylWord::s1s2s1:
      return N2 * c2 * c2 == M2 * c1 * c1;
    case WeylWord::s2s1s2:
      return N1 * c1 * c1 == M1 * c2;
    case WeylWord::s1s2s1s2:
      return true;
  }
  return false;
}

bool relevant(WeylWord w) {
  return w == WeylWord::one || w == WeylWord::s1s2s1 ||
         w == WeylWord::s2s1s2 || w == WeylWord::s1s2s1s2;
}

std::optional<std::array<long, 2>> resolve_auto_n(
    WeylWord w, const Modulus& c, const std::array<long, 2>& M) {
  ConjugatedCharacter cc = conjugated_character(w, c, M);
  if (!cc.m_side_ok) return std::nullopt;
  std::array<long, 2> N{M[0], M[1]};
  if (cc.n1_required) {
    if (!is_integer(*cc.n1_required) || !num(*cc.n1_required).fits_slong_p())
      return std::nullopt;
    N[0] = num(*cc.n1_required).get_si();
  }
  if (cc.n2_required) {
    if (!is_integer(*cc.n2_required) || !num(*cc.n2_required).fits_slong_p())
      return std::nullopt;
    N[1] = num(*cc.n2_required).get_si();
  }
  return N;
}

}  // namespace sp4kl
