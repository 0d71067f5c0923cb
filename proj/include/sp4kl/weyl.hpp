#pragma once

#include <array>
#include <string>
#include <vector>

#include "sp4kl/gsp4.hpp"

namespace sp4kl {

// The 8 reduced words of the Weyl group, in the fixed reference order.
// This order is also the tie-break when canonicalizing arbitrary words.
enum class WeylWord : int {
  one = 0,
  s1 = 1,
  s2 = 2,
  s1s2 = 3,
  s2s1 = 4,
  s1s2s1 = 5,
  s2s1s2 = 6,
  s1s2s1s2 = 7,
};

constexpr std::array<WeylWord, 8> kAllWeylWords = {
    WeylWord::one,    WeylWord::s1,     WeylWord::s2,     WeylWord::s1s2,
    WeylWord::s2s1,   WeylWord::s1s2s1, WeylWord::s2s1s2, WeylWord::s1s2s1s2};

constexpr std::array<WeylWord, 4> kRelevantWeylWords = {
    WeylWord::one, WeylWord::s1s2s1, WeylWord::s2s1s2, WeylWord::s1s2s1s2};

const std::string& weyl_name(WeylWord w);
WeylWord weyl_from_name(const std::string& name);  // throws on bad input
int weyl_length(WeylWord w);

// Matrix of the canonical reduced word (product of the s1, s2 generators).
const Mat4& weyl_matrix(WeylWord w);

// Canonicalize an arbitrary product of generators {1, 2} to the reduced
// word with the same image in N(T)/T. Words with equal image differ by a
// +-1 torus factor, so the signed-permutation support decides the class.
WeylWord canonicalize_word(const std::vector<int>& gens);

// A root m*alpha + n*beta of Sp4; alpha the short simple root, beta the
// long one. The four U-coordinates correspond to the positive roots:
//   x <-> alpha, a <-> 2*alpha+beta, b <-> alpha+beta, c <-> beta.
struct Root {
  int m, n;
  bool operator==(const Root& o) const { return m == o.m && n == o.n; }
  bool positive() const { return m > 0 || (m == 0 && n > 0); }
};

constexpr std::array<Root, 4> kPositiveRoots = {
    Root{1, 0}, Root{0, 1}, Root{1, 1}, Root{2, 1}};

// Index into {x, c, b, a}-style coordinate order below.
enum UCoordIndex { kCoordX = 0, kCoordA = 1, kCoordB = 2, kCoordC = 3 };

Root coord_root(int coord_index);
int root_coord(const Root& r);  // -1 if r is not a positive root

Root weyl_on_root(WeylWord w, const Root& r);

// Free-coordinate masks (indexed by UCoordIndex) of
//   U_w = w^-1 U^T w cap U   and   Ubar_w = w^-1 U w cap U.
// A coordinate is free in U_w iff w sends its root to a negative root.
std::array<bool, 4> uw_free_coords(WeylWord w);
std::array<bool, 4> ubar_free_coords(WeylWord w);

int uw_dimension(WeylWord w);
int ubar_dimension(WeylWord w);

// Zero out the coordinates of u that are not free in U_w.
UCoords restrict_to_uw(WeylWord w, const UCoords& u);

bool in_uw(WeylWord w, const UCoords& u);

// The representative of u * U_w(Z) with all coordinates in [0, 1); u must
// lie in U_w.
UCoords canonical_right_coset_rep(WeylWord w, const UCoords& u);

}  // namespace sp4kl
