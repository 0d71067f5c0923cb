#include "sp4kl/weyl.hpp"

#include <stdexcept>

namespace sp4kl {

namespace {

const std::array<std::string, 8> kNames = {"1",      "s1",     "s2",
                                           "s1s2",   "s2s1",   "s1s2s1",
                                           "s2s1s2", "s1s2s1s2"};

const std::array<std::vector<int>, 8> kGenSeqs = {
    std::vector<int>{},        std::vector<int>{1},
    std::vector<int>{2},       std::vector<int>{1, 2},
    std::vector<int>{2, 1},    std::vector<int>{1, 2, 1},
    std::vector<int>{2, 1, 2}, std::vector<int>{1, 2, 1, 2}};

Mat4 s1_matrix() {
  Mat4 m = Mat4::zero();
  m.m[0][1] = 1;
  m.m[1][0] = -1;
  m.m[2][3] = 1;
  m.m[3][2] = -1;
  return m;
}

Mat4 s2_matrix() {
  Mat4 m = Mat4::zero();
  m.m[0][0] = 1;
  m.m[1][3] = 1;
  m.m[2][2] = 1;
  m.m[3][1] = -1;
  return m;
}

Mat4 word_product(const std::vector<int>& gens) {
  Mat4 p = Mat4::identity();
  for (int g : gens) {
    if (g == 1)
      p = p * s1_matrix();
    else if (g == 2)
      p = p * s2_matrix();
    else
      throw std::invalid_argument("word_product: generator must be 1 or 2");
  }
  return p;
}

// Column-support permutation of a monomial matrix: perm[i] = the column
// holding the nonzero entry of row i.
std::array<int, 4> monomial_support(const Mat4& m) {
  std::array<int, 4> perm{};
  for (int i = 0; i < 4; ++i) {
    int found = -1;
    for (int j = 0; j < 4; ++j) {
      if (m.m[i][j] != 0) {
        if (found >= 0)
          throw std::invalid_argument("monomial_support: not monomial");
        found = j;
      }
    }
    if (found < 0)
      throw std::invalid_argument("monomial_support: zero row");
    perm[i] = found;
  }
  return perm;
}

}  // namespace

const std::string& weyl_name(WeylWord w) { return kNames[static_cast<int>(w)]; }

WeylWord weyl_from_name(const std::string& name) {
  for (int i = 0; i < 8; ++i)
    if (kNames[i] == name) return static_cast<WeylWord>(i);
  throw std::invalid_argument("weyl_from_name: unknown word '" + name + "'");
}

int weyl_length(WeylWord w) {
  return static_cast<int>(kGenSeqs[static_cast<int>(w)].size());
}

const Mat4& weyl_matrix(WeylWord w) {
  static const std::array<Mat4, 8> mats = [] {
    std::array<Mat4, 8> out;
    for (int i = 0; i < 8; ++i) out[i] = word_product(kGenSeqs[i]);
    return out;
  }();
  return mats[static_cast<int>(w)];
}

WeylWord canonicalize_word(const std::vector<int>& gens) {
  std::array<int, 4> support = monomial_support(word_product(gens));
  for (WeylWord w : kAllWeylWords) {
    if (monomial_support(weyl_matrix(w)) == support) return w;
  }
  throw std::logic_error("canonicalize_word: no canonical match");
}

Root coord_root(int coord_index) {
  switch (coord_index) {
    case kCoordX:
      return Root{1, 0};
    case kCoordA:
      return Root{2, 1};
    case kCoordB:
      return Root{1, 1};
    case kCoordC:
      return Root{0, 1};
  }
  throw std::invalid_argument("coord_root: bad index");
}

int root_coord(const Root& r) {
  for (int i = 0; i < 4; ++i)
    if (coord_root(i) == r) return i;
  return -1;
}

Root weyl_on_root(WeylWord w, const Root& r) {
  // s_alpha(m, n) = (-m + 2n, n); s_beta(m, n) = (m, m - n).
  Root cur = r;
  const std::vector<int>& gens = kGenSeqs[static_cast<int>(w)];
  for (auto it = gens.rbegin(); it != gens.rend(); ++it) {
    if (*it == 1)
      cur = Root{-cur.m + 2 * cur.n, cur.n};
    else
      cur = Root{cur.m, cur.m - cur.n};
  }
  return cur;
}

std::array<bool, 4> uw_free_coords(WeylWord w) {
  std::array<bool, 4> free{};
  for (int i = 0; i < 4; ++i)
    free[i] = !weyl_on_root(w, coord_root(i)).positive();
  return free;
}

std::array<bool, 4> ubar_free_coords(WeylWord w) {
  std::array<bool, 4> free{};
  for (int i = 0; i < 4; ++i)
    free[i] = weyl_on_root(w, coord_root(i)).positive();
  return free;
}

int uw_dimension(WeylWord w) {
  int d = 0;
  for (bool f : uw_free_coords(w)) d += f ? 1 : 0;
  return d;
}

int ubar_dimension(WeylWord w) { return 4 - uw_dimension(w); }

UCoords restrict_to_uw(WeylWord w, const UCoords& u) {
  std::array<bool, 4> free = uw_free_coords(w);
  UCoords r;
  r.x = free[kCoordX] ? u.x : Rational(0);
  r.a = free[kCoordA] ? u.a : Rational(0);
  r.b = free[kCoordB] ? u.b : Rational(0);
  r.c = free[kCoordC] ? u.c : Rational(0);
  return r;
}

bool in_uw(WeylWord w, const UCoords& u) {
  std::array<bool, 4> free = uw_free_coords(w);
  return (free[kCoordX] || u.x == 0) && (free[kCoordA] || u.a == 0) &&
         (free[kCoordB] || u.b == 0) && (free[kCoordC] || u.c == 0);
}

UCoords canonical_right_coset_rep(WeylWord w, const UCoords& u) {
  if (!in_uw(w, u))
    throw std::invalid_argument("canonical_right_coset_rep: u not in U_w");
  std::array<bool, 4> free = uw_free_coords(w);
  UCoords r = u;
  // Right shifts in the order x, c, b, a; only free coordinates move, and
  // each shift element stays inside U_w(Z).
  if (free[kCoordX])
    r = u_compose(r, UCoords{-Rational(floor_int(r.x)), rat(0), rat(0),
                             rat(0)});
  if (free[kCoordC])
    r = u_compose(r, UCoords{rat(0), rat(0), rat(0),
                             -Rational(floor_int(r.c))});
  if (free[kCoordB])
    r = u_compose(r, UCoords{rat(0), rat(0), -Rational(floor_int(r.b)),
                             rat(0)});
  if (free[kCoordA])
    r = u_compose(r, UCoords{rat(0), -Rational(floor_int(r.a)), rat(0),
                             rat(0)});
  return r;
}

}  // namespace sp4kl
