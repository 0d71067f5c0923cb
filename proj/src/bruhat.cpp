#include "sp4kl/bruhat.hpp"

namespace sp4kl {

namespace {

struct XPrimeRows {
  // Row entries of x' as functions of its coordinates:
  //   row1 = (1, u', A', B'), row2 = (0, 1, r', v'),
  //   row3 = e3,              row4 = (0, 0, -u', 1),
  // with A' = p' + u'r' and B' = r' + u'v'.
  Rational up, Ap, Bp, rp, vp;
};

UCoords xprime_coords(const XPrimeRows& r) {
  UCoords u;
  u.x = r.up;
  u.b = r.Bp - r.up * r.vp;
  u.c = r.vp;
  u.a = r.Ap - r.up * u.b;
  return u;
}

// Column index of the nonzero entry in each row of the Weyl matrix.
std::array<int, 4> weyl_support(WeylWord w) {
  std::array<int, 4> s{};
  const Mat4& m = weyl_matrix(w);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (m.m[i][j] != 0) s[i] = j;
  return s;
}

// Read off the U_w part from rows 3 and 4 of g, assuming cell w. Returns
// nullopt when the exposed entries contradict the assumed cell shape.
std::optional<UCoords> read_xprime(const Mat4& g, WeylWord w) {
  std::array<int, 4> sup = weyl_support(w);
  const int s3 = sup[2];
  XPrimeRows r{rat(0), rat(0), rat(0), rat(0), rat(0)};

  switch (s3) {
    case 0: {  // row3(g) = tau3 * (1, u', A', B')
      if (g.m[2][0] == 0) return std::nullopt;
      r.up = g.m[2][1] / g.m[2][0];
      r.Ap = g.m[2][2] / g.m[2][0];
      r.Bp = g.m[2][3] / g.m[2][0];
      if (w == WeylWord::s1s2s1) {
        r.vp = 0;
      } else {  // long element: row4 = -u*tau3*row1(x') + tau4*row2(x')
        Rational tau4 = g.m[3][1] - g.m[3][0] * r.up;
        if (tau4 == 0) return std::nullopt;
        r.rp = (g.m[3][2] - g.m[3][0] * r.Ap) / tau4;
        r.vp = (g.m[3][3] - g.m[3][0] * r.Bp) / tau4;
      }
      break;
    }
    case 1: {  // row3(g) = tau3 * (0, 1, r', v')
      if (g.m[2][0] != 0 || g.m[2][1] == 0) return std::nullopt;
      r.rp = g.m[2][2] / g.m[2][1];
      r.vp = g.m[2][3] / g.m[2][1];
      r.Bp = r.rp;  // u' = 0 in these cells
      if (w == WeylWord::s2s1s2) {
        if (g.m[3][0] == 0) return std::nullopt;
        r.Ap = (g.m[3][2] - g.m[3][1] * r.rp) / g.m[3][0];
      }
      break;
    }
    case 2: {  // row3(g) = tau3 * e3
      if (g.m[2][0] != 0 || g.m[2][1] != 0 || g.m[2][3] != 0 ||
          g.m[2][2] == 0)
        return std::nullopt;
      if (w == WeylWord::s2) {
        if (g.m[3][1] == 0) return std::nullopt;
        r.vp = g.m[3][3] / g.m[3][1];
      }
      break;
    }
    case 3: {  // row3(g) = tau3 * (0, 0, -u', 1)
      if (g.m[2][0] != 0 || g.m[2][1] != 0 || g.m[2][3] == 0)
        return std::nullopt;
      r.up = -g.m[2][2] / g.m[2][3];
      if (w == WeylWord::s2s1) {
        // p' = A' here since r' = 0.
        if (g.m[3][0] == 0) return std::nullopt;
        r.Ap = (g.m[3][2] + g.m[3][3] * r.up) / g.m[3][0];
      }
      break;
    }
  }
  // Recompute derived entries for cells where A'/B' were filled directly.
  UCoords u = xprime_coords(r);
  if (!in_uw(w, u)) return std::nullopt;
  return u;
}

std::optional<BruhatData> try_cell(const Mat4& g, WeylWord w) {
  std::optional<UCoords> xp = read_xprime(g, w);
  if (!xp) return std::nullopt;

  Mat4 m = g * u_matrix(*xp).inverse() * weyl_matrix(w).inverse();
  // m must be x * t with x upper unipotent of U-shape and t = t(t1, t2).
  if (m.m[1][0] != 0 || m.m[2][0] != 0 || m.m[2][1] != 0 || m.m[2][3] != 0 ||
      m.m[3][0] != 0)
    return std::nullopt;
  Rational t1 = m.m[0][0], t2 = m.m[1][1], t3 = m.m[2][2], t4 = m.m[3][3];
  if (t1 == 0 || t2 == 0 || t3 == 0 || t4 == 0) return std::nullopt;
  if (t3 * t1 != 1 || t4 * t2 != 1) return std::nullopt;

  UCoords x;
  x.x = m.m[0][1] / t2;
  if (m.m[3][2] != -x.x * t3) return std::nullopt;
  x.b = m.m[1][2] / t3;
  x.c = m.m[1][3] / t4;
  Rational A = m.m[0][2] / t3;
  Rational C = m.m[0][3] / t4;
  if (C != x.b + x.x * x.c) return std::nullopt;
  x.a = A - x.x * x.b;

  BruhatData d;
  d.w = w;
  d.c1 = 1 / t1;
  d.c2 = 1 / (t1 * t2);
  d.left = x;
  d.right = *xp;
  if (!(assemble_bruhat(d) == g)) return std::nullopt;
  return d;
}

}  // namespace

Mat4 assemble_bruhat(const BruhatData& d) {
  Mat4 t = gen_c_star(d.c1, d.c2);
  return u_matrix(d.left) * t * weyl_matrix(d.w) * u_matrix(d.right);
}

BruhatData bruhat_cell(const Mat4& g) {
  if (multiplier(g) != 1)
    throw std::invalid_argument("bruhat_cell: multiplier must be 1");
  for (WeylWord w : kAllWeylWords) {
    if (auto d = try_cell(g, w)) return *d;
  }
  throw std::logic_error("bruhat_cell: no cell matched (unreachable)");
}

BruhatData bruhat_cell(const GSpElement& g) { return bruhat_cell(g.g); }

std::optional<NormalizedBruhat> normalize_bruhat(const BruhatData& d) {
  const Mat4& wm = weyl_matrix(d.w);
  Mat4 t = gen_c_star(d.c1, d.c2);
  for (int s1 = 0; s1 < 2; ++s1) {
    for (int s2 = 0; s2 < 2; ++s2) {
      int e1 = s1 ? -1 : 1;
      int e2 = s2 ? -1 : 1;
      // g * eps = x * (t * w eps w^-1) * w * (eps^-1 x' eps).
      Mat4 eps = gen_t(rat(e1), rat(e2));
      Mat4 delta = wm * eps * wm.inverse();
      Mat4 tp = t * delta;
      Rational c1 = 1 / tp.m[0][0];
      Rational c2 = 1 / (tp.m[0][0] * tp.m[1][1]);
      if (c1 > 0 && c2 > 0 && is_integer(c1) && is_integer(c2)) {
        NormalizedBruhat n;
        n.w = d.w;
        n.c = Modulus(num(c1).get_si(), num(c2).get_si());
        n.left = d.left;
        n.right = u_coords(eps.inverse() * u_matrix(d.right) * eps);
        n.unit_adjust = {e1, e2};
        return n;
      }
    }
  }
  return std::nullopt;
}

}  // namespace sp4kl
