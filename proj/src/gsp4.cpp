#include "sp4kl/gsp4.hpp"

#include <sstream>

namespace sp4kl {

Mat4 Mat4::identity() {
  Mat4 r;
  for (int i = 0; i < 4; ++i) r.m[i][i] = 1;
  return r;
}

Mat4 Mat4::operator*(const Mat4& o) const {
  Mat4 r;
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) {
      if (m[i][k] == 0) continue;
      for (int j = 0; j < 4; ++j) {
        if (o.m[k][j] == 0) continue;
        r.m[i][j] += m[i][k] * o.m[k][j];
      }
    }
  return r;
}

Mat4 Mat4::operator-(const Mat4& o) const {
  Mat4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r.m[i][j] = m[i][j] - o.m[i][j];
  return r;
}

Mat4 Mat4::transpose() const {
  Mat4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r.m[i][j] = m[j][i];
  return r;
}

namespace {
Rational det3(const Mat4& a, int skip_row, int skip_col) {
  Rational rows[3][3];
  int ri = 0;
  for (int i = 0; i < 4; ++i) {
    if (i == skip_row) continue;
    int rj = 0;
    for (int j = 0; j < 4; ++j) {
      if (j == skip_col) continue;
      rows[ri][rj++] = a.m[i][j];
    }
    ++ri;
  }
  return rows[0][0] * (rows[1][1] * rows[2][2] - rows[1][2] * rows[2][1]) -
         rows[0][1] * (rows[1][0] * rows[2][2] - rows[1][2] * rows[2][0]) +
         rows[0][2] * (rows[1][0] * rows[2][1] - rows[1][1] * rows[2][0]);
}
}  // namespace

Rational Mat4::det() const {
  Rational d(0);
  for (int j = 0; j < 4; ++j) {
    if (m[0][j] == 0) continue;
    Rational c = m[0][j] * det3(*this, 0, j);
    d += (j % 2 == 0) ? c : -c;
  }
  return d;
}

Mat4 Mat4::inverse() const {
  Rational d = det();
  if (d == 0) throw std::domain_error("Mat4::inverse: singular matrix");
  Mat4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Rational c = det3(*this, j, i);
      r.m[i][j] = ((i + j) % 2 == 0) ? Rational(c / d) : Rational(-c / d);
    }
  return r;
}

std::string Mat4::str() const {
  std::ostringstream os;
  for (int i = 0; i < 4; ++i) {
    os << "[";
    for (int j = 0; j < 4; ++j) os << (j ? ", " : "") << to_string(m[i][j]);
    os << "]" << (i < 3 ? "\n" : "");
  }
  return os.str();
}

const Mat4& form_J() {
  static const Mat4 J = [] {
    Mat4 j;
    j.m[0][2] = 1;
    j.m[1][3] = 1;
    j.m[2][0] = -1;
    j.m[3][1] = -1;
    return j;
  }();
  return J;
}

Rational multiplier(const Mat4& g) {
  Mat4 gt_j_g = g.transpose() * form_J() * g;
  Rational mu = gt_j_g.m[0][2];
  Mat4 expected;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) expected.m[i][j] = mu * form_J().m[i][j];
  if (mu == 0 || !(gt_j_g == expected))
    throw NotSymplecticError("multiplier: g^T J g is not a multiple of J");
  return mu;
}

bool UCoords::operator<(const UCoords& o) const {
  if (x != o.x) return x < o.x;
  if (a != o.a) return a < o.a;
  if (b != o.b) return b < o.b;
  return c < o.c;
}

Mat4 u_matrix(const UCoords& u) {
  return gen_n(u.x) * gen_s(u.a, u.b, u.c);
}

UCoords u_coords(const Mat4& m) {
  UCoords u;
  u.x = m.m[0][1];
  u.b = m.m[1][2];
  u.c = m.m[1][3];
  u.a = m.m[0][2] - u.x * u.b;
  if (!(u_matrix(u) == m))
    throw std::invalid_argument("u_coords: matrix is not of n(x)s(T) shape");
  return u;
}

UCoords canonical_left_coset_rep(const UCoords& u) {
  // Shift coordinates into [0, 1) in the order x, c, b, a; the later
  // shifts leave the earlier coordinates untouched.
  UCoords r = u;
  r = u_compose(UCoords{-Rational(floor_int(r.x)), rat(0), rat(0), rat(0)}, r);
  r = u_compose(UCoords{rat(0), rat(0), rat(0), -Rational(floor_int(r.c))}, r);
  r = u_compose(UCoords{rat(0), rat(0), -Rational(floor_int(r.b)), rat(0)}, r);
  r = u_compose(UCoords{rat(0), -Rational(floor_int(r.a)), rat(0), rat(0)}, r);
  return r;
}

UCoords u_compose(const UCoords& lhs, const UCoords& rhs) {
  // s(T) n(x) = n(x) s([[a-2bx+cx^2, b-cx], [., c]])
  UCoords r;
  r.x = lhs.x + rhs.x;
  r.a = lhs.a - 2 * lhs.b * rhs.x + lhs.c * rhs.x * rhs.x + rhs.a;
  r.b = lhs.b - lhs.c * rhs.x + rhs.b;
  r.c = lhs.c + rhs.c;
  return r;
}

Mat4 gen_n(const Rational& x) {
  Mat4 r = Mat4::identity();
  r.m[0][1] = x;
  r.m[3][2] = -x;
  return r;
}

Mat4 gen_s(const Rational& a, const Rational& b, const Rational& c) {
  Mat4 r = Mat4::identity();
  r.m[0][2] = a;
  r.m[0][3] = b;
  r.m[1][2] = b;
  r.m[1][3] = c;
  return r;
}

Mat4 gen_i(const Rational& a, const Rational& b, const Rational& c,
           const Rational& d) {
  Rational det = a * d - b * c;
  if (det == 0) throw std::invalid_argument("gen_i: singular 2x2 input");
  Mat4 r = Mat4::zero();
  r.m[0][0] = det;
  r.m[1][1] = a;
  r.m[1][3] = b;
  r.m[2][2] = 1;
  r.m[3][1] = c;
  r.m[3][3] = d;
  return r;
}

Mat4 gen_t(const Rational& x, const Rational& y) {
  if (x == 0 || y == 0) throw std::invalid_argument("gen_t: zero entry");
  Mat4 r = Mat4::zero();
  r.m[0][0] = x;
  r.m[1][1] = y;
  r.m[2][2] = 1 / x;
  r.m[3][3] = 1 / y;
  return r;
}

Mat4 gen_c_star(const Rational& c1, const Rational& c2) {
  if (c1 == 0 || c2 == 0) throw std::invalid_argument("gen_c_star: zero entry");
  return gen_t(1 / c1, c1 / c2);
}

GSpElement make_generator(GeneratorKind kind,
                          const std::vector<Rational>& params) {
  auto need = [&](std::size_t n) {
    if (params.size() != n)
      throw std::invalid_argument("make_generator: wrong arity");
  };
  switch (kind) {
    case GeneratorKind::n:
      need(1);
      return GSpElement(gen_n(params[0]));
    case GeneratorKind::s:
      need(3);
      return GSpElement(gen_s(params[0], params[1], params[2]));
    case GeneratorKind::i_embed:
      need(4);
      return GSpElement(gen_i(params[0], params[1], params[2], params[3]));
    case GeneratorKind::t:
      need(2);
      return GSpElement(gen_t(params[0], params[1]));
    case GeneratorKind::c_star:
      need(2);
      return GSpElement(gen_c_star(params[0], params[1]));
  }
  throw std::invalid_argument("make_generator: unknown kind");
}

}  // namespace sp4kl
