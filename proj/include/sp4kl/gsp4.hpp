#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "sp4kl/rational.hpp"

namespace sp4kl {

struct NotSymplecticError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// 4x4 matrix over exact rationals.
struct Mat4 {
  std::array<std::array<Rational, 4>, 4> m{};

  static Mat4 identity();
  static Mat4 zero() { return Mat4{}; }

  Rational& operator()(int i, int j) { return m[i][j]; }
  const Rational& operator()(int i, int j) const { return m[i][j]; }

  Mat4 operator*(const Mat4& o) const;
  Mat4 operator-(const Mat4& o) const;
  bool operator==(const Mat4& o) const { return m == o.m; }

  Mat4 transpose() const;
  Rational det() const;
  Mat4 inverse() const;  // throws std::domain_error on det 0

  std::string str() const;
};

// The symplectic form of the ambient group: identity blocks in the
// off-diagonal corners.
const Mat4& form_J();

// g in GSp4 iff g^T J g = mu(g) J with mu != 0. Throws NotSymplecticError.
Rational multiplier(const Mat4& g);

// Element of GSp4(Q) with its multiplier cached at construction.
struct GSpElement {
  Mat4 g;
  Rational mu;

  explicit GSpElement(const Mat4& mat) : g(mat), mu(multiplier(mat)) {}

  bool is_sp4() const { return mu == 1; }
};

enum class GeneratorKind { n, s, i_embed, t, c_star };

// Standard coordinates on the unipotent radical U of the Borel:
// u = n(x) * s([[a, b], [b, c]]). The additive character of U reads the
// pair (x, c).
struct UCoords {
  Rational x, a, b, c;

  bool operator==(const UCoords& o) const {
    return x == o.x && a == o.a && b == o.b && c == o.c;
  }
  bool operator<(const UCoords& o) const;
};

Mat4 u_matrix(const UCoords& u);

// Inverse of u_matrix; throws std::invalid_argument if m is not of the
// n(x)s(T) shape.
UCoords u_coords(const Mat4& m);

// Group law of U in coordinates: u_matrix(a) * u_matrix(b).
UCoords u_compose(const UCoords& lhs, const UCoords& rhs);

// The unique representative of U(Z) * u with all coordinates in [0, 1).
UCoords canonical_left_coset_rep(const UCoords& u);

Mat4 gen_n(const Rational& x);
Mat4 gen_s(const Rational& a, const Rational& b, const Rational& c);
Mat4 gen_i(const Rational& a, const Rational& b, const Rational& c,
           const Rational& d);  // rejects det 0
Mat4 gen_t(const Rational& x, const Rational& y);
// c = (c1, c2) -> c* = t(1/c1, c1/c2); c1, c2 nonzero.
Mat4 gen_c_star(const Rational& c1, const Rational& c2);

GSpElement make_generator(GeneratorKind kind,
                          const std::vector<Rational>& params);

}  // namespace sp4kl
