#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "sp4kl/bruhat.hpp"
#include "sp4kl/characters.hpp"

using namespace sp4kl;

namespace {

std::mt19937 rng(2024);

Rational random_rat(int num_range = 12, int den_max = 12) {
  std::uniform_int_distribution<int> dn(-num_range, num_range), dd(1, den_max);
  return rat(dn(rng), dd(rng));
}

UCoords random_ucoords() {
  return UCoords{random_rat(), random_rat(), random_rat(), random_rat()};
}

}  // namespace

TEST_CASE("generators match their defining matrices") {
  GSpElement t11 = make_generator(GeneratorKind::t, {rat(1), rat(1)});
  CHECK(t11.g == Mat4::identity());
  CHECK(t11.mu == 1);

  // c* at c = (q, q) is diag(1/q, 1, q, 1).
  GSpElement cs = make_generator(GeneratorKind::c_star, {rat(5), rat(5)});
  CHECK(cs.g == gen_t(rat(1, 5), rat(1)));
  CHECK(cs.mu == 1);

  // n(1) s(0) is n(1), with -x in the (4,3) slot.
  GSpElement n1 = make_generator(GeneratorKind::n, {rat(1)});
  Mat4 prod = n1.g * gen_s(rat(0), rat(0), rat(0));
  CHECK(prod == n1.g);
  CHECK(n1.g.m[3][2] == rat(-1));
  CHECK(n1.g.m[0][1] == rat(1));

  CHECK_THROWS_AS(make_generator(GeneratorKind::i_embed,
                                 {rat(1), rat(2), rat(2), rat(4)}),
                  std::invalid_argument);
}

TEST_CASE("multiplier") {
  CHECK(multiplier(Mat4::identity()) == 1);
  Mat4 d = Mat4::identity();
  d.m[2][2] = -1;
  d.m[3][3] = -1;
  CHECK(multiplier(d) == -1);
  CHECK(multiplier(weyl_matrix(WeylWord::s1)) == 1);

  Mat4 bad = Mat4::identity();
  bad.m[0][1] = 1;
  bad.m[1][0] = 1;
  CHECK_THROWS_AS(multiplier(bad), NotSymplecticError);
}

TEST_CASE("every generator satisfies g^T J g = mu J") {
  for (int i = 0; i < 100; ++i) {
    UCoords u = random_ucoords();
    GSpElement g{u_matrix(u)};
    CHECK(g.mu == 1);
  }
  GSpElement i_g = make_generator(GeneratorKind::i_embed,
                                  {rat(2), rat(1), rat(1), rat(1)});
  CHECK(i_g.mu == 1);  // det = 1
  GSpElement t_g = make_generator(GeneratorKind::t, {rat(3), rat(1, 2)});
  CHECK(t_g.mu == 1);
}

TEST_CASE("the eight reduced words have distinct matrices") {
  std::set<std::string> seen;
  for (WeylWord w : kAllWeylWords) seen.insert(weyl_matrix(w).str());
  CHECK(seen.size() == 8);
  CHECK(weyl_matrix(WeylWord::one) == Mat4::identity());

  // s1 as displayed.
  Mat4 s1 = weyl_matrix(WeylWord::s1);
  CHECK(s1.m[0][1] == 1);
  CHECK(s1.m[1][0] == -1);
  CHECK(s1.m[2][3] == 1);
  CHECK(s1.m[3][2] == -1);
}

TEST_CASE("long element squares to a central torus element") {
  Mat4 sq = weyl_matrix(WeylWord::s1s2s1s2) * weyl_matrix(WeylWord::s1s2s1s2);
  Mat4 minus_id;
  for (int i = 0; i < 4; ++i) minus_id.m[i][i] = -1;
  CHECK(sq == minus_id);
  // Trivial action on every root.
  std::vector<int> gens = {1, 2, 1, 2, 1, 2, 1, 2};
  CHECK(canonicalize_word(gens) == WeylWord::one);
}

TEST_CASE("word canonicalization respects the group law") {
  CHECK(canonicalize_word({}) == WeylWord::one);
  CHECK(canonicalize_word({1}) == WeylWord::s1);
  CHECK(canonicalize_word({1, 1}) == WeylWord::one);
  CHECK(canonicalize_word({2, 2}) == WeylWord::one);
  CHECK(canonicalize_word({1, 2, 1, 1, 2, 1}) == WeylWord::one);
  CHECK(canonicalize_word({1, 2, 2, 1, 2}) == WeylWord::s2);
  // Braid relation s1 s2 s1 s2 = s2 s1 s2 s1.
  CHECK(canonicalize_word({2, 1, 2, 1}) == WeylWord::s1s2s1s2);
}

TEST_CASE("matrix conjugation realizes the root action") {
  for (WeylWord w : kAllWeylWords) {
    const Mat4& wm = weyl_matrix(w);
    Mat4 wm_inv = wm.inverse();
    for (int coord = 0; coord < 4; ++coord) {
      Root image = weyl_on_root(w, coord_root(coord));
      UCoords u{rat(0), rat(0), rat(0), rat(0)};
      (coord == kCoordX   ? u.x
       : coord == kCoordA ? u.a
       : coord == kCoordB ? u.b
                          : u.c) = rat(1);
      Mat4 conj = wm * u_matrix(u) * wm_inv;
      if (image.positive()) {
        UCoords img = u_coords(conj);
        int target = root_coord(image);
        Rational got = target == kCoordX   ? img.x
                       : target == kCoordA ? img.a
                       : target == kCoordB ? img.b
                                           : img.c;
        CHECK((got == 1 || got == -1));
      } else {
        // Negative root: the conjugate is lower unipotent.
        CHECK_THROWS_AS(u_coords(conj), std::invalid_argument);
      }
    }
  }
}

TEST_CASE("U_w dimensions add to 4 and match the displayed cells") {
  for (WeylWord w : kAllWeylWords)
    CHECK(uw_dimension(w) + ubar_dimension(w) == 4);
  CHECK(uw_dimension(WeylWord::one) == 0);
  CHECK(ubar_dimension(WeylWord::one) == 4);
  // s1s2s1: three free coordinates (x, a, b), the c slot is pinned.
  auto free = uw_free_coords(WeylWord::s1s2s1);
  CHECK(free[kCoordX]);
  CHECK(free[kCoordA]);
  CHECK(free[kCoordB]);
  CHECK(!free[kCoordC]);
  CHECK(uw_dimension(WeylWord::s1s2s1s2) == 4);
}

TEST_CASE("u_compose matches matrix multiplication") {
  for (int i = 0; i < 200; ++i) {
    UCoords a = random_ucoords(), b = random_ucoords();
    CHECK(u_matrix(u_compose(a, b)) == u_matrix(a) * u_matrix(b));
  }
}

TEST_CASE("conjugated character: pinned components") {
  // s1s2s1 pins N2 = M2 c1^2 / c2^2.
  auto cc = conjugated_character(WeylWord::s1s2s1, Modulus(2, 4), {3, 5});
  CHECK(cc.m_side_ok);
  CHECK(!cc.n1_required);
  REQUIRE(cc.n2_required);
  CHECK(*cc.n2_required == rat(5 * 4, 16));

  // Trivial word at c = (1,1) forces N = M.
  auto cid = conjugated_character(WeylWord::one, Modulus(1, 1), {2, -1});
  REQUIRE(cid.n1_required);
  REQUIRE(cid.n2_required);
  CHECK(*cid.n1_required == 2);
  CHECK(*cid.n2_required == -1);

  // s2s1s2 at c = (2,4): N1 = M1 c2 / c1^2 = 1.
  auto cq = conjugated_character(WeylWord::s2s1s2, Modulus(2, 4), {1, 1});
  REQUIRE(cq.n1_required);
  CHECK(*cq.n1_required == 1);
  CHECK(!cq.n2_required);
}

TEST_CASE("conjugated character agrees with direct evaluation") {
  // psi^(M)(w c* x (c*)^-1 w^-1) = psi^(N)(x) for x in Ubar_w, and fails
  // for a perturbed N.
  std::uniform_int_distribution<int> dm(-3, 3), dc(1, 4);
  for (WeylWord w : kAllWeylWords) {
    for (int trial = 0; trial < 100; ++trial) {
      Modulus c(dc(rng), dc(rng));
      std::array<long, 2> M{dm(rng), dm(rng)};
      auto cc = conjugated_character(w, c, M);
      if (!cc.m_side_ok) continue;
      Rational n1 = cc.n1_required ? *cc.n1_required : rat(0);
      Rational n2 = cc.n2_required ? *cc.n2_required : rat(0);

      Mat4 cs = gen_c_star(rat(c.c1), rat(c.c2));
      Mat4 a = weyl_matrix(w) * cs;
      Mat4 a_inv = a.inverse();
      UCoords x = random_ucoords();
      // Kill the coordinates pinned to zero in Ubar_w.
      auto free = ubar_free_coords(w);
      if (!free[kCoordX]) x.x = 0;
      if (!free[kCoordA]) x.a = 0;
      if (!free[kCoordB]) x.b = 0;
      if (!free[kCoordC]) x.c = 0;

      UCoords img = u_coords(a * u_matrix(x) * a_inv);
      Rational lhs = M[0] * img.x + M[1] * img.c;
      Rational rhs = n1 * x.x + n2 * x.c;
      CHECK(mod1(lhs - rhs) == 0);
      // Perturbation breaks the identity on generic x.
      if ((cc.n1_required && x.x != 0) || (cc.n2_required && x.c != 0)) {
        Rational rhs_bad = (n1 + rat(1, 7)) * x.x + (n2 + rat(1, 7)) * x.c;
        CHECK(lhs != rhs_bad);
      }
    }
  }
}

TEST_CASE("bruhat_cell round trips") {
  CHECK(bruhat_cell(Mat4::identity()).w == WeylWord::one);
  CHECK(bruhat_cell(Mat4::identity()).c1 == 1);

  // The displayed middle factor c* w at c = (q, q) decomposes with zero
  // unipotent parts.
  Mat4 mid = gen_c_star(rat(7), rat(7)) * weyl_matrix(WeylWord::s1s2s1);
  BruhatData d = bruhat_cell(mid);
  CHECK(d.w == WeylWord::s1s2s1);
  CHECK(d.c1 == 7);
  CHECK(d.c2 == 7);
  CHECK(d.left == UCoords{rat(0), rat(0), rat(0), rat(0)});
  CHECK(d.right == UCoords{rat(0), rat(0), rat(0), rat(0)});

  std::uniform_int_distribution<int> dc(1, 6);
  for (WeylWord w : kAllWeylWords) {
    for (int i = 0; i < 1000; ++i) {
      BruhatData in;
      in.w = w;
      in.c1 = rat(dc(rng));
      in.c2 = rat(dc(rng));
      in.left = random_ucoords();
      in.right = restrict_to_uw(w, random_ucoords());
      Mat4 g = assemble_bruhat(in);
      BruhatData got = bruhat_cell(g);
      CHECK(got.w == in.w);
      CHECK(got.c1 == in.c1);
      CHECK(got.c2 == in.c2);
      CHECK(got.left == in.left);
      CHECK(got.right == in.right);
    }
  }
}

TEST_CASE("bruhat normalization reports the positive unit translate") {
  for (WeylWord w : kAllWeylWords) {
    for (Rational c1 : {rat(2), rat(-2)}) {
      for (Rational c2 : {rat(3), rat(-3)}) {
        BruhatData d;
        d.w = w;
        d.c1 = c1;
        d.c2 = c2;
        d.left = UCoords{rat(1, 2), rat(0), rat(1, 3), rat(0)};
        d.right = restrict_to_uw(w, UCoords{rat(1, 5), rat(1), rat(2), rat(3)});
        Mat4 g = assemble_bruhat(d);
        auto norm = normalize_bruhat(bruhat_cell(g));
        REQUIRE(norm);
        CHECK(norm->w == w);
        CHECK(norm->c.c1 == 2);
        CHECK(norm->c.c2 == 3);
        // The normalized data assembles to g * t(e1, e2).
        BruhatData back;
        back.w = norm->w;
        back.c1 = rat(norm->c.c1);
        back.c2 = rat(norm->c.c2);
        back.left = norm->left;
        back.right = norm->right;
        Mat4 translate =
            g * gen_t(rat(norm->unit_adjust[0]), rat(norm->unit_adjust[1]));
        CHECK(assemble_bruhat(back) == translate);
        // Positive data is left untouched.
        if (c1 > 0 && c2 > 0)
          CHECK((norm->unit_adjust[0] == 1 && norm->unit_adjust[1] == 1));
      }
    }
  }
}
