#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <numeric>
#include <random>
#include <set>

#include "sp4kl/kloosterman.hpp"

using namespace sp4kl;

namespace {

std::mt19937 rng(4242);

long expect_int(const PhaseSum& s) {
  auto v = s.integer_value();
  REQUIRE(v);
  return v->get_si();
}

}  // namespace

TEST_CASE("admissibility examples") {
  CharacterPair ch;
  ch.M = {1, 1};
  ch.N = {1, 1};
  CHECK(is_admissible(WeylWord::s1s2s1, Modulus(2, 2), ch));
  CHECK(is_admissible(WeylWord::s1s2s1s2, Modulus(3, 7), ch));

  CharacterPair bad;
  bad.M = {1, 1};
  bad.N = {1, 0};
  CHECK(!is_admissible(WeylWord::s1, Modulus(2, 3), bad));

  // The table pins N1 = M1 c2 / c1^2 for s2s1s2.
  CharacterPair q24;
  q24.M = {1, 1};
  q24.N = {1, 5};
  CHECK(is_admissible(WeylWord::s2s1s2, Modulus(2, 4), q24));
}

TEST_CASE("relevance") {
  CHECK(relevant(WeylWord::one));
  CHECK(relevant(WeylWord::s2s1s2));
  CHECK(relevant(WeylWord::s1s2s1));
  CHECK(relevant(WeylWord::s1s2s1s2));
  CHECK(!relevant(WeylWord::s1));
  CHECK(!relevant(WeylWord::s2));
  CHECK(!relevant(WeylWord::s1s2));
  CHECK(!relevant(WeylWord::s2s1));
}

TEST_CASE("auto character resolution") {
  auto n = resolve_auto_n(WeylWord::s1s2s1, Modulus(2, 2), {1, 1});
  REQUIRE(n);
  CHECK((*n)[1] == 1);
  // Non-integral pinned component: no resolution.
  CHECK(!resolve_auto_n(WeylWord::s1s2s1, Modulus(1, 2), {1, 1}));
  // Free components default to M.
  auto nl = resolve_auto_n(WeylWord::s1s2s1s2, Modulus(2, 4), {3, 7});
  REQUIRE(nl);
  CHECK((*nl) == std::array<long, 2>{3, 7});
}

TEST_CASE("enumeration: ramified cells of the lemma") {
  for (long q : {2L, 3L}) {
    LatticeDesc L = LatticeDesc::paramodular(q);
    ElementList set =
        enumerate_kloosterman_set(L, WeylWord::s1s2s1, Modulus(q, q));
    CHECK(set.size() == static_cast<std::size_t>(q * q));

    // Witnesses carry the right Bruhat data.
    for (const auto& e : set) {
      CHECK(contains(L, e.gamma));
      BruhatData d = bruhat_cell(e.gamma);
      CHECK(d.w == WeylWord::s1s2s1);
      CHECK(d.c1 == q);
      CHECK(d.c2 == q);
    }

    // q does not divide a: empty set.
    CHECK(enumerate_kloosterman_set(L, WeylWord::s2s1s2,
                                    Modulus(q + 1, (q + 1) * (q + 1)))
              .empty());
  }
}

TEST_CASE("trivial cell") {
  ElementList full =
      enumerate_kloosterman_set(LatticeDesc::full(), WeylWord::one,
                                Modulus(1, 1));
  CHECK(full.size() == 1);
  UCoords zero{rat(0), rat(0), rat(0), rat(0)};
  CHECK(full[0].x == zero);
  CHECK(full[0].xp == zero);
}

TEST_CASE("kloosterman sums match the lemma values") {
  KloostermanQuery a{LatticeDesc::paramodular(3), WeylWord::s1s2s1,
                     Modulus(3, 3), {}};
  CHECK(expect_int(kloosterman_sum(a)) == 9);

  KloostermanQuery b{LatticeDesc::paramodular(2), WeylWord::s2s1s2,
                     Modulus(2, 4), {}};
  CHECK(expect_int(kloosterman_sum(b)) == 0);

  KloostermanQuery c{LatticeDesc::paramodular(2), WeylWord::s1s2s1s2,
                     Modulus(2, 2), {}};
  CHECK(expect_int(kloosterman_sum(c)) == 4);

  // Trivial Weyl element: N(Gamma) at c = (1,1), M = N.
  KloostermanQuery d{LatticeDesc::paramodular(5), WeylWord::one, Modulus(1, 1),
                     {}};
  CHECK(expect_int(kloosterman_sum(d)) == 5);

  // Inadmissible data gives 0 by definition.
  KloostermanQuery e = a;
  e.chars.N = {1, 2};
  CHECK(kloosterman_sum(e).is_zero());
}

TEST_CASE("classical Kloosterman sums") {
  CHECK(expect_int(classical_kloosterman(1, 1, 1)) == 1);
  CHECK(expect_int(classical_kloosterman(1, 1, 3)) == -1);
  CHECK(expect_int(classical_kloosterman(0, 0, 12)) == 4);  // phi(12)
  // Symmetry S(a, b; c) = S(b, a; c).
  for (long c : {5L, 7L, 9L})
    for (long a = 0; a <= 3; ++a)
      for (long b = 0; b <= 3; ++b)
        CHECK(classical_kloosterman(a, b, c).value_equals(
            classical_kloosterman(b, a, c)));
}

TEST_CASE("closed forms across the tabulated range") {
  for (long q : {2L, 3L, 5L}) {
    LatticeDesc L = LatticeDesc::paramodular(q);
    CHECK(paramodular_closed_form(WeylWord::s1s2s1, q, 1, {1, 1})
              .value_equals(PhaseSum::integer(Integer(q * q))));
    CHECK(paramodular_closed_form(WeylWord::s2s1s2, q, 2, {1, 1}).is_zero());
    long c2 = q;
    for (int k = 1; k <= 3; ++k, c2 *= q) {
      KloostermanQuery kq{L, WeylWord::s1s2s1s2, Modulus(q, c2), {}};
      PhaseSum sum = kloosterman_sum(kq);
      PhaseSum closed = paramodular_closed_form(kq.w, q, k, kq.chars.N);
      CHECK(sum.value_equals(closed));
    }
  }
  CHECK_THROWS_AS(paramodular_closed_form(WeylWord::s1s2s1s2, 3, 4, {1, 1}),
                  OutOfTabulatedRangeError);
  CHECK_THROWS_AS(paramodular_closed_form(WeylWord::s1s2s1, 4, 1, {1, 1}),
                  OutOfTabulatedRangeError);
  CHECK_THROWS_AS(paramodular_closed_form(WeylWord::s1s2s1, 3, 1, {1, 3}),
                  OutOfTabulatedRangeError);
}

TEST_CASE("divisibility vanishing predictions") {
  CHECK(vanishing_divisibility_check(WeylWord::s1s2s1s2, Modulus(2, 6), 4));
  CHECK(!vanishing_divisibility_check(WeylWord::s1s2s1s2, Modulus(3, 27), 3));
  CHECK(!vanishing_divisibility_check(WeylWord::s1s2s1, Modulus(3, 3), 3));
  CHECK(vanishing_divisibility_check(WeylWord::s2s1s2, Modulus(4, 16), 3));
  // The constraint lives on the q-parts: (6,3) carries q-part (3,3) at
  // q = 3 and the cell is nonzero, while (6,2) carries (3,1) and dies.
  CHECK(!vanishing_divisibility_check(WeylWord::s1s2s1s2, Modulus(6, 3), 3));
  CHECK(vanishing_divisibility_check(WeylWord::s1s2s1s2, Modulus(6, 2), 3));
  KloostermanQuery alive{LatticeDesc::paramodular(3), WeylWord::s1s2s1s2,
                         Modulus(6, 3), {}};
  CHECK(expect_int(kloosterman_sum(alive)) == 9);
  KloostermanQuery dead{LatticeDesc::paramodular(3), WeylWord::s1s2s1s2,
                        Modulus(6, 2), {}};
  CHECK(expect_int(kloosterman_sum(dead)) == 0);
}

TEST_CASE("serial reference and OpenMP kernel agree") {
  for (auto [q, w, c] : std::vector<std::tuple<long, WeylWord, Modulus>>{
           {2, WeylWord::s1s2s1s2, Modulus(2, 8)},
           {3, WeylWord::s2s1s2, Modulus(3, 9)},
           {1, WeylWord::s1s2s1, Modulus(4, 4)},
           {1, WeylWord::s1s2, Modulus(3, 5)}}) {
    LatticeDesc L = q == 1 ? LatticeDesc::full() : LatticeDesc::paramodular(q);
    ElementList a = enumerate_kloosterman_set_serial(L, w, c);
    ElementList b = enumerate_kloosterman_set(L, w, c);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].x == b[i].x);
      CHECK(a[i].xp == b[i].xp);
      CHECK(a[i].gamma == b[i].gamma);
    }
  }
}

TEST_CASE("representative independence under shifted windows") {
  // Shifted fundamental domains must reproduce both the identical value
  // and the identical set of double cosets (compared through canonical
  // cube representatives).
  auto class_keys = [](const ElementList& set, WeylWord w) {
    std::set<std::string> keys;
    for (const auto& e : set) {
      UCoords l = canonical_left_coset_rep(e.x);
      UCoords r = canonical_right_coset_rep(w, e.xp);
      keys.insert(to_string(l.x) + "," + to_string(l.a) + "," +
                  to_string(l.b) + "," + to_string(l.c) + ";" +
                  to_string(r.x) + "," + to_string(r.a) + "," +
                  to_string(r.b) + "," + to_string(r.c));
    }
    return keys;
  };
  for (auto [w, c] : std::vector<std::pair<WeylWord, Modulus>>{
           {WeylWord::s1s2s1, Modulus(3, 3)},
           {WeylWord::s1s2s1s2, Modulus(2, 4)},
           {WeylWord::s2s1s2, Modulus(2, 4)}}) {
    LatticeDesc L = LatticeDesc::paramodular(w == WeylWord::s1s2s1 ? 3 : 2);
    CharacterPair chars;
    auto n = resolve_auto_n(w, c, chars.M);
    REQUIRE(n);
    chars.N = *n;

    EnumerationOptions base;
    ElementList reference_set = enumerate_kloosterman_set(L, w, c, base);
    PhaseSum reference = kloosterman_sum_over(reference_set, chars);
    std::set<std::string> reference_keys = class_keys(reference_set, w);
    CHECK(reference_keys.size() == reference_set.size());
    for (Rational offset : {rat(-1, 2), rat(1, 3), rat(5, 7)}) {
      EnumerationOptions shifted;
      shifted.window_x = offset;
      shifted.window_xp = -offset;
      ElementList set = enumerate_kloosterman_set(L, w, c, shifted);
      PhaseSum sum = kloosterman_sum_over(set, chars);
      CHECK(sum.reduced().terms() == reference.reduced().terms());
      CHECK(class_keys(set, w) == reference_keys);
    }
  }
}

TEST_CASE("phase sum products convolve phases") {
  PhaseSum cube;  // e(1/3) + e(2/3) = -1
  cube.add_term(phase_of(rat(1, 3)), 1);
  cube.add_term(phase_of(rat(2, 3)), 1);
  PhaseSum square = phase_sum_product(cube, cube);
  auto v = square.integer_value();
  REQUIRE(v);
  CHECK(*v == 1);
  // S(1,1;6) = e(1/3) + e(2/3) = -1, so S * conj(S) = 1 exactly; and in
  // general the conjugate product evaluates to the squared magnitude.
  for (long c : {4L, 5L, 6L, 7L}) {
    PhaseSum s = classical_kloosterman(1, 1, c);
    PhaseSum conj;
    for (const auto& [p, coeff] : s.terms())
      conj.add_term(phase_of(-p.r), coeff);
    PhaseSum norm2 = phase_sum_product(s, conj);
    BigFloat mag = s.numeric().magnitude();
    BigFloat diff = mag * mag - norm2.numeric().re;
    CHECK(diff.abs() < BigFloat(rat(1, 1000000000000000L)));
    CHECK(norm2.numeric().im.abs() < BigFloat(rat(1, 1000000000000000L)));
  }
  auto norm6 = phase_sum_product(classical_kloosterman(1, 1, 6),
                                 classical_kloosterman(1, 1, 6))
                   .integer_value();
  REQUIRE(norm6);
  CHECK(*norm6 == 1);
}

TEST_CASE("per-candidate solutions come in N(Gamma)-packs") {
  // The left congruences are solvable N(Gamma) ways or not at all; the
  // enumerator audits this internally, so sizes are multiples of the index.
  for (long q : {2L, 3L}) {
    LatticeDesc L = LatticeDesc::paramodular(q);
    ElementList set =
        enumerate_kloosterman_set(L, WeylWord::s1s2s1s2, Modulus(q, q * q));
    CHECK(set.size() % q == 0);
  }
}

TEST_CASE("completeness spot check: random lattice products in the cell") {
  // Assemble random members of Gamma in the (q, q) cell of s1s2s1 by
  // shifting a known witness by U(Z) x U_w(Z); the enumerated set must
  // contain the class of every one of them.
  const long q = 3;
  LatticeDesc L = LatticeDesc::paramodular(q);
  Modulus c(q, q);
  ElementList set = enumerate_kloosterman_set(L, WeylWord::s1s2s1, c);
  REQUIRE(set.size() == 9);

  std::uniform_int_distribution<int> di(-3, 3);
  std::uniform_int_distribution<std::size_t> pick(0, set.size() - 1);
  for (int trial = 0; trial < 50; ++trial) {
    const auto& e = set[pick(rng)];
    UCoords lu{rat(di(rng)), rat(di(rng)), rat(di(rng)), rat(di(rng))};
    UCoords ru = restrict_to_uw(
        WeylWord::s1s2s1,
        UCoords{rat(di(rng)), rat(di(rng)), rat(di(rng)), rat(di(rng))});
    Mat4 shifted = u_matrix(lu) * e.gamma * u_matrix(ru);
    REQUIRE(contains(L, shifted));
    BruhatData d = bruhat_cell(shifted);
    REQUIRE(d.w == WeylWord::s1s2s1);
    // Reduce both sides to the cube representatives and look the pair up.
    UCoords lw = canonical_left_coset_rep(d.left);
    UCoords rw = canonical_right_coset_rep(WeylWord::s1s2s1, d.right);
    bool found = false;
    for (const auto& cand : set) {
      if (canonical_left_coset_rep(cand.x) == lw &&
          canonical_right_coset_rep(WeylWord::s1s2s1, cand.xp) == rw) {
        found = true;
        break;
      }
    }
    CHECK(found);
  }
}

TEST_CASE("unramified growth stays within the desk-scale envelope") {
  // #X <= 10 (c1 c2)^(3/2) for every admissible full-lattice cell with
  // c1 c2 <= 60.
  LatticeDesc L = LatticeDesc::full();
  CharacterPair ones;
  for (WeylWord w : kRelevantWeylWords) {
    for (long c1 = 1; c1 <= 60; ++c1) {
      for (long c2 = 1; c1 * c2 <= 60; ++c2) {
        Modulus c(c1, c2);
        if (!is_admissible(w, c, ones)) continue;
        std::size_t size = enumerate_kloosterman_set(L, w, c).size();
        double envelope = 10.0 * std::pow(double(c1) * double(c2), 1.5);
        CHECK(double(size) <= envelope);
      }
    }
  }
}

TEST_CASE("s2s1s2 proof congruences hold on the enumerated set") {
  for (long q : {2L, 3L, 5L}) {
    LatticeDesc L = LatticeDesc::paramodular(q);
    ElementList set =
        enumerate_kloosterman_set(L, WeylWord::s2s1s2, Modulus(q, q * q));
    REQUIRE(!set.empty());
    std::map<std::string, long> x1_histogram;
    std::map<std::string, PhaseSum> fiber_sums;
    CharacterPair ones;
    for (const auto& e : set) {
      // x3~ = q * (b-coordinate of x), y2~ = q * (b-coordinate of x').
      Rational x3t = q * e.x.b;
      Rational y2t = q * e.xp.b;
      REQUIRE(is_integer(x3t));
      REQUIRE(is_integer(y2t));
      CHECK(is_integer(Rational((x3t * y2t + 1) / q)));
      // x1~ is free: its values are equidistributed, and summing the
      // character over a fiber with fixed companion data cancels exactly.
      // The companion slot for the a-direction is the matrix entry
      // A = a + x b (the raw a-coordinate shifts with x1~).
      x1_histogram[to_string(e.x.x)] += 1;
      Rational A = mod1(e.x.a + e.x.x * e.x.b);
      std::string fiber_key = to_string(A) + "|" + to_string(e.x.b) + "|" +
                              to_string(e.x.c) + "|" + to_string(e.xp.b) +
                              "|" + to_string(e.xp.c);
      Rational arg = ones.M[0] * e.x.x + ones.M[1] * e.x.c +
                     ones.N[0] * e.xp.x + ones.N[1] * e.xp.c;
      fiber_sums[fiber_key].add_term(phase_of(arg), 1);
    }
    CHECK(x1_histogram.size() == static_cast<std::size_t>(q));
    long expected = static_cast<long>(set.size()) / q;
    for (const auto& [value, count] : x1_histogram) CHECK(count == expected);
    for (const auto& [key, fsum] : fiber_sums) {
      auto v = fsum.integer_value();
      REQUIRE(v);
      CHECK(*v == 0);
    }
  }
}

TEST_CASE("factorization report shapes") {
  FactorizationReport rep =
      factorization_check(LatticeDesc::paramodular(2), WeylWord::s1s2s1s2,
                          Modulus(2, 2));
  CHECK(rep.d == Modulus(2, 2));
  CHECK(rep.cprime == Modulus(1, 1));
  CHECK(rep.holds);

  FactorizationReport mult =
      factorization_check(LatticeDesc::full(), WeylWord::s1s2s1s2,
                          Modulus(6, 6));
  CHECK(mult.d == Modulus(2, 2));
  CHECK(mult.cprime == Modulus(3, 3));
  CHECK(mult.holds);
}

TEST_CASE("budget cap raises") {
  EnumerationOptions tiny;
  tiny.budget = 10;
  CHECK_THROWS_AS(enumerate_kloosterman_set(LatticeDesc::full(),
                                            WeylWord::s1s2s1s2, Modulus(6, 6),
                                            tiny),
                  BudgetExceededError);
  CHECK(enumeration_candidates(LatticeDesc::full(), WeylWord::s1s2s1s2,
                               Modulus(6, 6)) > 10);
}

TEST_CASE("unramified bound exponents are stored as stated") {
  CHECK(UnramifiedBoundExponents::s1s2s1() == rat(5, 3));
  CHECK(UnramifiedBoundExponents::s2s1s2() == rat(5, 2));
  CHECK(UnramifiedBoundExponents::long_c1() == rat(1, 2));
  CHECK(UnramifiedBoundExponents::long_c2() == rat(3, 4));
  CHECK(UnramifiedBoundExponents::long_gcd() == rat(1, 2));
}

TEST_CASE("behaviour beyond the tabulated prime range stays coherent") {
  // Larger prime: the k = 3 closed form matches, including the exact
  // vanishing of S(1, 3; 49) (3 is a quadratic non-residue mod 7).
  {
    LatticeDesc L = LatticeDesc::paramodular(7);
    KloostermanQuery q{L, WeylWord::s1s2s1s2, Modulus(7, 343), {}};
    q.chars.N = {1, 3};
    PhaseSum s = kloosterman_sum(q);
    CHECK(s.value_equals(paramodular_closed_form(q.w, 7, 3, q.chars.N)));
    CHECK(*s.integer_value() == 0);
  }
  // Prime-power level q = 4: frozen enumerated values.
  {
    LatticeDesc L = LatticeDesc::paramodular(4);
    KloostermanQuery a{L, WeylWord::s1s2s1, Modulus(4, 4), {}};
    CHECK(expect_int(kloosterman_sum(a)) == 16);
    KloostermanQuery b{L, WeylWord::s2s1s2, Modulus(4, 16), {}};
    auto n = resolve_auto_n(b.w, b.c, b.chars.M);
    REQUIRE(n);
    b.chars.N = *n;
    CHECK(expect_int(kloosterman_sum(b)) == 0);
    KloostermanQuery c{L, WeylWord::s1s2s1s2, Modulus(4, 8), {}};
    CHECK(expect_int(kloosterman_sum(c)) == 16);
  }
  // Composite level q = 6: locality with searched twists.
  {
    FactorizationReport rep = factorization_check(
        LatticeDesc::paramodular(6), WeylWord::s1s2s1s2, Modulus(6, 6));
    CHECK(rep.holds);
    CHECK(rep.cprime == Modulus(1, 1));
  }
}
