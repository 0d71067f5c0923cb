#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sp4kl/bruhat.hpp"
#include "sp4kl/characters.hpp"
#include "sp4kl/lattice.hpp"
#include "sp4kl/phase_sum.hpp"

namespace sp4kl {

struct BudgetExceededError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OutOfTabulatedRangeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The unit of computation: which sum to evaluate.
struct KloostermanQuery {
  LatticeDesc lattice;
  WeylWord w = WeylWord::one;
  Modulus c;
  CharacterPair chars;
};

// One double coset of X_Gamma(c* w) = U(Z)\[U(Q) c*w U_w(Q) cap Gamma]/U_w(Z),
// recorded by its window representatives and the witness matrix.
struct KloostermanSetElement {
  UCoords x;   // left U(Q) part
  UCoords xp;  // right U_w(Q) part
  Mat4 gamma;  // x * (c* w) * xp, a member of Gamma
};

using ElementList = std::vector<KloostermanSetElement>;

struct EnumerationOptions {
  // Cap on the residue-grid candidate count (not on the set size).
  long long budget = 1000LL * 1000 * 1000;
  // Fundamental-domain offsets: coordinates are reduced into
  // [offset, offset+1) on each side. Zero gives the standard cube.
  Rational window_x = rat(0);
  Rational window_xp = rat(0);
  // Verify each element (membership + Bruhat data) as it is produced.
  bool audit = true;

  static EnumerationOptions from_env();
};

// Candidate-grid size for the cell; what the budget is checked against.
Integer enumeration_candidates(const LatticeDesc& L, WeylWord w,
                               const Modulus& c);

// Complete list of double-coset representatives for the cell (w, c).
// OpenMP-parallel over the residue grid; output is identical for any
// thread count.
ElementList enumerate_kloosterman_set(const LatticeDesc& L, WeylWord w,
                                      const Modulus& c,
                                      const EnumerationOptions& opts = {});

// Serial reference implementation; must produce the identical list.
ElementList enumerate_kloosterman_set_serial(
    const LatticeDesc& L, WeylWord w, const Modulus& c,
    const EnumerationOptions& opts = {});

// Character-weighted sum over an enumerated set.
PhaseSum kloosterman_sum_over(const ElementList& elems,
                              const CharacterPair& chars);

// Kl_{Gamma,w}(c; M, N): zero when (w, c) is not admissible for (M, N),
// otherwise the exact sum over the enumerated Kloosterman set.
PhaseSum kloosterman_sum(const KloostermanQuery& q,
                         const EnumerationOptions& opts = {});

// Classical GL(2) Kloosterman sum S(a, b; c) over units mod c, with the
// empty-modulus convention S(a, b; 1) = 1.
PhaseSum classical_kloosterman(long a, long b, long c);

// Tabulated ramified closed forms for the paramodular group at prime q:
//   s1s2s1,  c = (q, q):    q^2
//   s2s1s2,  c = (q, q^2):  0
//   s1s2s1s2, c = (q, q^k): q^2 * S(1, N2; q^(k-1)),  k in {1, 2, 3}
// The c2-exponent k must match the tabulated shape; anything else throws
// OutOfTabulatedRangeError.
PhaseSum paramodular_closed_form(WeylWord w, long q, int k,
                                 const std::array<long, 2>& N);

// True iff the divisibility pattern of the ramified lemma forces the cell
// to vanish: q | c1 fails (s1s2s1, s2s1s2), or q | c1 and c1 | c2 fails
// (long element).
bool vanishing_divisibility_check(WeylWord w, const Modulus& c, long q);

// Locality check: search twist pairs (N', N'') with
//   Kl_{Gamma,w}(c;1,1) = Kl_{Gamma,w}(d;1,N') * Kl_{Gamma0,w}(c';1,N''),
// where d is the discriminant part of c and c' the coprime part (for the
// full lattice, the split peels the smallest prime of c1*c2).
struct FactorizationReport {
  Modulus d, cprime;
  PhaseSum left;
  bool holds = false;
  std::vector<std::pair<std::array<long, 2>, std::array<long, 2>>> witnesses;
  long pairs_checked = 0;
};

FactorizationReport factorization_check(const LatticeDesc& L, WeylWord w,
                                        const Modulus& c,
                                        const EnumerationOptions& opts = {});

// e(x) * e(y) = e(x + y): convolution product of two sums.
PhaseSum phase_sum_product(const PhaseSum& a, const PhaseSum& b);

// Reference exponents of the unramified full-lattice bounds, stored as
// metadata. Scans report raw enumerated sizes against the loose desk
// envelope 10 (c1 c2)^(3/2); no attempt is made to reprove these.
//   s1s2s1 at c1 = c2:     c1^(5/3)
//   s2s1s2 at c2 = c1^2:   c1^(5/2)
//   long element:          c1^(1/2) c2^(3/4) (c1, c2)^(1/2)
struct UnramifiedBoundExponents {
  static Rational s1s2s1() { return rat(5, 3); }
  static Rational s2s1s2() { return rat(5, 2); }
  static Rational long_c1() { return rat(1, 2); }
  static Rational long_c2() { return rat(3, 4); }
  static Rational long_gcd() { return rat(1, 2); }
};

}  // namespace sp4kl
