#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "sp4kl/lattice.hpp"
#include "sp4kl/rational.hpp"

namespace sp4kl {

struct SigmaOutOfRangeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct UnsupportedLatticeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Spectral parameter mu = (mu1, mu2) with exact rational real and
// imaginary parts. Tempered means both real parts vanish.
struct SpectralParameter {
  Rational re1, im1, re2, im2;

  bool tempered() const { return re1 == 0 && re2 == 0; }
};

// mu(pi_inf) = ((a1+a2)/2, (a1-a2)/2) from the Langlands-quotient data.
SpectralParameter spectral_from_langlands(const Rational& alpha1,
                                          const Rational& alpha2);

// Self-dual transfer to GL(4): (mu1, mu2, -mu2, -mu1), each entry a
// (real, imaginary) pair.
std::array<std::pair<Rational, Rational>, 4> gl4_transfer(
    const SpectralParameter& mu);

// sigma = max |Re mu_i|: distance from temperedness.
Rational sigma_of(const SpectralParameter& mu);

// The six shapes of discrete Arthur parameters.
enum class ArthurType { G, Y, Q, P, B, F };

constexpr std::array<ArthurType, 6> kAllArthurTypes = {
    ArthurType::G, ArthurType::Y, ArthurType::Q,
    ArthurType::P, ArthurType::B, ArthurType::F};

const char* arthur_tag(ArthurType t);
// Parameter shape attached to each type.
const char* arthur_shape(ArthurType t);
// Component group S_psi: trivial for G/Q/F, {+-1} for Y/P/B.
int arthur_component_group_order(ArthurType t);

// Inputs for the per-type paramodular contribution rules.
struct PacketInput {
  long generic_count = 0;  // used by G and Y
  // Saito-Kurokawa data: the GL(2) input mu with its local invariants.
  bool epsilon_is_one = true;   // parity gate epsilon(1/2, mu) = 1
  bool sigma_trivial = true;    // the character xi must be trivial
  long conductor = 1;           // c(mu); must divide q
  // a(mu_p) at the primes dividing q (absent primes default to 0).
  std::map<long, long> ramified_exponents;
};

// Dimension contributed by one packet of the given type at paramodular
// level q: B and Q vanish, G and Y reduce to the generic member, P is the
// gated product of floor((v_p(q) - a(mu_p)) / 2), F is the single
// residual point.
long paramodular_packet_contribution(ArthurType t, const LatticeDesc& L,
                                     const PacketInput& in);

enum class CountProvenance { exact_zero, formula, external_input };

struct CountColumn {
  long count = 0;
  CountProvenance provenance = CountProvenance::exact_zero;
};

// External inputs to the counting assembly.
struct GenericInput {
  long G = 0;
  long Y = 0;
};

struct CountingAssembly {
  Rational sigma;
  double M = 0;
  std::map<ArthurType, CountColumn> columns;
  long total = 0;
  // Envelope 2 q log(q+2) standing in for the q^(1+eps) bound on P.
  bool p_within_envelope = true;
};

// Per-type counting table at badness sigma:
//   G, Y from the generic input, zeroed above 9/22 resp. 7/64;
//   B = Q = 0; P from the GL(2) count, zeroed above 1/2; F = 1 up to 3/2.
// The cutoff constants live in the k* constants below and nowhere else.
CountingAssembly assemble_counting(const Rational& sigma, double M,
                                   const GenericInput& generic,
                                   long gl2_count, long q);

// Toy oracle for the GL(2) input slot: the weight-2 cusp form dimension
// for Gamma_0(q), i.e. the genus of X_0(q) by the classical index /
// elliptic point / cusp count formula. A stand-in scale for the type-P
// Weyl-law input, not a substitute for real spectral data.
long gl2_toy_dimension(long q);

inline const Rational& cutoff_generic() {
  static const Rational v = rat(9, 22);
  return v;
}
inline const Rational& cutoff_yoshida() {
  static const Rational v = rat(7, 64);
  return v;
}
inline const Rational& cutoff_cap() {
  static const Rational v = rat(1, 2);
  return v;
}
inline const Rational& sigma_max() {
  static const Rational v = rat(3, 2);
  return v;
}

// Reference data, stored but never evaluated by any operation: the
// square-free-level first-coefficient identity
//   |A(1)|^2 / <f, f> = 2^(5-c) / V * L^q(2) L^q(4) / L^q(1, Ad)
//                         * prod_{p | q} p / (1 - p^-2)^2,
// c = 1 for stable packets and c = 2 for endoscopic ones.
struct FirstCoefficientReference {
  static int two_exponent(bool stable) { return stable ? 4 : 3; }
  // p / (1 - p^-2)^2 = p^5 / (p^2 - 1)^2, exactly.
  static Rational local_factor(long p) {
    Integer num = Integer(p) * p * p * p * p;
    Integer den = Integer(p) * p - 1;
    return rat(num, den * den);
  }
  static const char* display() {
    return "2^(5-c)/V * L^q(2)L^q(4)/L^q(1,Ad) * prod_{p|q} p/(1-p^-2)^2";
  }
};

// Metadata only: the expected general-lattice tempered-packet bound
// carries the factor 2^omega(D); nothing asserts it.
long expected_tempered_multiplicity_factor(long discriminant);

}  // namespace sp4kl
