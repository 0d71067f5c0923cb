#include "sp4kl/atlas.hpp"

#include <cmath>
#include <numeric>
#include <vector>

namespace sp4kl {

SpectralParameter spectral_from_langlands(const Rational& alpha1,
                                          const Rational& alpha2) {
  SpectralParameter mu;
  mu.re1 = (alpha1 + alpha2) / 2;
  mu.re2 = (alpha1 - alpha2) / 2;
  mu.im1 = 0;
  mu.im2 = 0;
  return mu;
}

std::array<std::pair<Rational, Rational>, 4> gl4_transfer(
    const SpectralParameter& mu) {
  return {std::pair<Rational, Rational>{mu.re1, mu.im1},
          {mu.re2, mu.im2},
          {-mu.re2, -mu.im2},
          {-mu.re1, -mu.im1}};
}

Rational sigma_of(const SpectralParameter& mu) {
  Rational a1 = mu.re1 < 0 ? Rational(-mu.re1) : mu.re1;
  Rational a2 = mu.re2 < 0 ? Rational(-mu.re2) : mu.re2;
  return a1 < a2 ? a2 : a1;
}

const char* arthur_tag(ArthurType t) {
  switch (t) {
    case ArthurType::G: return "G";
    case ArthurType::Y: return "Y";
    case ArthurType::Q: return "Q";
    case ArthurType::P: return "P";
    case ArthurType::B: return "B";
    case ArthurType::F: return "F";
  }
  return "?";
}

const char* arthur_shape(ArthurType t) {
  switch (t) {
    case ArthurType::G: return "mu (x) 1, mu cuspidal self-dual on GL4";
    case ArthurType::Y: return "(mu1 (x) 1) [+] (mu2 (x) 1), GL2 pair";
    case ArthurType::Q: return "mu (x) nu(2), mu cuspidal on GL2";
    case ArthurType::P: return "(mu (x) 1) [+] (xi (x) nu(2))";
    case ArthurType::B: return "(chi1 (x) nu(2)) [+] (chi2 (x) nu(2))";
    case ArthurType::F: return "xi (x) nu(4)";
  }
  return "?";
}

int arthur_component_group_order(ArthurType t) {
  switch (t) {
    case ArthurType::Y:
    case ArthurType::P:
    case ArthurType::B:
      return 2;
    default:
      return 1;
  }
}

namespace {
// (p, v_p(n)) over the prime factors of n.
std::vector<std::pair<long, long>> prime_valuations(long n) {
  std::vector<std::pair<long, long>> out;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      long v = 0;
      while (n % p == 0) {
        n /= p;
        ++v;
      }
      out.push_back({p, v});
    }
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}
}  // namespace

long paramodular_packet_contribution(ArthurType t, const LatticeDesc& L,
                                     const PacketInput& in) {
  if (!L.is_paramodular() || L.q <= 1)
    throw UnsupportedLatticeError(
        "packet contribution rules require a paramodular lattice, q > 1");
  switch (t) {
    case ArthurType::B:
    case ArthurType::Q:
      return 0;
    case ArthurType::G:
    case ArthurType::Y:
      return in.generic_count;
    case ArthurType::F:
      return 1;
    case ArthurType::P: {
      if (!in.epsilon_is_one || !in.sigma_trivial) return 0;
      if (in.conductor <= 0 || L.q % in.conductor != 0) return 0;
      long dim = 1;
      for (auto [p, v] : prime_valuations(L.q)) {
        long a = 0;
        auto it = in.ramified_exponents.find(p);
        if (it != in.ramified_exponents.end()) a = it->second;
        long floor_half = v - a < 0 ? 0 : (v - a) / 2;
        dim *= floor_half;
        if (dim == 0) return 0;
      }
      return dim;
    }
  }
  return 0;
}

long expected_tempered_multiplicity_factor(long discriminant) {
  if (discriminant < 1)
    throw std::invalid_argument("discriminant must be >= 1");
  long omega = static_cast<long>(prime_valuations(discriminant).size());
  return 1L << omega;
}

long gl2_toy_dimension(long q) {
  if (q < 1) throw std::invalid_argument("gl2_toy_dimension: q >= 1");
  auto legendre = [](long a, long p) {
    // (a|p) for odd prime p via Euler's criterion.
    long r = 1, base = ((a % p) + p) % p, e = (p - 1) / 2;
    while (e) {
      if (e & 1) r = r * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return r == p - 1 ? -1L : r;
  };
  // index = q * prod_{p|q} (1 + 1/p); elliptic point counts by the
  // standard Kronecker-symbol products.
  long index = q, nu2 = 1, nu3 = 1, nu_inf = 0;
  std::vector<std::pair<long, long>> pv = prime_valuations(q);
  for (const auto& [p, v] : pv) index = index / p * (p + 1);
  if (q % 4 == 0) {
    nu2 = 0;
  } else {
    for (const auto& [p, v] : pv)
      nu2 *= (p == 2) ? 1 : 1 + legendre(-1, p);
  }
  if (q % 9 == 0) {
    nu3 = 0;
  } else {
    for (const auto& [p, v] : pv) {
      if (p == 3)
        nu3 *= 1;
      else if (p == 2)
        nu3 *= 0;
      else
        nu3 *= 1 + legendre(-3, p);
    }
  }
  for (long d = 1; d <= q; ++d) {
    if (q % d != 0) continue;
    long g = std::gcd(d, q / d), phi = 0;
    for (long x = 1; x <= g; ++x)
      if (std::gcd(x, g) == 1) ++phi;
    nu_inf += phi;
  }
  // genus = 1 + index/12 - nu2/4 - nu3/3 - nu_inf/2, always an integer.
  Rational genus = 1 + rat(index, 12) - rat(nu2, 4) - rat(nu3, 3) -
                   rat(nu_inf, 2);
  return num(genus).get_si();
}

CountingAssembly assemble_counting(const Rational& sigma, double M,
                                   const GenericInput& generic,
                                   long gl2_count, long q) {
  if (sigma < 0 || sigma > sigma_max())
    throw SigmaOutOfRangeError("assemble_counting: sigma outside [0, 3/2]");
  if (generic.G < 0 || generic.Y < 0 || gl2_count < 0)
    throw std::invalid_argument("assemble_counting: counts must be >= 0");

  CountingAssembly a;
  a.sigma = sigma;
  a.M = M;

  auto put = [&](ArthurType t, long count, CountProvenance prov) {
    a.columns[t] = CountColumn{count, prov};
    a.total += count;
  };

  put(ArthurType::G, sigma > cutoff_generic() ? 0 : generic.G,
      sigma > cutoff_generic() ? CountProvenance::exact_zero
                               : CountProvenance::external_input);
  put(ArthurType::Y, sigma > cutoff_yoshida() ? 0 : generic.Y,
      sigma > cutoff_yoshida() ? CountProvenance::exact_zero
                               : CountProvenance::external_input);
  put(ArthurType::Q, 0, CountProvenance::exact_zero);
  put(ArthurType::P, sigma > cutoff_cap() ? 0 : gl2_count,
      sigma > cutoff_cap() ? CountProvenance::exact_zero
                           : CountProvenance::external_input);
  put(ArthurType::B, 0, CountProvenance::exact_zero);
  put(ArthurType::F, 1, CountProvenance::formula);

  double envelope = 2.0 * static_cast<double>(q) *
                    std::log(static_cast<double>(q) + 2.0);
  a.p_within_envelope =
      static_cast<double>(a.columns[ArthurType::P].count) <= envelope;
  return a;
}

}  // namespace sp4kl
