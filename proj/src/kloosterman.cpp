#include "sp4kl/kloosterman.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "sp4kl/progression.hpp"

namespace sp4kl {

namespace {

// Which derived x'-quantity a grid dimension feeds. For cells whose third
// row of c*w exposes row 1 of x', the natural parameters are u' and the
// row entries A' = p' + u'r', B' = r' + u'v' rather than the raw s(T)
// coordinates.
enum class Slot { up, Ap, Bp, rp, vp, pp };

struct GridSpec {
  std::vector<Slot> slots;
  std::vector<std::vector<Rational>> points;
  Integer total = 1;  // product of dimension sizes (1 when no slots)
};

struct CellFrame {
  Mat4 A;  // c* w
  int s3 = 0, s4 = 0;
  std::array<bool, 4> free{};
};

CellFrame make_frame(WeylWord w, const Modulus& c) {
  CellFrame f;
  f.A = gen_c_star(rat(c.c1), rat(c.c2)) * weyl_matrix(w);
  for (int j = 0; j < 4; ++j) {
    if (f.A.m[2][j] != 0) f.s3 = j;
    if (f.A.m[3][j] != 0) f.s4 = j;
  }
  f.free = uw_free_coords(w);
  return f;
}

Rational abs_rat(const Rational& q) { return q < 0 ? Rational(-q) : q; }

// Residue grid for the free U_w coordinates. Steps come from the lattice
// pattern applied to the gamma-entries that expose each coordinate; the
// coordinates only reachable through row 4 get the safe step 1/c2.
GridSpec build_grid(const LatticeDesc& L, const Modulus& c,
                    const CellFrame& f, const Rational& window) {
  GridSpec g;
  auto add = [&](Slot s, const Rational& step) {
    g.slots.push_back(s);
    g.points.push_back(grid_points(step, window));
    g.total *= Integer(static_cast<long>(g.points.back().size()));
  };
  const Rational tau3 = abs_rat(f.A.m[2][f.s3]);
  const Rational tau4 = abs_rat(f.A.m[3][f.s4]);
  const Rational safe = rat(1, c.c2);

  switch (f.s3) {
    case 0:  // row3(gamma) = tau3 * (1, u', A', B')
      add(Slot::up, L.pattern_scale(2, 1) / tau3);
      add(Slot::Ap, L.pattern_scale(2, 2) / tau3);
      add(Slot::Bp, L.pattern_scale(2, 3) / tau3);
      if (f.free[kCoordC]) add(Slot::vp, safe);
      break;
    case 1:  // row3(gamma) = tau3 * (0, 1, r', v')
      add(Slot::rp, L.pattern_scale(2, 2) / tau3);
      add(Slot::vp, L.pattern_scale(2, 3) / tau3);
      if (f.free[kCoordA]) add(Slot::pp, safe);
      break;
    case 2:  // row3(gamma) = tau3 * e3; only w = 1 and s2 land here
      if (f.free[kCoordC]) add(Slot::vp, L.pattern_scale(3, 3) / tau4);
      break;
    case 3:  // row3(gamma) = tau3 * (0, 0, -u', 1)
      add(Slot::up, L.pattern_scale(2, 2) / tau3);
      if (f.free[kCoordA]) add(Slot::pp, safe);
      break;
  }
  return g;
}

UCoords xp_from_values(const CellFrame& f,
                       const std::vector<Slot>& slots,
                       const std::vector<Rational>& vals) {
  Rational up(0), Ap(0), Bp(0), rp(0), vp(0), pp(0);
  for (std::size_t i = 0; i < slots.size(); ++i) {
    switch (slots[i]) {
      case Slot::up: up = vals[i]; break;
      case Slot::Ap: Ap = vals[i]; break;
      case Slot::Bp: Bp = vals[i]; break;
      case Slot::rp: rp = vals[i]; break;
      case Slot::vp: vp = vals[i]; break;
      case Slot::pp: pp = vals[i]; break;
    }
  }
  UCoords u;
  if (f.s3 == 0) {
    u.x = up;
    u.c = vp;
    u.b = Bp - up * vp;
    u.a = Ap - up * u.b;
  } else if (f.s3 == 1) {
    u.x = 0;
    u.a = pp;
    u.b = rp;
    u.c = vp;
  } else if (f.s3 == 2) {
    u.x = 0;
    u.a = 0;
    u.b = 0;
    u.c = vp;
  } else {
    u.x = up;
    u.a = pp;
    u.b = 0;
    u.c = 0;
  }
  return u;
}

// All x in U(Q), coordinates in [window, window+1), with x * B in the
// lattice pattern. Rows of x * B:
//   row1 = B1 + u B2 + (p + u r) B3 + (r + u v) B4
//   row2 = B2 + r B3 + v B4
//   row3 = B3
//   row4 = B4 - u B3
// Solved as nested progressions u -> r -> v -> p; every cell shape admits
// a pure-r pivot, so the nesting never stalls.
std::vector<UCoords> solve_left(const Mat4& B, const LatticeDesc& L,
                                const Rational& window) {
  std::vector<UCoords> out;
  auto pat = [&](int i, int j) { return L.pattern_scale(i, j); };

  for (int j = 0; j < 4; ++j)
    if (!divides(pat(2, j), B.m[2][j])) return out;

  Progression pu = Progression::all();
  for (int j = 0; j < 4 && !pu.empty; ++j)
    pu = intersect(pu, solve_congruence(-B.m[2][j], B.m[3][j], pat(3, j)));
  if (pu.empty) return out;

  // Feasibility of row 2 entries touched by neither r nor v.
  for (int j = 0; j < 4; ++j)
    if (B.m[2][j] == 0 && B.m[3][j] == 0 && !divides(pat(1, j), B.m[1][j]))
      return out;

  for (const Rational& u : points_in_window(pu, window)) {
    Progression pr = Progression::all();
    for (int j = 0; j < 4 && !pr.empty; ++j) {
      if (B.m[3][j] == 0 && B.m[2][j] != 0)
        pr = intersect(pr, solve_congruence(B.m[2][j], B.m[1][j], pat(1, j)));
    }
    if (pr.empty) continue;
    for (const Rational& r : points_in_window(pr, window)) {
      Progression pv = Progression::all();
      for (int j = 0; j < 4 && !pv.empty; ++j) {
        if (B.m[3][j] != 0)
          pv = intersect(pv, solve_congruence(B.m[3][j],
                                              B.m[1][j] + r * B.m[2][j],
                                              pat(1, j)));
      }
      if (pv.empty) continue;
      for (const Rational& v : points_in_window(pv, window)) {
        const Rational C = r + u * v;
        Progression pa = Progression::all();
        bool feasible = true;
        for (int j = 0; j < 4 && feasible; ++j) {
          Rational base =
              B.m[0][j] + u * B.m[1][j] + u * r * B.m[2][j] + C * B.m[3][j];
          if (B.m[2][j] == 0) {
            feasible = divides(pat(0, j), base);
          } else {
            pa = intersect(pa, solve_congruence(B.m[2][j], base, pat(0, j)));
            feasible = !pa.empty;
          }
        }
        if (!feasible || pa.empty) continue;
        for (const Rational& p : points_in_window(pa, window)) {
          out.push_back(UCoords{u, p, r, v});
        }
      }
    }
  }
  return out;
}

void audit_element(const LatticeDesc& L, WeylWord w, const Modulus& c,
                   const KloostermanSetElement& e) {
  if (!contains(L, e.gamma))
    throw std::logic_error("enumeration audit: element not in lattice");
  BruhatData d = bruhat_cell(e.gamma);
  auto norm = normalize_bruhat(d);
  if (d.w != w || !norm || !(norm->c == c))
    throw std::logic_error("enumeration audit: wrong Bruhat cell");
}

// Elements produced for one grid candidate, in deterministic order.
ElementList process_candidate(const LatticeDesc& L, WeylWord w,
                              const Modulus& c, const CellFrame& f,
                              const UCoords& xp,
                              const EnumerationOptions& opts) {
  ElementList elems;
  const Mat4 B = f.A * u_matrix(xp);
  std::vector<UCoords> lefts = solve_left(B, L, opts.window_x);
  if (opts.audit && !lefts.empty() &&
      lefts.size() != static_cast<std::size_t>(L.unipotent_index()))
    throw std::logic_error(
        "enumeration audit: per-candidate solution count must be 0 or "
        "N(Gamma)");
  for (const UCoords& x : lefts) {
    KloostermanSetElement e{x, xp, u_matrix(x) * B};
    if (opts.audit) audit_element(L, w, c, e);
    elems.push_back(std::move(e));
  }
  return elems;
}

std::vector<Rational> decode_tuple(const GridSpec& g, long long index) {
  std::vector<Rational> vals(g.slots.size());
  long long rest = index;
  for (std::size_t i = g.slots.size(); i-- > 0;) {
    long long size = static_cast<long long>(g.points[i].size());
    vals[i] = g.points[i][static_cast<std::size_t>(rest % size)];
    rest /= size;
  }
  return vals;
}

struct Prepared {
  CellFrame frame;
  GridSpec grid;
  long long total = 0;
};

Prepared prepare(const LatticeDesc& L, WeylWord w, const Modulus& c,
                 const EnumerationOptions& opts) {
  Prepared p;
  p.frame = make_frame(w, c);
  p.grid = build_grid(L, c, p.frame, opts.window_xp);
  if (p.grid.total > Integer(static_cast<long>(opts.budget)))
    throw BudgetExceededError("enumeration budget exceeded: " +
                              p.grid.total.get_str() + " candidates");
  p.total = p.grid.total.get_si();
  return p;
}

}  // namespace

EnumerationOptions EnumerationOptions::from_env() {
  EnumerationOptions opts;
  if (const char* env = std::getenv("SP4KL_BUDGET")) {
    long long v = std::atoll(env);
    if (v > 0) opts.budget = v;
  }
  return opts;
}

Integer enumeration_candidates(const LatticeDesc& L, WeylWord w,
                               const Modulus& c) {
  CellFrame f = make_frame(w, c);
  return build_grid(L, c, f, rat(0)).total;
}

ElementList enumerate_kloosterman_set_serial(const LatticeDesc& L, WeylWord w,
                                             const Modulus& c,
                                             const EnumerationOptions& opts) {
  Prepared p = prepare(L, w, c, opts);
  ElementList all;
  for (long long idx = 0; idx < p.total; ++idx) {
    UCoords xp = xp_from_values(p.frame, p.grid.slots, decode_tuple(p.grid, idx));
    ElementList e = process_candidate(L, w, c, p.frame, xp, opts);
    all.insert(all.end(), e.begin(), e.end());
  }
  return all;
}

ElementList enumerate_kloosterman_set(const LatticeDesc& L, WeylWord w,
                                      const Modulus& c,
                                      const EnumerationOptions& opts) {
  Prepared p = prepare(L, w, c, opts);

  struct Tagged {
    long long idx;
    std::size_t sub;
    KloostermanSetElement elem;
  };
  std::vector<std::vector<Tagged>> found;

#ifdef _OPENMP
  int threads = omp_get_max_threads();
#else
  int threads = 1;
#endif
  found.resize(static_cast<std::size_t>(threads));

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
#endif
  for (long long idx = 0; idx < p.total; ++idx) {
#ifdef _OPENMP
    int tid = omp_get_thread_num();
#else
    int tid = 0;
#endif
    UCoords xp = xp_from_values(p.frame, p.grid.slots, decode_tuple(p.grid, idx));
    ElementList e = process_candidate(L, w, c, p.frame, xp, opts);
    for (std::size_t s = 0; s < e.size(); ++s)
      found[static_cast<std::size_t>(tid)].push_back(
          Tagged{idx, s, std::move(e[s])});
  }

  // Deterministic merge: candidate order, then in-candidate order.
  std::vector<Tagged> merged;
  for (auto& chunk : found)
    for (auto& t : chunk) merged.push_back(std::move(t));
  std::sort(merged.begin(), merged.end(), [](const Tagged& a, const Tagged& b) {
    return a.idx != b.idx ? a.idx < b.idx : a.sub < b.sub;
  });

  ElementList all;
  all.reserve(merged.size());
  for (auto& t : merged) all.push_back(std::move(t.elem));
  return all;
}

PhaseSum kloosterman_sum_over(const ElementList& elems,
                              const CharacterPair& chars) {
  PhaseSum sum;
  for (const KloostermanSetElement& e : elems) {
    Rational arg = chars.M[0] * e.x.x + chars.M[1] * e.x.c +
                   chars.N[0] * e.xp.x + chars.N[1] * e.xp.c;
    sum.add_term(phase_of(arg), 1);
  }
  return sum;
}

PhaseSum kloosterman_sum(const KloostermanQuery& q,
                         const EnumerationOptions& opts) {
  if (!is_admissible(q.w, q.c, q.chars)) return PhaseSum::zero();
  ElementList elems = enumerate_kloosterman_set(q.lattice, q.w, q.c, opts);
  return kloosterman_sum_over(elems, q.chars);
}

PhaseSum classical_kloosterman(long a, long b, long c) {
  if (c < 1) throw std::invalid_argument("classical_kloosterman: c >= 1");
  if (c == 1) return PhaseSum::integer(1);
  PhaseSum s;
  Integer n(c);
  for (long x = 1; x < c; ++x) {
    Integer xz(x), inv;
    if (mpz_invert(inv.get_mpz_t(), xz.get_mpz_t(), n.get_mpz_t()) == 0)
      continue;
    s.add_term(phase_of(rat(a * x, c) + rat(b) * rat(inv, n)), 1);
  }
  return s;
}

namespace {
bool is_prime_long(long q) {
  if (q < 2) return false;
  Integer z(q);
  return mpz_probab_prime_p(z.get_mpz_t(), 40) != 0;
}
}  // namespace

PhaseSum paramodular_closed_form(WeylWord w, long q, int k,
                                 const std::array<long, 2>& N) {
  if (!is_prime_long(q))
    throw OutOfTabulatedRangeError("closed form tabulated for prime q only");
  if (N[1] % q == 0)
    throw OutOfTabulatedRangeError("closed form requires (N2, q) = 1");
  switch (w) {
    case WeylWord::s1s2s1:
      if (k != 1) throw OutOfTabulatedRangeError("s1s2s1 tabulated at c=(q,q)");
      return PhaseSum::integer(Integer(q) * q);
    case WeylWord::s2s1s2:
      if (k != 2)
        throw OutOfTabulatedRangeError("s2s1s2 tabulated at c=(q,q^2)");
      return PhaseSum::zero();
    case WeylWord::s1s2s1s2: {
      if (k < 1 || k > 3)
        throw OutOfTabulatedRangeError("long element tabulated for k in 1..3");
      long mod = 1;
      for (int i = 0; i < k - 1; ++i) mod *= q;
      PhaseSum s = classical_kloosterman(1, N[1], mod);
      s.scale(Integer(q) * q);
      return s;
    }
    default:
      throw OutOfTabulatedRangeError("no closed form for this Weyl element");
  }
}

bool vanishing_divisibility_check(WeylWord w, const Modulus& c, long q) {
  // The sums are local: the divisibility constraints live on the q-parts
  // of the modulus. (The coprime cofactor is an unconstrained full-lattice
  // cell, e.g. Kl((6,3)) = Kl((3,3)) * Kl_{Gamma_0}((2,1)) at q = 3.)
  auto q_part = [&](long v) {
    long d = 1, rest = v;
    for (long p = 2; p <= q; ++p) {
      if (q % p != 0) continue;
      while (rest % p == 0) {
        d *= p;
        rest /= p;
      }
    }
    return d;
  };
  switch (w) {
    case WeylWord::s1s2s1:
    case WeylWord::s2s1s2:
      return c.c1 % q != 0;
    case WeylWord::s1s2s1s2:
      return c.c1 % q != 0 || q_part(c.c2) % q_part(c.c1) != 0;
    default:
      throw std::invalid_argument(
          "vanishing_divisibility_check: nontrivial relevant w only");
  }
}

PhaseSum phase_sum_product(const PhaseSum& a, const PhaseSum& b) {
  PhaseSum out;
  for (const auto& [pa, ca] : a.terms())
    for (const auto& [pb, cb] : b.terms())
      out.add_term(phase_of(pa.r + pb.r), ca * cb);
  return out;
}

FactorizationReport factorization_check(const LatticeDesc& L, WeylWord w,
                                        const Modulus& c,
                                        const EnumerationOptions& opts) {
  FactorizationReport rep;
  long split = L.is_paramodular() ? L.discriminant() : 1;
  if (!L.is_paramodular()) {
    // Peel the smallest prime of c1*c2 so the check still says something
    // for the full lattice (twisted multiplicativity).
    long prod = c.c1 * c.c2;
    for (long p = 2; p <= prod; ++p)
      if (prod % p == 0) {
        split = p;
        break;
      }
  }
  auto part = [&](long v) {
    long d = 1;
    if (split > 1) {
      long rest = v;
      for (long p = 2; p <= split; ++p) {
        if (split % p != 0) continue;
        while (rest % p == 0) {
          d *= p;
          rest /= p;
        }
      }
    }
    return d;
  };
  long d1 = part(c.c1), d2 = part(c.c2);
  rep.d = Modulus(d1, d2);
  rep.cprime = Modulus(c.c1 / d1, c.c2 / d2);

  CharacterPair ones;
  rep.left = kloosterman_sum_over(
      enumerate_kloosterman_set(L, w, c, opts), ones);

  ElementList d_set = enumerate_kloosterman_set(L, w, rep.d, opts);
  ElementList cp_set =
      enumerate_kloosterman_set(LatticeDesc::full(), w, rep.cprime, opts);

  long D = L.discriminant();
  long rp = d1 * d2, rpp = rep.cprime.c1 * rep.cprime.c2;
  for (long n1 = 1; n1 <= rp; ++n1) {
    if (D > 1 && std::gcd(n1, D) != 1) continue;
    for (long n2 = 1; n2 <= rp; ++n2) {
      if (D > 1 && std::gcd(n2, D) != 1) continue;
      CharacterPair chd;
      chd.N = {n1, n2};
      if (!is_admissible(w, rep.d, chd)) continue;
      PhaseSum kd = kloosterman_sum_over(d_set, chd);
      for (long m1 = 1; m1 <= rpp; ++m1) {
        for (long m2 = 1; m2 <= rpp; ++m2) {
          if (std::gcd(m1 * m2, rpp) != 1) continue;
          CharacterPair chc;
          chc.N = {m1, m2};
          if (!is_admissible(w, rep.cprime, chc)) continue;
          ++rep.pairs_checked;
          PhaseSum right = phase_sum_product(
              kd, kloosterman_sum_over(cp_set, chc));
          if (rep.left.value_equals(right)) {
            rep.holds = true;
            rep.witnesses.push_back({{n1, n2}, {m1, m2}});
          }
        }
      }
    }
  }
  return rep;
}

}  // namespace sp4kl
