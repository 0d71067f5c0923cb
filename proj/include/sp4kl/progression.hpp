#pragma once

#include <optional>
#include <vector>

#include "sp4kl/rational.hpp"

namespace sp4kl {

// Arithmetic progression { base + k * step : k in Z } in Q, step > 0,
// or the empty set. Used to solve the entrywise congruences that cut the
// Kloosterman sets out of the residue grids.
struct Progression {
  bool empty = false;
  Rational base;  // normalized into [0, step)
  Rational step;  // > 0 when not empty and not all of Q

  static Progression all() { return Progression{false, rat(0), rat(0)}; }
  static Progression none() { return Progression{true, rat(0), rat(0)}; }
  static Progression of(const Rational& base, const Rational& step);

  bool is_all() const { return !empty && step == 0; }
  bool contains(const Rational& t) const;
};

// Solutions t of  alpha * t + beta in d * Z  (d > 0). alpha may be zero,
// in which case the constraint is either vacuous or unsatisfiable.
Progression solve_congruence(const Rational& alpha, const Rational& beta,
                             const Rational& d);

Progression intersect(const Progression& a, const Progression& b);

// All points of p in the window [offset, offset + 1).
std::vector<Rational> points_in_window(const Progression& p,
                                       const Rational& offset);

// All integer multiples of step in [offset, offset + 1); step > 0.
std::vector<Rational> grid_points(const Rational& step,
                                  const Rational& offset);

}  // namespace sp4kl
