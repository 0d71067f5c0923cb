#pragma once

#include <string>
#include <vector>

namespace sp4kl {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string details;
};

using CheckList = std::vector<CheckResult>;

// The numbered acceptance checks. Qmax/cmax default to the reference
// ranges; every comparison is exact unless stated otherwise.
CheckList check_ramified_closed_forms(long qmax = 5);  // Kl = q^2, 0, q^2 S
CheckList check_divisibility_vanishing();              // q | c1, c1 | c2
CheckList check_trivial_weyl(long cmax = 4);           // N(Gamma) delta
CheckList check_admissibility_exhaustive();            // table == conjugation
CheckList check_trivial_bound();                       // |Kl| <= #X
CheckList check_classical_sums();                      // Weil-shape bound
CheckList check_geometric();                           // truncated sums
CheckList check_exponents();                           // delta = 3 alpha - 1
CheckList check_counting_assembly();                   // six-type table
CheckList check_determinism();                         // 1/4/8 threads

// Locality of the sums: discriminant-part splitting with searched twists.
CheckList check_factorization();

// Suite names accepted by the verify command.
std::vector<std::string> verify_suite_names();
CheckList run_verify_suite(const std::string& suite, long qmax, long cmax);

bool all_passed(const CheckList& checks);

}  // namespace sp4kl
