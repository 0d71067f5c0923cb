// Acceptance suite: one line per criterion, exact checks throughout.
// Exits nonzero if any criterion fails.

#include <cstdio>
#include <string>

#include "sp4kl/verify.hpp"

using namespace sp4kl;

namespace {

int failures = 0;

void report(int number, const std::string& title, const CheckList& checks) {
  bool pass = all_passed(checks);
  if (!pass) ++failures;
  std::printf("criterion %2d  %-44s %s\n", number, title.c_str(),
              pass ? "PASS" : "FAIL");
  if (!pass) {
    for (const CheckResult& c : checks)
      if (!c.pass)
        std::printf("    failed: %s %s\n", c.name.c_str(), c.details.c_str());
  }
}

}  // namespace

int main() {
  report(1, "ramified closed forms (q in {2,3,5})",
         check_ramified_closed_forms(5));
  report(2, "divisibility vanishing (q in {2,3})",
         check_divisibility_vanishing());
  report(3, "trivial Weyl element", check_trivial_weyl(4));
  report(4, "admissibility: table vs conjugation",
         check_admissibility_exhaustive());
  report(5, "trivial bound |Kl| <= #X", check_trivial_bound());
  report(6, "classical sums and Weil-shape bound", check_classical_sums());
  report(7, "geometric-side vanishing", check_geometric());
  report(8, "density exponent calculus", check_exponents());
  report(9, "counting assembly gates", check_counting_assembly());
  report(10, "byte-deterministic reports (1/4/8 threads)",
         check_determinism());

  if (failures == 0) {
    std::printf("all criteria passed\n");
  } else {
    std::printf("%d criterion(s) failed\n", failures);
  }
  return failures == 0 ? 0 : 1;
}
