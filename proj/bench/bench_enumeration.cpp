// Wall-clock comparison of the serial reference enumerator against the
// OpenMP kernel, with an equality audit on every case.

#include <chrono>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "sp4kl/kloosterman.hpp"

using namespace sp4kl;

namespace {

double seconds(std::chrono::steady_clock::time_point a,
               std::chrono::steady_clock::time_point b) {
  return std::chrono::duration<double>(b - a).count();
}

bool same_sets(const ElementList& a, const ElementList& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i].x == b[i].x) || !(a[i].xp == b[i].xp) ||
        !(a[i].gamma == b[i].gamma))
      return false;
  return true;
}

}  // namespace

int main() {
  struct Case {
    LatticeDesc L;
    WeylWord w;
    Modulus c;
  };
  std::vector<Case> cases = {
      {LatticeDesc::full(), WeylWord::s1s2s1s2, Modulus(8, 32)},
      {LatticeDesc::full(), WeylWord::s1s2s1s2, Modulus(12, 48)},
      {LatticeDesc::full(), WeylWord::s1s2s1, Modulus(30, 30)},
      {LatticeDesc::paramodular(3), WeylWord::s1s2s1s2, Modulus(9, 81)},
      {LatticeDesc::paramodular(5), WeylWord::s1s2s1s2, Modulus(5, 125)},
  };

  EnumerationOptions opts;
  opts.audit = false;  // time the kernels, not the audit

#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (no OpenMP)\n");
#endif
  std::printf("%-28s %10s %12s %12s %8s %6s\n", "cell", "size", "serial[s]",
              "openmp[s]", "speedup", "equal");

  for (const Case& kase : cases) {
    auto t0 = std::chrono::steady_clock::now();
    ElementList serial =
        enumerate_kloosterman_set_serial(kase.L, kase.w, kase.c, opts);
    auto t1 = std::chrono::steady_clock::now();
    ElementList parallel =
        enumerate_kloosterman_set(kase.L, kase.w, kase.c, opts);
    auto t2 = std::chrono::steady_clock::now();

    double ts = seconds(t0, t1), tp = seconds(t1, t2);
    std::printf("%-6s %-8s c=(%3ld,%3ld)   %8zu %12.4f %12.4f %7.2fx %6s\n",
                kase.L.name().c_str(), weyl_name(kase.w).c_str(), kase.c.c1,
                kase.c.c2, serial.size(), ts, tp, ts / tp,
                same_sets(serial, parallel) ? "yes" : "NO");
  }
  return 0;
}
