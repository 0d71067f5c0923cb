#pragma once

#include <json.hpp>

#include <string>

#include "sp4kl/geometric.hpp"
#include "sp4kl/kloosterman.hpp"

namespace sp4kl {

using Json = nlohmann::json;

inline constexpr const char* kSchemaVersion = "sp4kl/1";

// Parsed command-line configuration; round-trips through JSON.
struct RunConfig {
  std::string command = "kl";
  std::string lattice = "full";  // "full" or "pa:<q>"
  std::string w = "s1s2s1s2";
  long c1 = 1, c2 = 1;
  std::array<long, 2> M{1, 1};
  std::string N = "auto";  // "auto" or "n1,n2"
  long long budget = 1000LL * 1000 * 1000;
  // Include the window representatives of every double coset in the
  // kl report.
  bool dump_set = false;
  // Runtime-only: worker count, excluded from serialization and equality
  // so that reports stay byte-identical across thread counts.
  int threads = 0;
  std::string output;
  std::string format = "json";
  // scan ranges
  std::string wsel = "relevant";  // "all", "relevant" or a word
  long c1max = 4, c2max = 4;

  bool operator==(const RunConfig& o) const;
};

Json config_to_json(const RunConfig& cfg);
RunConfig config_from_json(const Json& j);

LatticeDesc parse_lattice(const std::string& s);
std::array<long, 2> parse_long_pair(const std::string& s);

Json phase_sum_to_json(const PhaseSum& s);
Json numeric_to_json(const ComplexValue& v);

// Full report for one Kloosterman query: {schema, config, result, checks}.
// Byte-deterministic for a fixed config (independent of thread count).
Json kl_report(const RunConfig& cfg);

// CSV table over (w, c1, c2) ranges; deterministic row order.
std::string scan_csv(const RunConfig& cfg);

// Counting-table report. The external inputs arrive as a structured
// record {"generic": {"G": n, "Y": n}, "gl2_count": n}; a missing
// gl2_count falls back to the toy GL(2) dimension oracle at level q.
Json atlas_report(const Rational& sigma, double M, const Json& inputs,
                  long q);

Rational parse_rational(const std::string& s);  // "a" or "a/b"

void apply_thread_count(int threads);

}  // namespace sp4kl
