#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "sp4kl/report.hpp"
#include "sp4kl/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitBudget = 2;

void write_output(const std::string& path, const std::string& payload) {
  if (path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + path);
  f << payload;
}

int run_kl(const sp4kl::RunConfig& cfg) {
  sp4kl::Json report = sp4kl::kl_report(cfg);
  write_output(cfg.output, report.dump(2) + "\n");
  return kExitOk;
}

int run_scan(const sp4kl::RunConfig& cfg) {
  write_output(cfg.output, sp4kl::scan_csv(cfg));
  return kExitOk;
}

int run_verify(const std::string& suite, long qmax, long cmax) {
  sp4kl::CheckList checks = sp4kl::run_verify_suite(suite, qmax, cmax);
  for (const sp4kl::CheckResult& c : checks) {
    std::cout << (c.pass ? "PASS" : "FAIL") << "  " << c.name;
    if (!c.details.empty()) std::cout << "  [" << c.details << "]";
    std::cout << "\n";
  }
  return sp4kl::all_passed(checks) ? kExitOk : kExitError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "sp4kl: exact symplectic Kloosterman sums for paramodular lattices"};
  app.require_subcommand(1);

  sp4kl::RunConfig cfg;
  cfg.budget = sp4kl::EnumerationOptions::from_env().budget;

  std::string n_str = "auto";
  std::string m_str = "1,1";
  std::string c_str = "1,1";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--lattice", cfg.lattice, "full or pa:<q>");
    sub->add_option("--budget", cfg.budget, "candidate budget cap");
    sub->add_option("--threads", cfg.threads, "worker thread count");
    sub->add_option("--out", cfg.output, "output path (default stdout)");
  };

  CLI::App* kl = app.add_subcommand("kl", "compute one Kloosterman sum");
  add_common(kl);
  kl->add_option("--w", cfg.w, "Weyl word, e.g. s1s2s1")->required();
  kl->add_option("--c", c_str, "modulus c1,c2")->required();
  kl->add_option("--M", m_str, "character M1,M2");
  kl->add_option("--N", n_str, "character N1,N2 or auto");
  kl->add_flag("--dump-set", cfg.dump_set,
               "include the double-coset representatives in the report");

  CLI::App* scan = app.add_subcommand("scan", "CSV scan over (w, c) ranges");
  add_common(scan);
  scan->add_option("--w", cfg.wsel, "word, 'relevant' or 'all'");
  scan->add_option("--c1max", cfg.c1max, "c1 range bound");
  scan->add_option("--c2max", cfg.c2max, "c2 range bound");
  scan->add_option("--M", m_str, "character M1,M2");
  scan->add_option("--N", n_str, "character N1,N2 or auto");

  std::string suite = "all";
  long qmax = 5, cmax = 4;
  CLI::App* verify = app.add_subcommand("verify", "run a check suite");
  verify->add_option("suite", suite,
                     "lemma-ramified | admissibility | trivial | "
                     "factorization | geo | exponents | atlas | "
                     "determinism | all");
  verify->add_option("--qmax", qmax, "largest prime level");
  verify->add_option("--cmax", cmax, "modulus range for trivial checks");

  std::string sigma_str = "1/2";
  std::string atlas_input;
  double m_param = 10.0;
  long atlas_q = 2;
  CLI::App* atlas = app.add_subcommand("atlas", "counting table by type");
  atlas->add_option("--sigma", sigma_str, "badness threshold, e.g. 1/2");
  atlas->add_option("--M", m_param, "spectral-ball parameter");
  atlas->add_option("--q", atlas_q, "paramodular level");
  atlas->add_option("--input", atlas_input,
                    "JSON file {generic:{G,Y}, gl2_count}");
  atlas->add_option("--out", cfg.output, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitError;
  }

  try {
    if (kl->parsed()) {
      cfg.command = "kl";
      auto c = sp4kl::parse_long_pair(c_str);
      cfg.c1 = c[0];
      cfg.c2 = c[1];
      cfg.M = sp4kl::parse_long_pair(m_str);
      cfg.N = n_str;
      return run_kl(cfg);
    }
    if (scan->parsed()) {
      cfg.command = "scan";
      cfg.M = sp4kl::parse_long_pair(m_str);
      cfg.N = n_str;
      cfg.format = "csv";
      return run_scan(cfg);
    }
    if (verify->parsed()) {
      return run_verify(suite, qmax, cmax);
    }
    if (atlas->parsed()) {
      sp4kl::Json inputs = sp4kl::Json::object();
      if (!atlas_input.empty()) {
        std::ifstream f(atlas_input);
        if (!f) throw std::runtime_error("cannot open " + atlas_input);
        f >> inputs;
      }
      sp4kl::Json report = sp4kl::atlas_report(
          sp4kl::parse_rational(sigma_str), m_param, inputs, atlas_q);
      write_output(cfg.output, report.dump(2) + "\n");
      return kExitOk;
    }
  } catch (const sp4kl::BudgetExceededError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
