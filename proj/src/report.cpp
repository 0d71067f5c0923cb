#include "sp4kl/report.hpp"

#include "sp4kl/atlas.hpp"

#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sp4kl {

bool RunConfig::operator==(const RunConfig& o) const {
  // threads is a runtime knob, not configuration: reports must be
  // byte-identical across worker counts, so it stays out of the config.
  return command == o.command && lattice == o.lattice && w == o.w &&
         c1 == o.c1 && c2 == o.c2 && M == o.M && N == o.N &&
         budget == o.budget && dump_set == o.dump_set && output == o.output &&
         format == o.format && wsel == o.wsel && c1max == o.c1max &&
         c2max == o.c2max;
}

Json config_to_json(const RunConfig& cfg) {
  Json j;
  j["command"] = cfg.command;
  j["lattice"] = cfg.lattice;
  j["w"] = cfg.w;
  j["c1"] = cfg.c1;
  j["c2"] = cfg.c2;
  j["M"] = {cfg.M[0], cfg.M[1]};
  j["N"] = cfg.N;
  j["budget"] = cfg.budget;
  j["dump_set"] = cfg.dump_set;
  j["output"] = cfg.output;
  j["format"] = cfg.format;
  j["wsel"] = cfg.wsel;
  j["c1max"] = cfg.c1max;
  j["c2max"] = cfg.c2max;
  return j;
}

RunConfig config_from_json(const Json& j) {
  RunConfig cfg;
  cfg.command = j.at("command").get<std::string>();
  cfg.lattice = j.at("lattice").get<std::string>();
  cfg.w = j.at("w").get<std::string>();
  cfg.c1 = j.at("c1").get<long>();
  cfg.c2 = j.at("c2").get<long>();
  cfg.M = {j.at("M")[0].get<long>(), j.at("M")[1].get<long>()};
  cfg.N = j.at("N").get<std::string>();
  cfg.budget = j.at("budget").get<long long>();
  cfg.dump_set = j.at("dump_set").get<bool>();
  cfg.output = j.at("output").get<std::string>();
  cfg.format = j.at("format").get<std::string>();
  cfg.wsel = j.at("wsel").get<std::string>();
  cfg.c1max = j.at("c1max").get<long>();
  cfg.c2max = j.at("c2max").get<long>();
  return cfg;
}

LatticeDesc parse_lattice(const std::string& s) {
  if (s == "full") return LatticeDesc::full();
  if (s.rfind("pa:", 0) == 0) {
    long q = std::stol(s.substr(3));
    return LatticeDesc::paramodular(q);
  }
  throw std::invalid_argument("lattice must be 'full' or 'pa:<q>'");
}

std::array<long, 2> parse_long_pair(const std::string& s) {
  auto comma = s.find(',');
  if (comma == std::string::npos)
    throw std::invalid_argument("expected '<a>,<b>'");
  return {std::stol(s.substr(0, comma)), std::stol(s.substr(comma + 1))};
}

Json phase_sum_to_json(const PhaseSum& s) {
  PhaseSum red = s.reduced();
  if (auto n = red.integer_value()) {
    return Json{{"type", "integer"}, {"value", n->get_str()}};
  }
  Json terms = Json::array();
  for (const auto& [p, c] : red.terms()) {
    terms.push_back({num(p.r).get_str(), den(p.r).get_str(), c.get_str()});
  }
  return Json{{"type", "phases"}, {"terms", terms}};
}

Json numeric_to_json(const ComplexValue& v) {
  return Json{{"re", v.re.str()},
              {"im", v.im.str()},
              {"abs", v.magnitude().str()},
              {"precision_bits", static_cast<long>(kNumericPrecision)}};
}

Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return rat(std::stol(s));
  return rat(std::stol(s.substr(0, slash)), std::stol(s.substr(slash + 1)));
}

Json atlas_report(const Rational& sigma, double M, const Json& inputs,
                  long q) {
  GenericInput generic;
  long gl2 = -1;
  if (inputs.contains("generic")) {
    generic.G = inputs["generic"].value("G", 0L);
    generic.Y = inputs["generic"].value("Y", 0L);
  }
  if (inputs.contains("gl2_count")) gl2 = inputs["gl2_count"].get<long>();
  if (gl2 < 0) gl2 = gl2_toy_dimension(q);

  CountingAssembly a = assemble_counting(sigma, M, generic, gl2, q);

  Json j;
  j["schema"] = kSchemaVersion;
  j["config"] = Json{{"command", "atlas"},
                     {"sigma", to_string(sigma)},
                     {"M", M},
                     {"q", q},
                     {"inputs", inputs}};
  Json cols;
  auto prov = [](CountProvenance p) {
    switch (p) {
      case CountProvenance::exact_zero: return "exact-zero";
      case CountProvenance::formula: return "formula";
      case CountProvenance::external_input: return "external-input";
    }
    return "?";
  };
  for (ArthurType t : kAllArthurTypes) {
    const CountColumn& c = a.columns.at(t);
    cols[arthur_tag(t)] = Json{{"count", c.count},
                               {"provenance", prov(c.provenance)},
                               {"shape", arthur_shape(t)}};
  }
  j["result"] = Json{{"sigma", to_string(sigma)},
                     {"columns", cols},
                     {"total", a.total},
                     {"p_within_envelope", a.p_within_envelope},
                     {"gl2_count_used", gl2}};
  return j;
}

void apply_thread_count(int threads) {
#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#else
  (void)threads;
#endif
}

namespace {

struct ResolvedQuery {
  KloostermanQuery q;
  bool n_was_auto = false;
  bool n_resolvable = true;
};

ResolvedQuery resolve_query(const RunConfig& cfg) {
  ResolvedQuery r;
  r.q.lattice = parse_lattice(cfg.lattice);
  r.q.w = weyl_from_name(cfg.w);
  r.q.c = Modulus(cfg.c1, cfg.c2);
  r.q.chars.M = cfg.M;
  if (cfg.N == "auto") {
    r.n_was_auto = true;
    auto n = resolve_auto_n(r.q.w, r.q.c, cfg.M);
    if (n) {
      r.q.chars.N = *n;
    } else {
      r.n_resolvable = false;
      r.q.chars.N = cfg.M;
    }
  } else {
    r.q.chars.N = parse_long_pair(cfg.N);
  }
  return r;
}

// Tabulated (w, c) shape of the ramified lemma, if this query matches one:
// returns the exponent k with c = (q, q^k).
std::optional<int> tabulated_shape(const KloostermanQuery& q) {
  if (!q.lattice.is_paramodular()) return std::nullopt;
  long p = q.lattice.q;
  Integer z(p);
  if (mpz_probab_prime_p(z.get_mpz_t(), 40) == 0) return std::nullopt;
  if (q.c.c1 != p) return std::nullopt;
  long c2 = q.c.c2;
  int k = 0;
  while (c2 > 1 && c2 % p == 0) {
    c2 /= p;
    ++k;
  }
  if (c2 != 1) return std::nullopt;
  if (q.chars.N[1] % p == 0) return std::nullopt;
  if (q.w == WeylWord::s1s2s1 && k == 1) return 1;
  if (q.w == WeylWord::s2s1s2 && k == 2) return 2;
  if (q.w == WeylWord::s1s2s1s2 && k >= 1 && k <= 3) return k;
  return std::nullopt;
}

}  // namespace

Json kl_report(const RunConfig& cfg) {
  apply_thread_count(cfg.threads);
  ResolvedQuery rq = resolve_query(cfg);

  Json j;
  j["schema"] = kSchemaVersion;
  j["config"] = config_to_json(cfg);

  Json result;
  result["lattice"] = rq.q.lattice.name();
  result["w"] = weyl_name(rq.q.w);
  result["c"] = {rq.q.c.c1, rq.q.c.c2};
  result["M"] = {rq.q.chars.M[0], rq.q.chars.M[1]};
  result["N"] = {rq.q.chars.N[0], rq.q.chars.N[1]};
  result["N_auto"] = rq.n_was_auto;

  Json checks = Json::array();

  bool adm = rq.n_resolvable &&
             is_admissible(rq.q.w, rq.q.c, rq.q.chars);
  result["admissible"] = adm;

  EnumerationOptions opts = EnumerationOptions::from_env();
  opts.budget = cfg.budget;

  ElementList elems =
      enumerate_kloosterman_set(rq.q.lattice, rq.q.w, rq.q.c, opts);
  result["set_size"] = elems.size();
  if (cfg.dump_set) {
    Json listing = Json::array();
    for (const KloostermanSetElement& e : elems) {
      listing.push_back(
          Json{{"x", {to_string(e.x.x), to_string(e.x.a), to_string(e.x.b),
                      to_string(e.x.c)}},
               {"xp", {to_string(e.xp.x), to_string(e.xp.a),
                       to_string(e.xp.b), to_string(e.xp.c)}}});
    }
    result["elements"] = listing;
  }

  PhaseSum sum =
      adm ? kloosterman_sum_over(elems, rq.q.chars) : PhaseSum::zero();
  result["exact_value"] = phase_sum_to_json(sum);
  ComplexValue nv = sum.numeric();
  result["numeric_value"] = numeric_to_json(nv);

  // Trivial bound |Kl| <= #X.
  BigFloat size_f{rat(static_cast<long>(elems.size()))};
  checks.push_back(Json{{"name", "trivial_bound"},
                        {"pass", nv.magnitude() <= size_f}});

  if (auto k = tabulated_shape(rq.q)) {
    PhaseSum closed =
        paramodular_closed_form(rq.q.w, rq.q.lattice.q, *k, rq.q.chars.N);
    bool match = sum.value_equals(closed);
    result["closed_form_match"] = match;
    checks.push_back(Json{{"name", "closed_form_match"}, {"pass", match}});
  }

  j["result"] = result;
  j["checks"] = checks;
  return j;
}

std::string scan_csv(const RunConfig& cfg) {
  apply_thread_count(cfg.threads);
  LatticeDesc L = parse_lattice(cfg.lattice);
  std::vector<WeylWord> words;
  if (cfg.wsel == "all") {
    words.assign(kAllWeylWords.begin(), kAllWeylWords.end());
  } else if (cfg.wsel == "relevant") {
    words.assign(kRelevantWeylWords.begin(), kRelevantWeylWords.end());
  } else {
    words.push_back(weyl_from_name(cfg.wsel));
  }

  std::ostringstream os;
  os << "w,c1,c2,admissible,status,set_size,exact_integer,term_count,"
        "numeric_abs,trivial_slack\n";
  EnumerationOptions opts = EnumerationOptions::from_env();
  opts.budget = cfg.budget;

  for (WeylWord w : words) {
    for (long c1 = 1; c1 <= cfg.c1max; ++c1) {
      for (long c2 = 1; c2 <= cfg.c2max; ++c2) {
        Modulus c(c1, c2);
        CharacterPair chars;
        chars.M = cfg.M;
        bool resolvable = true;
        if (cfg.N == "auto") {
          auto n = resolve_auto_n(w, c, cfg.M);
          if (n)
            chars.N = *n;
          else
            resolvable = false;
        } else {
          chars.N = parse_long_pair(cfg.N);
        }
        bool adm = resolvable && is_admissible(w, c, chars);
        os << weyl_name(w) << "," << c1 << "," << c2 << "," << (adm ? 1 : 0)
           << ",";
        try {
          ElementList elems = enumerate_kloosterman_set(L, w, c, opts);
          PhaseSum sum = adm ? kloosterman_sum_over(elems, chars)
                             : PhaseSum::zero();
          auto iv = sum.integer_value();
          ComplexValue nv = sum.numeric();
          BigFloat slack =
              BigFloat(rat(static_cast<long>(elems.size()))) - nv.magnitude();
          os << "ok," << elems.size() << ","
             << (iv ? iv->get_str() : std::string()) << ","
             << sum.term_count() << "," << nv.magnitude().str(20) << ","
             << slack.str(20) << "\n";
        } catch (const BudgetExceededError&) {
          os << "budget,,,,,\n";
        }
      }
    }
  }
  return os.str();
}

}  // namespace sp4kl
