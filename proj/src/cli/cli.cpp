#include "eulerian/cli.hpp"

#include <CLI11.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eulerian/cache.hpp"
#include "eulerian/conjectures.hpp"
#include "eulerian/decompose.hpp"
#include "eulerian/oracle.hpp"
#include "eulerian/recurrence.hpp"
#include "eulerian/serialize.hpp"
#include "eulerian/verify.hpp"

namespace eulerian {
namespace {

struct Globals {
  unsigned threads = 0;
  bool no_cache = false;
};

struct PolyArgs {
  std::string family;
  std::string parity = "all";
  int n = 0;
  std::string engine = "auto";
  bool bivariate = false;
  std::string basis = "monomial";
  std::string format = "json";
};

struct DecomposeArgs {
  std::string family;
  std::string parity = "even";
  int n = 0;
  std::string format = "json";
};

struct SuiteArgs {
  std::string suite;
  int max_n = 6;
  std::string format = "json";
};

struct StatsArgs {
  std::string family;
  std::string perm;
  std::string format = "json";
};

GroupKind kind_of(const std::string& s) {
  return s == "A" ? GroupKind::A : (s == "B" ? GroupKind::B : GroupKind::D);
}

Parity parity_of(const std::string& s) {
  return s == "even" ? Parity::Even : (s == "odd" ? Parity::Odd : Parity::All);
}

// "A_{6}^{+}" style label used by the text renderings.
std::string label(const std::string& family, const std::string& parity, int n, bool latex) {
  std::string sup = parity == "even" ? "+" : (parity == "odd" ? "-" : "");
  if (latex) return family + "_{" + std::to_string(n) + "}" + (sup.empty() ? "" : "^{" + sup + "}");
  return family + "_" + std::to_string(n) + (sup.empty() ? "" : "^" + sup);
}

// -- poly ---------------------------------------------------------------------

HomBivPoly compute_poly(GroupKind kind, Parity parity, int n, const std::string& engine, const Globals& g) {
  OracleOptions opts;
  opts.threads = g.threads;
  if (engine == "oracle") return descent_poly(kind, parity, n, opts);
  auto pick = [parity](const SplitPair& s) {
    switch (parity) {
      case Parity::Even: return s.plus;
      case Parity::Odd: return s.minus;
      case Parity::All: break;
    }
    return s.total();
  };
  switch (kind) {
    case GroupKind::A: return parity == Parity::All ? eulerian_A(n) : pick(eulerian_A_split(n));
    case GroupKind::B: return parity == Parity::All ? eulerian_B(n) : pick(eulerian_B_split(n));
    case GroupKind::D: return pick(eulerian_D_split(n, g.threads));
  }
  return HomBivPoly();
}

std::string palindromic_hint(GroupKind kind, Parity parity) {
  if (kind == GroupKind::A && parity != Parity::All) {
    return "A_n^+ and A_n^- are palindromic only for n = 0,1 (mod 4); see `decompose` for other n";
  }
  if (kind == GroupKind::B && parity != Parity::All) {
    return "B_n^+ and B_n^- are palindromic only for even n; see `decompose` for odd n";
  }
  return "polynomial is not palindromic";
}

int cmd_poly(const PolyArgs& a, const Globals& g, std::ostream& out) {
  const GroupKind kind = kind_of(a.family);
  const Parity parity = parity_of(a.parity);
  if (a.n < 1) throw Error(Errc::InvalidArgument, "--n must be positive");
  check_group(kind, a.n);
  std::string engine = a.engine;
  if (engine == "auto") engine = (kind == GroupKind::D && a.n < 4) ? "oracle" : "recurrence";

  const std::string key = a.family + "|" + a.parity + "|" + std::to_string(a.n) + "|" + engine;
  std::optional<TableCache> cache = g.no_cache ? std::nullopt : TableCache::from_env();
  std::optional<HomBivPoly> poly;
  if (cache) {
    if (auto hit = cache->load(key)) poly = hom_biv_from_json(*hit);
  }
  if (!poly) {
    poly = compute_poly(kind, parity, a.n, engine, g);
    if (cache) cache->store(key, to_json(*poly));
  }

  Json doc{{"family", a.family}, {"parity", a.parity}, {"n", a.n}, {"engine", engine},
           {"bivariate", a.bivariate}, {"basis", a.basis}};
  const bool latex = a.format == "latex";
  const std::string name = label(a.family, a.parity, a.n, latex) + (a.bivariate ? "(s,t)" : "(t)");
  const TextStyle style = latex ? TextStyle::Latex : TextStyle::Plain;

  if (a.basis == "gamma") {
    GammaVec gv;
    try {
      gv = a.bivariate ? gamma_expand_biv(*poly) : gamma_expand(poly->at_s_equals_one());
    } catch (const Error& e) {
      if (e.code() == Errc::NotPalindromic) {
        throw Error(Errc::NotPalindromic, label(a.family, a.parity, a.n, false) + ": " + palindromic_hint(kind, parity));
      }
      throw;
    }
    if (a.format == "json") {
      doc["gamma"] = to_json(gv);
      out << doc.dump(2) << '\n';
    } else if (a.format == "csv") {
      out << to_csv(gv);
    } else {
      out << name << " = " << (a.bivariate ? format_gamma_biv(gv, style) : format_gamma(gv, style)) << '\n';
    }
    return kExitOk;
  }

  if (a.format == "json") {
    doc["poly"] = a.bivariate ? to_json(*poly) : to_json(poly->at_s_equals_one());
    out << doc.dump(2) << '\n';
  } else if (a.format == "csv") {
    out << (a.bivariate ? to_csv(*poly) : to_csv(poly->at_s_equals_one()));
  } else {
    out << name << " = " << (a.bivariate ? format_poly(*poly, style) : format_poly(poly->at_s_equals_one(), style))
        << '\n';
  }
  return kExitOk;
}

// -- decompose -----------------------------------------------------------------

int cmd_decompose(const DecomposeArgs& a, std::ostream& out) {
  const Sign sign = a.parity == "even" ? Sign::Plus : Sign::Minus;
  std::vector<GammaVec> parts;
  HomBivPoly target;
  if (a.family == "A") {
    if (a.n % 4 == 2) {
      parts = decompose_2mod4(a.n, sign);
    } else if (a.n % 4 == 3) {
      parts = decompose_3mod4(a.n, sign);
    } else {
      throw Error(Errc::NotApplicable, "A_n^+- is already palindromic for n = 0,1 (mod 4); use poly --basis gamma");
    }
    const SplitPair s = eulerian_A_split(a.n);
    target = sign == Sign::Plus ? s.plus : s.minus;
  } else {
    parts = decompose_B_odd(a.n, sign);
    const SplitPair s = eulerian_B_split(a.n);
    target = sign == Sign::Plus ? s.plus : s.minus;
  }
  const IntPoly1 goal = target.at_s_equals_one();
  const IntPoly1 sum = collapse_sum(parts);
  const std::string name = label(a.family, a.parity, a.n, a.format == "latex") + "(t)";

  if (a.format == "json") {
    Json doc{{"family", a.family}, {"parity", a.parity}, {"n", a.n}, {"target", to_json(goal)}};
    Json arr = Json::array();
    for (const auto& g : parts) {
      arr.push_back(Json{{"center", g.center().get_str()},
                         {"gamma", to_json(g)},
                         {"poly", to_json(gamma_collapse(g))},
                         {"gamma_nonneg", g.is_nonnegative()}});
    }
    doc["parts"] = arr;
    doc["sum_matches"] = sum == goal;
    out << doc.dump(2) << '\n';
  } else if (a.format == "csv") {
    out << "part,center,exponent,gamma\n";
    for (size_t i = 0; i < parts.size(); ++i) {
      for (size_t k = 0; k < parts[i].gammas.size(); ++k) {
        out << i + 1 << ',' << parts[i].center().get_str() << ',' << parts[i].r + static_cast<int>(k) << ','
            << parts[i].gammas[k].get_str() << '\n';
      }
    }
  } else {
    const TextStyle style = a.format == "latex" ? TextStyle::Latex : TextStyle::Plain;
    out << name << " = " << format_poly(goal, style) << '\n';
    for (size_t i = 0; i < parts.size(); ++i) {
      out << "part " << i + 1 << " (center " << parts[i].center().get_str() << "): "
          << format_poly(gamma_collapse(parts[i]), style) << " = " << format_gamma(parts[i], style) << '\n';
    }
  }
  return sum == goal ? kExitOk : kExitFailure;
}

// -- verify / conjecture ---------------------------------------------------------

int cmd_verify(const SuiteArgs& a, const Globals& g, std::ostream& out) {
  static const std::map<std::string, VerifySuite> suites{{"recurrences", VerifySuite::Recurrences},
                                                         {"bijections", VerifySuite::Bijections},
                                                         {"gamma-theorems", VerifySuite::GammaTheorems},
                                                         {"identities", VerifySuite::Identities}};
  OracleOptions opts;
  opts.threads = g.threads;
  const auto results = run_verify_suite(suites.at(a.suite), a.max_n, opts);
  bool all = true;
  for (const auto& r : results) all &= r.pass;
  if (a.format == "json") {
    Json arr = Json::array();
    for (const auto& r : results) {
      arr.push_back(Json{{"name", r.name}, {"n", r.n}, {"pass", r.pass}, {"detail", r.detail}});
    }
    out << Json{{"suite", a.suite}, {"max_n", a.max_n}, {"pass", all}, {"checks", arr}}.dump(2) << '\n';
  } else {
    out << "name,n,pass,detail\n";
    for (const auto& r : results) {
      out << '"' << r.name << "\"," << r.n << ',' << (r.pass ? "true" : "false") << ",\"" << r.detail << "\"\n";
    }
  }
  return all ? kExitOk : kExitFailure;
}

int cmd_conjecture(const SuiteArgs& a, const Globals& g, std::ostream& out) {
  ConjectureConfig config;
  config.oracle.threads = g.threads;
  config.realroot = a.suite == "realroot";
  config.twosided = a.suite == "twosided";
  config.max_n_A = config.max_n_B = config.max_n_D = a.max_n;
  config.max_n_twosided = a.max_n;
  if (config.twosided) {
    for (GroupKind k : {GroupKind::A, GroupKind::B, GroupKind::D}) check_budget(k, a.max_n, config.oracle.budget);
  }
  const auto verdicts = run_conjecture_suite(config);
  auto opt = [](const auto& v) { return v ? Json(*v) : Json(nullptr); };
  if (a.format == "json") {
    Json arr = Json::array();
    for (const auto& v : verdicts) {
      Json row{{"family", v.family},         {"parity", v.parity},
               {"n", v.n},                   {"symmetric", v.symmetric},
               {"expanded", opt(v.expanded)}, {"gamma_nonneg", opt(v.gamma_nonneg)},
               {"real_rooted", opt(v.real_rooted)}};
      if (v.distinct_real_roots) row["distinct_real_roots"] = *v.distinct_real_roots;
      row["flagged"] = v.flagged;
      if (!v.witness.empty()) row["witness"] = v.witness;
      arr.push_back(row);
    }
    out << arr.dump(2) << '\n';
  } else {
    auto b = [](const std::optional<bool>& x) { return x ? (*x ? "true" : "false") : ""; };
    out << "family,parity,n,symmetric,expanded,gamma_nonneg,real_rooted,flagged,witness\n";
    for (const auto& v : verdicts) {
      out << v.family << ',' << v.parity << ',' << v.n << ',' << (v.symmetric ? "true" : "false") << ','
          << b(v.expanded) << ',' << b(v.gamma_nonneg) << ',' << b(v.real_rooted) << ','
          << (v.flagged ? "true" : "false") << ",\"" << v.witness << "\"\n";
    }
  }
  return kExitOk;
}

// -- stats ---------------------------------------------------------------------

int cmd_stats(const StatsArgs& a, std::ostream& out) {
  const SignedPerm p = SignedPerm::parse(a.perm);
  StatBundle s;
  try {
    s = a.family == "A" ? stats_A(p) : (a.family == "B" ? stats_B(p) : stats_D(p));
  } catch (const Error& e) {
    if (e.code() == Errc::NotTypeA || e.code() == Errc::TooSmallForD) throw Error(Errc::InvalidArgument, e.what());
    throw;
  }
  if (a.format == "json") {
    Json doc{{"family", a.family}, {"perm", p.to_string()}, {"des", s.des}, {"asc", s.asc}, {"inv", s.inv}};
    if (s.negs) doc["negs"] = *s.negs;
    if (s.lpk) doc["lpk"] = *s.lpk;
    out << doc.dump(2) << '\n';
  } else {
    out << "des " << s.des << "\nasc " << s.asc << "\ninv " << s.inv << '\n';
    if (s.negs) out << "negs " << *s.negs << '\n';
    if (s.lpk) out << "lpk " << *s.lpk << '\n';
  }
  return kExitOk;
}

// CLI11 reads a value such as "-2,-1" as a flag; glue it to its option.
std::vector<std::string> normalize_args(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) {
    const std::string cur = argv[i];
    if (cur == "--perm" && i + 1 < argc) {
      args.push_back(cur + "=" + argv[++i]);
    } else {
      args.push_back(cur);
    }
  }
  std::reverse(args.begin(), args.end());
  return args;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Eulerian polynomials over Weyl groups: exact tables, gamma expansions and checks"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--threads", g.threads, "Worker threads for enumeration (0 = all cores)");
  app.add_flag("--no-cache", g.no_cache, std::string("Ignore the table cache (") + kCacheEnvVar + ")");

  const std::vector<std::string> families{"A", "B", "D"};
  const std::vector<std::string> parities{"all", "even", "odd"};

  PolyArgs pa;
  auto* poly = app.add_subcommand("poly", "Compute a descent polynomial");
  poly->add_option("--family", pa.family)->required()->check(CLI::IsMember(families));
  poly->add_option("--parity", pa.parity)->check(CLI::IsMember(parities));
  poly->add_option("--n", pa.n)->required();
  poly->add_option("--engine", pa.engine)->check(CLI::IsMember({"oracle", "recurrence", "auto"}));
  poly->add_flag("--bivariate", pa.bivariate);
  poly->add_option("--basis", pa.basis)->check(CLI::IsMember({"monomial", "gamma"}));
  poly->add_option("--format", pa.format)->check(CLI::IsMember({"json", "csv", "latex", "text"}));

  DecomposeArgs da;
  auto* dec = app.add_subcommand("decompose", "Split a non-palindromic half into gamma-positive parts");
  dec->add_option("--family", da.family)->required()->check(CLI::IsMember({"A", "B"}));
  dec->add_option("--parity", da.parity)->check(CLI::IsMember({"even", "odd"}));
  dec->add_option("--n", da.n)->required();
  dec->add_option("--format", da.format)->check(CLI::IsMember({"json", "csv", "latex", "text"}));

  SuiteArgs va;
  auto* ver = app.add_subcommand("verify", "Run a theorem suite; nonzero exit on any failure");
  ver->add_option("--suite", va.suite)
      ->required()
      ->check(CLI::IsMember({"recurrences", "bijections", "gamma-theorems", "identities"}));
  ver->add_option("--max-n", va.max_n)->check(CLI::Range(1, 20));
  ver->add_option("--format", va.format)->check(CLI::IsMember({"json", "csv"}));

  SuiteArgs ca;
  auto* conj = app.add_subcommand("conjecture", "Report on the open conjectures (always exits 0)");
  conj->add_option("--suite", ca.suite)->required()->check(CLI::IsMember({"realroot", "twosided"}));
  conj->add_option("--max-n", ca.max_n)->check(CLI::Range(1, 16));
  conj->add_option("--format", ca.format)->check(CLI::IsMember({"json", "csv"}));

  StatsArgs sa;
  auto* st = app.add_subcommand("stats", "Statistics of one group element");
  st->add_option("--family", sa.family)->required()->check(CLI::IsMember(families));
  st->add_option("--perm", sa.perm, "Window, e.g. -2,1,3")->required();
  st->add_option("--format", sa.format)->check(CLI::IsMember({"json", "text"}));

  try {
    auto args = normalize_args(argc, argv);
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*poly) return cmd_poly(pa, g, out);
    if (*dec) return cmd_decompose(da, out);
    if (*ver) return cmd_verify(va, g, out);
    if (*conj) return cmd_conjecture(ca, g, out);
    if (*st) return cmd_stats(sa, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    switch (e.code()) {
      case Errc::InvalidArgument: return kExitUsage;
      case Errc::BudgetExceeded: return kExitBudget;
      case Errc::NotPalindromic: return kExitNotPalindromic;
      default: return kExitFailure;
    }
  }
  return kExitUsage;
}

}  // namespace eulerian
