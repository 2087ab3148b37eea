#include "etaq/cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "etaq/hpfloat.hpp"
#include "etaq/io.hpp"

namespace etaq {

namespace {

using nlohmann::json;

struct Ctx {
  CliConfig cfg;
  EtaCache cache;
  std::ostream& out;
  std::ostream& err;
};

mpfr_prec_t bits_for(int digits) { return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 16; }

void emit_json(Ctx& c, const json& j) { c.out << j.dump(2) << "\n"; }

std::string residues_list(const std::set<int>& s) {
  std::vector<int> v;
  for (int r : s) v.push_back(r % 24);
  std::sort(v.begin(), v.end());
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + std::to_string(v[i]);
  return out;
}

std::string adm_text(const AdmissibleL& a) {
  if (!a.half_integral) return "l ≡ " + residues_list(a.residues) + " (mod 24)";
  return "l = " + std::to_string(a.l0) + " m^2, m^2 ≡ " + residues_list(a.m2_residues) + " (mod 24)";
}

std::string adm_latex(const AdmissibleL& a) {
  if (!a.half_integral) return "l \\equiv " + residues_list(a.residues) + " \\pmod{24}";
  return "l = " + std::to_string(a.l0) + "m^2,\\ m^2 \\equiv " + residues_list(a.m2_residues) + " \\pmod{24}";
}

std::string mu_latex(const Mu24& m) {
  if (m.exponent == 0) return "1";
  Rat q = make_rat(m.exponent, 24);
  return "e\\left(\\frac{" + q.get_num().get_str() + "}{" + q.get_den().get_str() + "}\\right)";
}

RealDirichlet make_chi(long long N, long long disc) {
  if (disc == 0) throw UsageError("character discriminant must be nonzero");
  return {N, disc};
}

// --- subcommands ---

struct CharArgs {
  long long N = 1;
  std::string exps, mat;
  int eps = 1;
  long long chi = 1;
};

int cmd_char(Ctx& c, const CharArgs& a) {
  EtaExponents r = parse_exponents(a.N, a.exps);
  MatZ m = parse_matrix(a.mat);
  if (a.eps != 1 && a.eps != -1) throw UsageError("--eps must be 1 or -1");
  if (m.det() != 1) throw UsageError("matrix must have determinant 1");
  if (!in_gamma0(m, zint(a.N))) throw UsageError("matrix is not in Gamma0(" + std::to_string(a.N) + ")");
  Character ch{make_chi(a.N, a.chi), r};
  Mu24 v = ch(MetaElem{m, a.eps});
  switch (c.cfg.output_format) {
    case OutputFormat::json:
      emit_json(c, {{"N", a.N}, {"r", r}, {"chi", a.chi}, {"matrix", m.str()}, {"eps", a.eps}, {"exponent", v.exponent}});
      break;
    case OutputFormat::latex:
      c.out << mu_latex(v) << "\n";
      break;
    default:
      c.out << "e(" << v.exponent << "/24)\n";
  }
  return exit_ok;
}

struct CompatArgs {
  long long N = 1;
  std::string exps1, exps2;
  long long chi1 = 1, chi2 = 1;
  long long l = 0;
  bool scan = false;
  long long scan_max = 24;
  bool oracle = false;
  unsigned trials = 1000;
};

int cmd_compat(Ctx& c, const CompatArgs& a) {
  EtaExponents r = parse_exponents(a.N, a.exps1), rp = parse_exponents(a.N, a.exps2);
  RealDirichlet x1 = make_chi(a.N, a.chi1), x2 = make_chi(a.N, a.chi2);
  if (r.total() != rp.total()) throw UsageError("the two eta-quotients have different weights");
  if (!a.scan && a.l <= 0) throw UsageError("give --l or --scan");
  Character v1{x1, r}, v2{x2, rp};
  std::mt19937_64 gen(c.cfg.seed);

  std::vector<long long> ls;
  if (a.scan)
    for (long long l = 1; l <= a.scan_max; ++l) ls.push_back(l);
  else
    ls.push_back(a.l);

  json rows = json::array();
  std::vector<long long> compatible;
  long long disagreements = 0;
  for (long long l : ls) {
    CompatDetail d = compatible_detail(a.N, x1, r, x2, rp, l);
    json row = {{"l", l}, {"compatible", d.all()}, {"conditions", {d.cond1, d.cond2, d.cond3, d.cond4}}};
    if (d.all()) compatible.push_back(l);
    if (a.oracle) {
      OracleVerdict ov = compatible_sample_oracle(a.N, v1, v2, l, a.trials, gen());
      // a counterexample refutes compatibility; finding none proves nothing
      bool clash = d.all() && ov.counterexample.has_value();
      row["oracle_trials"] = ov.trials_run;
      if (ov.counterexample) row["counterexample"] = ov.counterexample->str();
      row["oracle_agrees"] = !clash;
      if (clash) ++disagreements;
    }
    rows.push_back(row);
  }

  std::optional<AdmissibleL> adm;
  if (a.scan && x1.is_trivial() && x2.is_trivial()) adm = findl(a.N, r, rp);

  if (c.cfg.output_format == OutputFormat::json) {
    json j = {{"N", a.N}, {"r", r}, {"rp", rp}, {"chi1", a.chi1}, {"chi2", a.chi2}, {"results", rows}};
    if (adm) j["admissible"] = *adm;
    if (a.oracle) j["disagreements"] = disagreements;
    emit_json(c, j);
  } else if (a.scan) {
    bool latex = c.cfg.output_format == OutputFormat::latex;
    if (adm && !adm->empty()) {
      c.out << (latex ? adm_latex(*adm) : adm_text(*adm)) << "\n";
    } else if (adm) {
      c.out << "no admissible l\n";
    } else {
      c.out << "compatible l <= " << a.scan_max << ":";
      for (long long l : compatible) c.out << " " << l;
      c.out << "\n";
    }
  } else {
    const json& row = rows[0];
    c.out << "l = " << a.l << ": " << (row["compatible"].get<bool>() ? "compatible" : "not compatible") << " (conditions";
    for (bool b : row["conditions"]) c.out << " " << (b ? "yes" : "no");
    c.out << ")\n";
  }
  if (a.oracle) {
    if (c.cfg.output_format != OutputFormat::json) c.out << "oracle disagreements: " << disagreements << "\n";
    if (disagreements) return exit_failed;
  }
  return exit_ok;
}

struct LevelArgs {
  long long N = 1;
  std::string k;
  bool cusp = false;
};

int cmd_enumerate(Ctx& c, const LevelArgs& a) {
  auto v = enumerate_holomorphic(a.N, parse_rat(a.k), a.cusp);
  if (c.cfg.output_format == OutputFormat::json) {
    emit_json(c, v);
    return exit_ok;
  }
  for (const auto& e : v) c.out << (c.cfg.output_format == OutputFormat::latex ? eta_product_latex(e) : exps_tuple(e)) << "\n";
  return exit_ok;
}

int cmd_findl(Ctx& c, const LevelArgs& a) {
  auto v = admissible_pairs(a.N, parse_rat(a.k), a.cusp);
  if (c.cfg.output_format == OutputFormat::json) {
    emit_json(c, v);
    return exit_ok;
  }
  for (const auto& pe : v) {
    if (c.cfg.output_format == OutputFormat::latex)
      c.out << eta_product_latex(pe.r) << ", " << eta_product_latex(pe.rp) << ": " << adm_latex(pe.adm) << "\n";
    else
      c.out << exps_tuple(pe.r) << " " << exps_tuple(pe.rp) << ": " << adm_text(pe.adm) << "\n";
  }
  return exit_ok;
}

struct SeriesArgs {
  long long N = 1;
  std::string exps;
  long long terms = 20;
};

int cmd_series(Ctx& c, const SeriesArgs& a) {
  if (a.terms < 1) throw UsageError("--terms must be positive");
  EtaExponents e = parse_exponents(a.N, a.exps);
  if (c.cache.max_terms() && static_cast<size_t>(a.terms) > c.cache.max_terms())
    throw ResourceError("requested terms exceed --max-terms");
  QExp24 f = eta_quotient_series(e, static_cast<size_t>(a.terms - 1));
  switch (c.cfg.output_format) {
    case OutputFormat::json:
      emit_json(c, {{"r", e}, {"series", f}});
      break;
    case OutputFormat::latex: {
      c.out << "q^{" << rat_str(make_rat(zint(f.offset24), 24)) << "}\\left(";
      bool first = true;
      for (size_t n = 0; n < f.coeffs.size(); ++n) {
        if (f.coeffs[n] == 0) continue;
        std::string s = rat_str(f.coeffs[n]);
        if (!first) c.out << (s[0] == '-' ? " - " : " + ");
        if (s[0] == '-' && !first) s = s.substr(1);
        if (n == 0 || (s != "1" && s != "-1")) c.out << s;
        else if (s == "-1") c.out << "-";
        if (n == 1) c.out << "q";
        if (n > 1) c.out << "q^{" << n << "}";
        first = false;
      }
      c.out << " + O(q^{" << f.coeffs.size() << "})\\right)\n";
      break;
    }
    default:
      c.out << "q^(" << rat_str(make_rat(zint(f.offset24), 24)) << ")\n";
      for (size_t n = 0; n < f.coeffs.size(); ++n) c.out << n << " " << rat_str(f.coeffs[n]) << "\n";
  }
  return exit_ok;
}

struct OrderArgs {
  long long N = 1;
  std::string exps;
};

int cmd_order(Ctx& c, const OrderArgs& a) {
  EtaExponents e = parse_exponents(a.N, a.exps);
  json cusps = json::array();
  Rat total = 0;
  bool holo = true, cusp_form = true;
  for (const auto& cu : cusps_gamma0(a.N)) {
    Rat o = ord_at_cusp(e, cu.c, cu.a);
    total += o * zint(cu.width);
    holo = holo && o >= 0;
    cusp_form = cusp_form && o > 0;
    cusps.push_back({{"cusp", std::to_string(cu.a) + "/" + std::to_string(cu.c)}, {"width", cu.width}, {"order", rat_str(o)}});
  }
  Rat expected = Rat(zint(index_gamma0(a.N))) * e.weight() / 12;
  if (c.cfg.output_format == OutputFormat::json) {
    emit_json(c, {{"r", e}, {"cusps", cusps}, {"holomorphic", holo}, {"cusp_form", cusp_form}, {"total", rat_str(total)},
                  {"valence", rat_str(expected)}});
  } else {
    for (const auto& cu : cusps)
      c.out << cu["cusp"].get<std::string>() << " width " << cu["width"].get<long long>() << " order " << cu["order"].get<std::string>() << "\n";
    c.out << "holomorphic " << (holo ? "yes" : "no") << ", cusp form " << (cusp_form ? "yes" : "no") << "\n";
    c.out << "sum of width * order " << rat_str(total) << ", index * k / 12 " << rat_str(expected) << "\n";
  }
  return total == expected ? exit_ok : exit_failed;
}

struct NewmanArgs {
  long long r = 0, l = 1, nmax = 2000;
};

int cmd_newman(Ctx& c, const NewmanArgs& a) {
  if (!newman_admissible(a.r, a.l)) throw UsageError("(r, l) is not admissible");
  if (a.nmax < 0) throw UsageError("--nmax must be non-negative");
  NewmanReport rep = newman_check(a.r, a.l, a.nmax, c.cache);
  switch (c.cfg.output_format) {
    case OutputFormat::json:
      emit_json(c, rep);
      break;
    case OutputFormat::latex:
      c.out << "R(" << a.r << "; " << a.r << ", " << a.l << ") = " << factored(rep.constant, true) << "\n";
      break;
    default:
      c.out << (rep.pass ? "PASS" : "FAIL") << " r=" << a.r << " l=" << a.l << " checked=" << rep.checked
            << " constant=" << rat_str(rep.constant);
      if (rep.first_bad_n) c.out << " first_bad_n=" << *rep.first_bad_n;
      c.out << "\n";
  }
  return rep.pass ? exit_ok : exit_failed;
}

struct ExpressArgs {
  long long r = 0, p = 5, beta = 1, extra = 0;
};

int cmd_express(Ctx& c, const ExpressArgs& a) {
  if (a.extra < 0) throw UsageError("--extra must be non-negative");
  ExpressProblem prob;
  try {
    prob = ExpressProblem::make(a.r, a.p, a.beta);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  ConditionReport cond = check_condition(prob, c.cache);
  if (cond.status != ConditionStatus::holds) {
    std::string st = cond.status == ConditionStatus::fails ? "fails" : "vacuous";
    if (c.cfg.output_format == OutputFormat::json)
      emit_json(c, {{"r", a.r}, {"p", a.p}, {"beta", a.beta}, {"condition", st}, {"reason", cond.reason}});
    else
      c.out << "condition " << st << ": " << cond.reason << "\n";
    return exit_failed;
  }
  Identity id = build_identity(prob, c.cache);
  bool ok = verify_identity(id, a.extra, c.cache);
  switch (c.cfg.output_format) {
    case OutputFormat::json:
      emit_json(c, id);
      break;
    case OutputFormat::latex:
      c.out << identity_latex(id) << "\n";
      break;
    default:
      c.out << identity_text(id) << "\n";
      c.out << (ok ? "verified" : "FAILED") << " through n = " << id.verified_to << " (" << id.terms.size() << " terms)\n";
  }
  return ok ? exit_ok : exit_failed;
}

struct ConstantArgs {
  long long N = 1, l = 1;
  std::string exps1, exps2;
};

int cmd_constant(Ctx& c, const ConstantArgs& a) {
  EtaExponents r = parse_exponents(a.N, a.exps1), rp = parse_exponents(a.N, a.exps2);
  ConstantResult res = determine_constant(a.N, r, rp, a.l, c.cache);
  switch (c.cfg.output_format) {
    case OutputFormat::json:
      emit_json(c, res);
      break;
    case OutputFormat::latex:
      c.out << "T_{" << a.l << "}" << eta_product_latex(r) << " = " << factored(res.coeff, true) << " \\cdot " << a.l << "^{"
            << rat_str(res.l_exponent) << "}" << eta_product_latex(rp) << "\n";
      break;
    default:
      c.out << "c = " << factored(res.coeff, false) << " * " << a.l << "^(" << rat_str(res.l_exponent) << ") method "
            << res.method << ", " << res.terms_checked << " terms " << (res.certified ? "certified" : "NOT certified") << "\n";
  }
  return res.certified ? exit_ok : exit_failed;
}

struct GaussArgs {
  std::string m, t;
};

int cmd_gauss(Ctx& c, const GaussArgs& a) {
  Int m = parse_int(a.m), t = parse_int(a.t);
  if (m <= 0 || mpz_even_p(m.get_mpz_t())) throw UsageError("--m must be odd and positive");
  mpfr_prec_t prec = bits_for(c.cfg.precision_digits);
  GaussValue g = gauss_sum_formula(m, t);
  HpComplex f = gauss_value_numeric(g, prec);
  HpComplex b = gauss_sum_bruteforce(m, t, prec);
  BigFloat errv = (f - b).abs();
  // agreement to all but a few guard digits
  bool ok = errv.to_double() <= std::pow(10.0, -(c.cfg.precision_digits - 10));
  const char* ipow[] = {"1", "i", "-1", "-i"};
  switch (c.cfg.output_format) {
    case OutputFormat::json:
      emit_json(c, {{"m", m.get_str()},
                    {"t", t.get_str()},
                    {"coeff", rat_str(g.coeff)},
                    {"sqrt", g.sqrt_part.get_str()},
                    {"i_power", g.i_power},
                    {"error", errv.str(5)},
                    {"agrees", ok}});
      break;
    case OutputFormat::latex:
      c.out << factored(g.coeff, true) << "\\sqrt{" << g.sqrt_part.get_str() << "}"
            << (g.i_power == 0 ? "" : g.i_power == 1 ? "i" : g.i_power == 2 ? "(-1)" : "(-i)") << "\n";
      break;
    default:
      c.out << rat_str(g.coeff) << " * sqrt(" << g.sqrt_part.get_str() << ") * " << ipow[g.i_power & 3] << "\n";
      c.out << "brute force " << b.re.str(c.cfg.precision_digits) << (b.im.sign() < 0 ? " - " : " + ")
            << b.im.abs().str(c.cfg.precision_digits) << " i\n";
      c.out << "difference " << errv.str(5) << (ok ? " ok" : " MISMATCH") << "\n";
  }
  return ok ? exit_ok : exit_failed;
}

struct TablesArgs {
  std::string out = "tables";
};

void write_atomic(const std::filesystem::path& p, const std::string& body) {
  auto tmp = p;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + tmp.string());
    f << body;
  }
  std::filesystem::rename(tmp, p);
}

std::string csv_adm(const AdmissibleL& a) {
  std::string s;
  const auto& set = a.half_integral ? a.m2_residues : a.residues;
  for (int r : set) s += (s.empty() ? "" : ";") + std::to_string(r % 24);
  return s;
}

int cmd_tables(Ctx& c, const TablesArgs& a) {
  std::filesystem::path dir(a.out);
  std::filesystem::create_directories(dir);
  struct Table {
    std::string name;
    std::vector<std::pair<LevelWeight, std::vector<PairEntry>>> rows;
  };
  Table integral{"lintegral", {}}, half{"lhalfintegral", {}}, n4k2{"n4k2l", {}};
  for (const auto& lw : dimension_candidates(false)) {
    auto pairs = admissible_pairs(lw.N, lw.k);
    (lw.k.get_den() == 1 ? integral : half).rows.push_back({lw, std::move(pairs)});
  }
  n4k2.rows.push_back({LevelWeight{4, 2}, admissible_pairs(4, 2, true)});

  json summary = json::object();
  for (const Table* t : {&integral, &half, &n4k2}) {
    std::ostringstream csv, txt;
    bool is_half = t == &half;
    csv << (is_half ? "N,k,r,rp,l0,m2_mod_24\n" : "N,k,r,rp,l_mod_24\n");
    size_t count = 0;
    for (const auto& [lw, pairs] : t->rows) {
      for (const auto& pe : pairs) {
        std::string r = exps_tuple(pe.r), rp = exps_tuple(pe.rp);
        csv << lw.N << "," << lw.k.get_str() << ",\"" << r << "\",\"" << rp << "\",";
        if (is_half) csv << pe.adm.l0 << ",";
        csv << csv_adm(pe.adm) << "\n";
        txt << lw.N << " " << lw.k.get_str() << " " << eta_product_text(pe.r) << " -> " << eta_product_text(pe.rp) << ": "
            << adm_text(pe.adm) << "\n";
        ++count;
      }
    }
    txt << "total " << count << "\n";
    write_atomic(dir / (t->name + ".csv"), csv.str());
    write_atomic(dir / (t->name + ".txt"), txt.str());
    summary[t->name] = count;
  }
  if (c.cfg.output_format == OutputFormat::json)
    emit_json(c, summary);
  else
    for (const auto& [k, v] : summary.items()) c.out << k << " " << v.get<size_t>() << "\n";
  return exit_ok;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Double coset operators on eta-quotients", "etaq"};
  app.require_subcommand(1);
  app.fallthrough();

  CliConfig cfg;
  std::string format = "text";
  std::string cache_path;
  app.add_option("--format", format, "text, json or latex")->check(CLI::IsMember({"text", "json", "latex"}));
  app.add_option("--cache", cache_path, "coefficient cache file")->envname("ETAQ_CACHE");
  app.add_option("--seed", cfg.seed, "seed for randomized checks");
  app.add_option("--digits", cfg.precision_digits, "decimal digits for floating evaluation")->check(CLI::Range(50, 100000));
  app.add_option("--max-terms", cfg.max_terms, "limit on cached eta-power prefixes (0: none)");

  CharArgs ca;
  auto* s_char = app.add_subcommand("char", "character value of an eta-quotient on a matrix");
  s_char->add_option("--N", ca.N)->required();
  s_char->add_option("--exps", ca.exps, "n:r,n:r,...")->required();
  s_char->add_option("--mat", ca.mat, "a,b,c,d")->required();
  s_char->add_option("--eps", ca.eps, "sign of the cover element");
  s_char->add_option("--chi", ca.chi, "discriminant of the Dirichlet character");

  CompatArgs co;
  auto* s_compat = app.add_subcommand("compat", "operator compatibility of two characters");
  s_compat->add_option("--N", co.N)->required();
  s_compat->add_option("--exps1", co.exps1)->required();
  s_compat->add_option("--exps2", co.exps2)->required();
  s_compat->add_option("--chi1", co.chi1);
  s_compat->add_option("--chi2", co.chi2);
  auto* o_l = s_compat->add_option("--l", co.l);
  s_compat->add_flag("--scan", co.scan, "scan l = 1..24")->excludes(o_l);
  s_compat->add_option("--scan-max", co.scan_max)->check(CLI::PositiveNumber);
  s_compat->add_flag("--oracle", co.oracle, "cross-check with random matrices");
  s_compat->add_option("--trials", co.trials)->check(CLI::PositiveNumber);

  LevelArgs en, fl;
  auto* s_enum = app.add_subcommand("enumerate", "holomorphic eta-quotients of level N and weight k");
  s_enum->add_option("--N", en.N)->required();
  s_enum->add_option("--k", en.k)->required();
  s_enum->add_flag("--cusp", en.cusp, "cusp forms only");
  auto* s_findl = app.add_subcommand("findl", "pairs with an operator T_l between them");
  s_findl->add_option("--N", fl.N)->required();
  s_findl->add_option("--k", fl.k)->required();
  s_findl->add_flag("--cusp", fl.cusp, "cusp forms only");

  SeriesArgs se;
  auto* s_series = app.add_subcommand("series", "q-expansion of an eta-quotient");
  s_series->add_option("--N", se.N)->required();
  s_series->add_option("--exps", se.exps)->required();
  s_series->add_option("--terms", se.terms);

  OrderArgs oa;
  auto* s_order = app.add_subcommand("order", "orders at the cusps of Gamma0(N)");
  s_order->add_option("--N", oa.N)->required();
  s_order->add_option("--exps", oa.exps)->required();

  NewmanArgs na;
  auto* s_newman = app.add_subcommand("newman", "check the recursion for eta^r under T_l");
  s_newman->add_option("--r", na.r)->required();
  s_newman->add_option("--l", na.l)->required();
  s_newman->add_option("--nmax", na.nmax);

  ExpressArgs ea;
  auto* s_express = app.add_subcommand("express", "express F_{r,p^beta} through eta-quotients of level p");
  s_express->add_option("--r", ea.r)->required();
  s_express->add_option("--p", ea.p)->required();
  s_express->add_option("--beta", ea.beta)->required();
  s_express->add_option("--extra", ea.extra, "extra verified terms");

  ConstantArgs ka;
  auto* s_const = app.add_subcommand("constant", "constant c in T_l eta^r = c eta^r'");
  s_const->add_option("--N", ka.N)->required();
  s_const->add_option("--exps1", ka.exps1)->required();
  s_const->add_option("--exps2", ka.exps2)->required();
  s_const->add_option("--l", ka.l)->required();

  GaussArgs ga;
  auto* s_gauss = app.add_subcommand("gauss", "quadratic Gauss sum, closed form against brute force");
  s_gauss->add_option("--m", ga.m)->required();
  s_gauss->add_option("--t", ga.t)->required();

  TablesArgs ta;
  auto* s_tables = app.add_subcommand("tables", "regenerate the pair tables as CSV and text");
  s_tables->add_option("--out", ta.out, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? exit_ok : exit_usage;
  }

  cfg.output_format = format == "json" ? OutputFormat::json : format == "latex" ? OutputFormat::latex : OutputFormat::text;
  if (!cache_path.empty()) cfg.cache_path = cache_path;
  Ctx ctx{cfg, EtaCache(cfg.max_terms), out, err};

  try {
    if (cfg.cache_path) ctx.cache.load(*cfg.cache_path);
    int rc = exit_ok;
    if (s_char->parsed()) rc = cmd_char(ctx, ca);
    else if (s_compat->parsed()) rc = cmd_compat(ctx, co);
    else if (s_enum->parsed()) rc = cmd_enumerate(ctx, en);
    else if (s_findl->parsed()) rc = cmd_findl(ctx, fl);
    else if (s_series->parsed()) rc = cmd_series(ctx, se);
    else if (s_order->parsed()) rc = cmd_order(ctx, oa);
    else if (s_newman->parsed()) rc = cmd_newman(ctx, na);
    else if (s_express->parsed()) rc = cmd_express(ctx, ea);
    else if (s_const->parsed()) rc = cmd_constant(ctx, ka);
    else if (s_gauss->parsed()) rc = cmd_gauss(ctx, ga);
    else if (s_tables->parsed()) rc = cmd_tables(ctx, ta);
    if (cfg.cache_path) ctx.cache.save(*cfg.cache_path);
    return rc;
  } catch (const ResourceError& e) {
    err << "resource error: " << e.what() << "\n";
    return exit_resource;
  } catch (const ContractViolation& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    err << "failed: " << e.what() << "\n";
    return exit_failed;
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace etaq
