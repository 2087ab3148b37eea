#include "etaq/io.hpp"

#include <sstream>

namespace etaq {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t"), b = s.find_last_not_of(" \t");
  return a == std::string::npos ? "" : s.substr(a, b - a + 1);
}

long long to_ll(const std::string& s) {
  Int v = parse_int(s);
  if (!v.fits_slong_p()) throw UsageError("integer out of range: " + s);
  return v.get_si();
}

std::string verify_status_name(VerifyStatus s) {
  switch (s) {
    case VerifyStatus::verified: return "verified";
    case VerifyStatus::failed: return "failed";
    default: return "unverified";
  }
}

}  // namespace

Int parse_int(const std::string& raw) {
  std::string s = trim(raw);
  Int v;
  if (s.empty() || v.set_str(s[0] == '+' ? s.substr(1) : s, 10) != 0) throw UsageError("not an integer: '" + raw + "'");
  return v;
}

Rat parse_rat(const std::string& raw) {
  std::string s = trim(raw);
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(parse_int(s));
  Int d = parse_int(s.substr(slash + 1));
  if (d == 0) throw UsageError("zero denominator: '" + raw + "'");
  return make_rat(parse_int(s.substr(0, slash)), d);
}

EtaExponents parse_exponents(long long N, const std::string& s) {
  if (N <= 0) throw UsageError("level must be positive");
  std::map<long long, long long> e;
  for (const auto& item : split(s, ',')) {
    auto colon = item.find(':');
    if (colon == std::string::npos) throw UsageError("exponent entry must be n:r, got '" + item + "'");
    long long n = to_ll(item.substr(0, colon)), r = to_ll(item.substr(colon + 1));
    if (n <= 0 || N % n != 0) throw UsageError("exponent index " + std::to_string(n) + " does not divide N");
    e[n] += r;
  }
  return EtaExponents(N, e);
}

MatZ parse_matrix(const std::string& s) {
  auto parts = split(s, ',');
  if (parts.size() != 4) throw UsageError("matrix needs four comma-separated entries");
  return {parse_int(parts[0]), parse_int(parts[1]), parse_int(parts[2]), parse_int(parts[3])};
}

std::string rat_str(const Rat& q) { return q.get_str(); }

std::string factored(const Int& n, bool latex) {
  if (n == 0) return "0";
  std::string out = n < 0 ? "-" : "";
  Int a = abs(n);
  if (a == 1) return out + "1";
  bool first = true;
  for (const auto& [p, e] : factor(a)) {
    if (!first) out += latex ? " \\cdot " : "*";
    first = false;
    out += p.get_str();
    if (e > 1) out += latex ? "^{" + std::to_string(e) + "}" : "^" + std::to_string(e);
  }
  return out;
}

std::string factored(const Rat& q, bool latex) {
  if (q.get_den() == 1) return factored(q.get_num(), latex);
  std::string num = factored(q.get_num(), latex), den = factored(Int(q.get_den()), latex);
  if (latex) {
    bool neg = q < 0;
    return std::string(neg ? "-" : "") + "\\frac{" + (neg ? num.substr(1) : num) + "}{" + den + "}";
  }
  return "(" + num + ")/(" + den + ")";
}

std::string eta_product_text(const EtaExponents& e) {
  std::string out;
  for (const auto& [n, r] : e.exps) {
    if (!out.empty()) out += " ";
    out += "eta(" + (n == 1 ? std::string() : std::to_string(n)) + "tau)^" + std::to_string(r);
  }
  return out.empty() ? "1" : out;
}

std::string eta_product_latex(const EtaExponents& e) {
  std::string out;
  for (const auto& [n, r] : e.exps)
    out += "\\eta^{" + std::to_string(r) + "}(" + (n == 1 ? std::string() : std::to_string(n)) + "\\tau)";
  return out.empty() ? "1" : out;
}

std::string exps_tuple(const EtaExponents& e) {
  std::string out = "(";
  bool first = true;
  for (long long n : divisors(e.level)) {
    out += (first ? "" : ", ") + std::to_string(e.get(n));
    first = false;
  }
  return out + ")";
}

namespace {

struct LhsParts {
  Rat offset;
  Int arg0;
};

LhsParts lhs_parts(const ExpressProblem& pr) {
  EtaCache scratch;
  QExp24 f = F_series(pr, 0, scratch);
  Int nmin = (zint(f.offset24) - zint(pr.r) * zint(pr.ob ? pr.p : 1)) / 24;
  return {make_rat(zint(f.offset24), 24), pr.a0() + pr.p_beta() * nmin};
}

std::string q_power(const Rat& e, bool latex) {
  if (e == 0) return "";
  if (e == 1) return "q";
  return latex ? "q^{" + e.get_str() + "}" : "q^(" + e.get_str() + ")";
}

template <class Term>
std::string join_terms(const std::vector<std::pair<long long, Rat>>& terms, const ExpressProblem& pr, Term term) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [y, c] : terms) {
    std::string cs = term(c, pr.block(y));
    if (!first) out += cs[0] == '-' ? " - " + cs.substr(1) : " + " + cs;
    else out += cs;
    first = false;
  }
  return out;
}

}  // namespace

std::string identity_text(const Identity& id) {
  const auto& pr = id.problem;
  auto lhs = lhs_parts(pr);
  std::string q = q_power(lhs.offset, false);
  std::ostringstream os;
  os << (q.empty() ? "" : q + " * ") << "sum_{n>=0} P_" << pr.r << "(" << pr.p << "^" << pr.beta << " n + " << lhs.arg0
     << ") q^n = ";
  os << join_terms(id.terms, pr, [](const Rat& c, const EtaExponents& b) {
    std::string cs = factored(c, false);
    std::string prod = eta_product_text(b);
    if (cs == "1") return prod;
    if (cs == "-1") return "-" + prod;
    return cs + " * " + prod;
  });
  return os.str();
}

std::string identity_latex(const Identity& id) {
  const auto& pr = id.problem;
  auto lhs = lhs_parts(pr);
  std::ostringstream os;
  os << q_power(lhs.offset, true) << "\\sum_{n \\in \\mathbb{Z}_{\\geq 0}} P_{" << pr.r << "}\\left(" << pr.p << "^{"
     << pr.beta << "}n + " << lhs.arg0 << "\\right)q^n = ";
  os << join_terms(id.terms, pr, [](const Rat& c, const EtaExponents& b) {
    std::string cs = factored(c, true);
    std::string prod = eta_product_latex(b);
    if (cs == "1") return prod;
    if (cs == "-1") return "-" + prod;
    return cs + prod;
  });
  return os.str();
}

void to_json(nlohmann::json& j, const EtaExponents& e) {
  nlohmann::json ex = nlohmann::json::object();
  for (const auto& [n, r] : e.exps) ex[std::to_string(n)] = r;
  j = {{"level", e.level}, {"exps", ex}};
}

void from_json(const nlohmann::json& j, EtaExponents& e) {
  std::map<long long, long long> m;
  for (auto& [k, v] : j.at("exps").items()) m[std::stoll(k)] = v.get<long long>();
  e = EtaExponents(j.at("level").get<long long>(), m);
}

void to_json(nlohmann::json& j, const QExp24& f) {
  std::vector<std::string> c;
  for (const auto& q : f.coeffs) c.push_back(q.get_str());
  j = {{"offset24", f.offset24}, {"coeffs", c}};
}

void from_json(const nlohmann::json& j, QExp24& f) {
  f.offset24 = j.at("offset24").get<long long>();
  f.coeffs.clear();
  for (const auto& s : j.at("coeffs")) f.coeffs.push_back(parse_rat(s.get<std::string>()));
}

void to_json(nlohmann::json& j, const AdmissibleL& a) {
  j = {{"half_integral", a.half_integral}, {"residues", a.residues}, {"l0", a.l0}, {"m2_residues", a.m2_residues}};
}

void from_json(const nlohmann::json& j, AdmissibleL& a) {
  a.half_integral = j.at("half_integral").get<bool>();
  a.residues = j.at("residues").get<std::set<int>>();
  a.l0 = j.at("l0").get<long long>();
  a.m2_residues = j.at("m2_residues").get<std::set<int>>();
}

void to_json(nlohmann::json& j, const PairEntry& p) { j = {{"r", p.r}, {"rp", p.rp}, {"admissible", p.adm}}; }

void from_json(const nlohmann::json& j, PairEntry& p) {
  p.r = j.at("r").get<EtaExponents>();
  p.rp = j.at("rp").get<EtaExponents>();
  p.adm = j.at("admissible").get<AdmissibleL>();
}

void to_json(nlohmann::json& j, const NewmanReport& r) {
  j = {{"pass", r.pass}, {"checked", r.checked}, {"constant", r.constant.get_str()}};
  j["first_bad_n"] = r.first_bad_n ? nlohmann::json(*r.first_bad_n) : nlohmann::json(nullptr);
}

void from_json(const nlohmann::json& j, NewmanReport& r) {
  r.pass = j.at("pass").get<bool>();
  r.checked = j.at("checked").get<long long>();
  r.constant = parse_rat(j.at("constant").get<std::string>());
  r.first_bad_n.reset();
  if (!j.at("first_bad_n").is_null()) r.first_bad_n = j.at("first_bad_n").get<long long>();
}

void to_json(nlohmann::json& j, const ConstantResult& c) {
  j = {{"coeff", c.coeff.get_str()}, {"l_exponent", c.l_exponent.get_str()}, {"l", c.l},
       {"method", c.method},         {"terms_checked", c.terms_checked},    {"certified", c.certified}};
}

void from_json(const nlohmann::json& j, ConstantResult& c) {
  c.coeff = parse_rat(j.at("coeff").get<std::string>());
  c.l_exponent = parse_rat(j.at("l_exponent").get<std::string>());
  c.l = j.at("l").get<long long>();
  c.method = j.at("method").get<std::string>();
  c.terms_checked = j.at("terms_checked").get<long long>();
  c.certified = j.at("certified").get<bool>();
}

void to_json(nlohmann::json& j, const Identity& id) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [y, c] : id.terms)
    terms.push_back({{"y", y}, {"c_num", c.get_num().get_str()}, {"c_den", c.get_den().get_str()}});
  j = {{"r", id.problem.r},   {"p", id.problem.p},   {"beta", id.problem.beta},
       {"y0", id.y0},         {"y1", id.y1},         {"terms", terms},
       {"verified_to", id.verified_to}, {"status", verify_status_name(id.status)}};
}

void from_json(const nlohmann::json& j, Identity& id) {
  id.problem = ExpressProblem::make(j.at("r").get<long long>(), j.at("p").get<long long>(), j.at("beta").get<long long>());
  id.y0 = j.value("y0", 0LL);
  id.y1 = j.value("y1", 0LL);
  id.terms.clear();
  for (const auto& t : j.at("terms"))
    id.terms.emplace_back(t.at("y").get<long long>(),
                          make_rat(parse_int(t.at("c_num").get<std::string>()), parse_int(t.at("c_den").get<std::string>())));
  id.verified_to = j.at("verified_to").get<long long>();
  std::string st = j.value("status", "unverified");
  id.status = st == "verified" ? VerifyStatus::verified : st == "failed" ? VerifyStatus::failed : VerifyStatus::unverified;
}

}  // namespace etaq
