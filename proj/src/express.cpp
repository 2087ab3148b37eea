#include "etaq/express.hpp"

#include <algorithm>
#include <stdexcept>

#include "etaq/heckeops.hpp"

namespace etaq {

namespace {

Int ipow(long long b, long long e) {
  Int out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(b), static_cast<unsigned long>(e));
  return out;
}

Int ceil_div(const Int& a, const Int& b) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int ceil_rat(const Rat& q) { return ceil_div(q.get_num(), q.get_den()); }

Int p_at(EtaCache& cache, long long r, const Int& m) {
  if (m < 0) return 0;
  return cache.get(r, m.get_ui())[m.get_ui()];
}

Rat y1_bound(const ExpressProblem& pr) {
  const long long p = pr.p, b = pr.beta, ob = pr.ob;
  Rat g24 = make_rat(zint(pr.g), 24);
  if (pr.r >= 0) {
    Rat num = Rat(ipow(p, b - ob) - 1);
    Rat den = Rat(ipow(p, b - 1) * zint(p - 1));
    return g24 * num / den * zint(pr.r);
  }
  Rat num = Rat(ipow(p, b + 1) - ipow(p, 1 - ob));
  return g24 * num / zint(p - 1) * zint(-pr.r);
}

// P_r argument for block index y (unscaled: y counts steps of p^beta)
Int arg_at(const ExpressProblem& pr, const Int& y) { return pr.a0() + pr.p_beta() * y; }

}  // namespace

ExpressProblem ExpressProblem::make(long long r, long long p, long long beta) {
  if (!is_prime_ll(p)) throw std::invalid_argument("express: p must be prime");
  if (beta < 1) throw std::invalid_argument("express: beta must be positive");
  if ((zint(r) * (zint(p) * zint(p) - 1)) % 24 != 0) throw std::invalid_argument("express: 24 must divide r(p^2 - 1)");
  ExpressProblem pr;
  pr.r = r;
  pr.p = p;
  pr.beta = beta;
  pr.ob = beta % 2;
  pr.g = gcd_ll(12, p - 1);
  pr.pi_p = (p - 1) / pr.g;
  return pr;
}

Int ExpressProblem::p_beta() const { return ipow(p, beta); }

Int ExpressProblem::a0() const {
  Int v = zint(r) * (ipow(p, beta + ob) - 1);
  if (v % 24 != 0) throw std::invalid_argument("express: 24 must divide r(p^2 - 1)");
  return v / 24;
}

long long ExpressProblem::block_Y(long long y) const {
  if ((24 * y) % g != 0) throw std::logic_error("block_Y: non-integral exponent");
  return 24 * y / g;
}

EtaExponents ExpressProblem::block(long long y) const {
  const long long Y = block_Y(y);
  if (ob == 1) return EtaExponents(p, {{1, -Y}, {p, r + Y}});
  return EtaExponents(p, {{1, r - Y}, {p, Y}});
}

QExp24 F_series(const ExpressProblem& prob, size_t terms, EtaCache& cache) {
  const Int pb = prob.p_beta(), a0 = prob.a0();
  const Int nmin = ceil_div(-a0, pb);
  QExp24 f;
  f.offset24 = Int(zint(prob.r) * ipow(prob.p, prob.ob) + 24 * nmin).get_si();
  f.coeffs.resize(terms);
  for (size_t i = 0; i < terms; ++i) f.coeffs[i] = p_at(cache, prob.r, a0 + pb * (nmin + zint(static_cast<long long>(i))));
  return f;
}

std::vector<Int> a_coeff(const ExpressProblem& prob, long long y, size_t nmax) {
  const long long Y = prob.block_Y(y), p = prob.p;
  const long long po = prob.ob ? p : 1;
  auto sig = sigma_table(static_cast<long long>(nmax));
  auto s = [&](long long k, long long m) -> Int { return k % m ? Int(0) : zint(sig[k / m]); };
  std::vector<Int> w(nmax + 1);
  for (size_t k = 1; k <= nmax; ++k) {
    long long kk = static_cast<long long>(k);
    w[k] = zint(prob.r * po) * s(kk, po) + zint(Y) * (zint(p) * s(kk, p) - zint(sig[kk]));
  }
  std::vector<Int> a(nmax + 1);
  a[0] = 1;
  for (size_t n = 1; n <= nmax; ++n) {
    Int acc = 0;
    for (size_t k = 1; k <= n; ++k) acc += w[k] * a[n - k];
    if (acc % zint(static_cast<long long>(n)) != 0) throw std::logic_error("a_coeff: non-integral recursion step");
    a[n] = -acc / zint(static_cast<long long>(n));
  }
  return a;
}

Thresholds thresholds(const ExpressProblem& prob, EtaCache& cache) {
  Thresholds t;
  t.y1_bound = y1_bound(prob);
  const Int step = zint(prob.pi_p);
  const Int ystart = ceil_div(-prob.a0(), prob.p_beta() * step);
  const Int yend = ceil_rat(t.y1_bound) + 24;
  for (Int y = ystart; y <= yend; ++y)
    if (p_at(cache, prob.r, arg_at(prob, y * step)) != 0) {
      t.y0 = y.get_si();
      break;
    }
  Rat lo = t.y1_bound;
  if (t.y0 && Rat(zint(*t.y0)) > lo) lo = zint(*t.y0);
  t.y1 = ceil_rat(lo).get_si();
  return t;
}

std::vector<Rat> c_coeffs(const ExpressProblem& prob, EtaCache& cache, std::optional<long long> ymax) {
  Thresholds t = thresholds(prob, cache);
  if (!t.y0) throw ContractViolation("c_coeffs: F vanishes on the search window");
  const long long y0 = *t.y0, top = ymax.value_or(t.y1);
  std::vector<Rat> c;
  std::vector<std::vector<Int>> blocks;
  const size_t depth = static_cast<size_t>(std::max<long long>(0, prob.pi_p * (top - y0)));
  for (long long y = y0; y <= top; ++y) {
    blocks.push_back(a_coeff(prob, y, depth));
    Rat v = p_at(cache, prob.r, arg_at(prob, zint(y * prob.pi_p)));
    for (long long yp = y0; yp < y; ++yp) v -= c[yp - y0] * blocks[yp - y0][prob.pi_p * (y - yp)];
    c.push_back(v);
  }
  return c;
}

ConditionReport check_condition(const ExpressProblem& prob, EtaCache& cache) {
  ConditionReport rep;
  Thresholds t = thresholds(prob, cache);
  const Int ystart = ceil_div(-prob.a0(), prob.p_beta());
  const Int yend = zint(prob.pi_p) * (ceil_rat(t.y1_bound) + 24);
  std::optional<Int> ymin;
  for (Int y = ystart; y <= yend; ++y)
    if (p_at(cache, prob.r, arg_at(prob, y)) != 0) {
      ymin = y;
      break;
    }
  if (!ymin) {
    rep.status = ConditionStatus::vacuous;
    rep.reason = "F vanishes on the search window";
    return rep;
  }
  if (*ymin % zint(prob.pi_p) != 0) {
    rep.status = ConditionStatus::fails;
    rep.witness = ymin->get_si();
    rep.reason = "smallest nonzero index is not a multiple of pi_p";
    return rep;
  }
  const long long y0 = *t.y0;
  auto c = c_coeffs(prob, cache);
  const long long nmax = prob.pi_p * (t.y1 - y0);
  std::vector<std::vector<Int>> blocks;
  for (long long y = y0; y <= t.y1; ++y) blocks.push_back(a_coeff(prob, y, static_cast<size_t>(nmax)));
  for (long long n = 0; n <= nmax; ++n) {
    Rat lhs = p_at(cache, prob.r, arg_at(prob, zint(prob.pi_p * y0 + n)));
    Rat rhs = 0;
    for (long long y = y0; prob.pi_p * (y - y0) <= n; ++y) rhs += c[y - y0] * blocks[y - y0][n - prob.pi_p * (y - y0)];
    if (lhs != rhs) {
      rep.status = ConditionStatus::fails;
      rep.witness = n;
      rep.reason = "coefficient equation fails";
      return rep;
    }
  }
  rep.status = ConditionStatus::holds;
  return rep;
}

Identity build_identity(const ExpressProblem& prob, EtaCache& cache) {
  auto rep = check_condition(prob, cache);
  if (rep.status != ConditionStatus::holds) throw ContractViolation("build_identity: condition does not hold (" + rep.reason + ")");
  Thresholds t = thresholds(prob, cache);
  Identity id;
  id.problem = prob;
  id.y0 = *t.y0;
  id.y1 = t.y1;
  auto c = c_coeffs(prob, cache);
  for (long long y = id.y0; y <= id.y1; ++y)
    if (c[y - id.y0] != 0) id.terms.emplace_back(y, c[y - id.y0]);
  return id;
}

namespace {

// lowest exponent (in 24ths) where either side can be nonzero
long long identity_start(const Identity& id, const QExp24& F) {
  long long s = F.offset24;
  for (const auto& [y, c] : id.terms) s = std::min(s, id.problem.block(y).sum_n_rn());
  return s;
}

Rat cusp_one_bound(const Identity& id) {
  const auto& pr = id.problem;
  EtaExponents src(pr.p, {{1, pr.r}});
  Character v1{RealDirichlet::trivial(pr.p), src}, v2{RealDirichlet::trivial(pr.p), pr.block(0)};
  OperatorSpec op(pr.p, pr.p_beta().get_si(), v1, v2);
  Rat b = tl_order_bound(op, eta_cusp_orders(src), 1, 1);
  for (const auto& [y, c] : id.terms) b = std::min(b, ord_at_cusp(pr.block(y), 1, 1));
  return b;
}

long long budget_from(const Identity& id, long long start) {
  const auto& pr = id.problem;
  Cusp one{1, 1, pr.p};
  return certified_terms(pr.p, make_rat(zint(pr.r), 2), start, {{one, cusp_one_bound(id)}}) + 5;
}

}  // namespace

long long identity_budget(const Identity& id) {
  EtaCache scratch;
  QExp24 F = F_series(id.problem, 1, scratch);
  return budget_from(id, identity_start(id, F));
}

bool verify_identity(Identity& id, long long extra, EtaCache& cache) {
  const auto& pr = id.problem;
  QExp24 F0 = F_series(pr, 1, cache);
  const long long start = identity_start(id, F0);
  const long long terms = budget_from(id, start) + std::max<long long>(0, extra);
  const long long end = start + 24 * terms;
  QExp24 F = F_series(pr, static_cast<size_t>(std::max<long long>(0, (end - F0.offset24) / 24 + 1)), cache);
  QExp24 rhs;
  rhs.offset24 = start;
  rhs.coeffs.assign(static_cast<size_t>(terms), Rat(0));
  for (const auto& [y, c] : id.terms) {
    EtaExponents b = pr.block(y);
    QExp24 s = eta_quotient_series(b, static_cast<size_t>(std::max<long long>(0, (end - b.sum_n_rn()) / 24 + 1)));
    for (long long e = std::max(start, s.offset24); e < end; e += 24) rhs.coeffs[(e - start) / 24] += c * s.at24(e);
  }
  bool ok = true;
  for (long long e = start; e < end && ok; e += 24)
    if (F.at24(e) != rhs.coeffs[(e - start) / 24]) ok = false;
  id.verified_to = ok ? terms : 0;
  id.status = ok ? VerifyStatus::verified : VerifyStatus::failed;
  return ok;
}

}  // namespace etaq
