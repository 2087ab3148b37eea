#include "etaq/characters.hpp"

#include <random>
#include <sstream>

namespace etaq {

EtaExponents::EtaExponents(long long N, std::map<long long, long long> e) : level(N) {
  if (N <= 0) throw std::invalid_argument("EtaExponents: level must be positive");
  for (const auto& [n, r] : e) {
    if (n <= 0 || N % n != 0) throw std::invalid_argument("EtaExponents: every key must divide the level");
    if (r != 0) exps[n] = r;
  }
}

long long EtaExponents::get(long long n) const {
  auto it = exps.find(n);
  return it == exps.end() ? 0 : it->second;
}

long long EtaExponents::total() const {
  long long s = 0;
  for (const auto& [n, r] : exps) s += r;
  return s;
}

long long EtaExponents::sum_n_rn() const {
  long long s = 0;
  for (const auto& [n, r] : exps) s += n * r;
  return s;
}

long long EtaExponents::sum_Nn_rn() const {
  long long s = 0;
  for (const auto& [n, r] : exps) s += (level / n) * r;
  return s;
}

std::string EtaExponents::str() const {
  std::ostringstream os;
  bool first = true;
  for (long long n : divisors(level)) {
    if (!first) os << ",";
    first = false;
    os << n << ":" << get(n);
  }
  return os.str();
}

bool EtaExponents::operator<(const EtaExponents& o) const {
  if (level != o.level) return level < o.level;
  for (long long n : divisors(level)) {
    if (get(n) != o.get(n)) return get(n) < o.get(n);
  }
  return false;
}

int RealDirichlet::value(const Int& d) const {
  Int g;
  Int NN(static_cast<long>(modulus));
  mpz_gcd(g.get_mpz_t(), NN.get_mpz_t(), d.get_mpz_t());
  if (g != 1) return 0;
  return kronecker(Int(static_cast<long>(disc)), d);
}

Mu24 Character::operator()(const MetaElem& x) const {
  Mu24 v = v_r(r, x);
  if (!chi.is_trivial()) v *= Mu24::sign(chi.value(x.mat.d));
  return v;
}

Mu24 v_eta(const MetaElem& x) {
  const MatZ& m = x.mat;
  if (m.det() != 1) throw std::invalid_argument("v_eta: determinant must be 1");
  Int e;
  int k;
  if (mpz_odd_p(m.c.get_mpz_t())) {
    k = kronecker(m.d, Int(abs(m.c)));
    e = (m.a + m.d - 3) * m.c - m.b * m.d * (m.c * m.c - 1);
  } else {
    k = kronecker(m.c, m.d);
    e = (m.a - 2 * m.d) * m.c - m.b * m.d * (m.c * m.c - 1) + 3 * m.d - 3;
  }
  Mu24 v = Mu24::from_int(e);
  if (k < 0) v *= Mu24(12);
  if (x.eps < 0) v *= Mu24(12);
  return v;
}

Mu24 v_r(const EtaExponents& spec, const MetaElem& x) {
  Int NN(static_cast<long>(spec.level));
  if (!in_gamma0(x.mat, NN)) throw std::invalid_argument("v_r: matrix is not in Gamma0(N)");
  Mu24 v;
  for (const auto& [n, r] : spec.exps) {
    MetaElem y{{x.mat.a, x.mat.b * zint(n), x.mat.c / zint(n), x.mat.d}, x.eps};
    v *= v_eta(y).pow(r);
  }
  return v;
}

Int delta_of(const EtaExponents& r, const EtaExponents& rp, long long l) {
  if (r.level != rp.level) throw std::invalid_argument("delta_of: level mismatch");
  if (r.total() != rp.total()) throw std::invalid_argument("delta_of: weight mismatch");
  Int d;
  mpz_ui_pow_ui(d.get_mpz_t(), static_cast<unsigned long>(l), static_cast<unsigned long>(std::llabs(r.total())));
  for (long long n : divisors(r.level))
    if ((r.get(n) - rp.get(n)) % 2 != 0) d *= zint(n);
  return d;
}

namespace {

long long sqfree_part_ll(long long v) {
  long long out = 1;
  for (long long p = 2; p * p <= v; ++p) {
    int e = 0;
    while (v % p == 0) {
      v /= p;
      ++e;
    }
    if (e & 1) out *= p;
  }
  return out * v;
}

// square-free kernel of delta = l^{2|k|} * prod n, computed without forming delta
long long delta_kernel(const EtaExponents& r, const EtaExponents& rp, long long l) {
  long long base = (std::llabs(r.total()) % 2) ? l : 1;
  long long prod = base;
  for (long long n : divisors(r.level))
    if ((r.get(n) - rp.get(n)) % 2 != 0) prod = sqfree_part_ll(prod) * n;
  return sqfree_part_ll(prod);
}

bool charcom4_residues(long long N, const RealDirichlet& chi, const RealDirichlet& chip, long long kernel, long long l,
                       long long period) {
  long long Nl = N * l;
  auto lhs = [&](long long d) { return chi.value(Int(static_cast<long>(d))) * chip.value(Int(static_cast<long>(d))); };
  if (lhs(-1) != 1) return false;  // (delta/-1) = 1 since delta > 0
  for (long long d = 1; d <= period; ++d) {
    if (gcd_ll(d, Nl) != 1) continue;
    if (lhs(d) != kronecker(kernel, d)) return false;
  }
  return true;
}

bool charcom4_algebraic(long long N, const RealDirichlet& chi, const RealDirichlet& chip, long long kernel, long long l) {
  // (D/d) = (kernel/d) on d coprime to Nl, D the product discriminant
  long long Nl = N * l;
  long long D = (chi.is_trivial() ? 1 : chi.disc) * (chip.is_trivial() ? 1 : chip.disc);
  if (D <= 0) return false;
  for (const auto& [p, e] : factor(Int(static_cast<long>(D))))
    if (Nl % p.get_si() != 0) return false;
  return squarefree_kernel(zint(D) * zint(kernel)) == 1;
}

}  // namespace

bool charcom4_exhaustive(long long N, const RealDirichlet& chi, const RealDirichlet& chip, const Int& delta, long long l) {
  long long kernel = squarefree_kernel(delta).get_si();
  long long period = lcm_ll(N * l, 4 * kernel);
  if (!chi.is_trivial()) period = lcm_ll(period, lcm_ll(chi.modulus, 4 * std::llabs(chi.disc)));
  if (!chip.is_trivial()) period = lcm_ll(period, lcm_ll(chip.modulus, 4 * std::llabs(chip.disc)));
  return charcom4_residues(N, chi, chip, kernel, l, period);
}

CompatDetail compatible_detail(long long N, const RealDirichlet& chi, const EtaExponents& r, const RealDirichlet& chip,
                               const EtaExponents& rp, long long l) {
  if (r.level != N || rp.level != N) throw std::invalid_argument("compatible_closed_form: level mismatch");
  if (r.total() != rp.total()) throw std::invalid_argument("compatible_closed_form: weight mismatch");
  if (l <= 0) throw std::invalid_argument("compatible_closed_form: l must be positive");
  auto mod24 = [](long long v) { return ((v % 24) + 24) % 24; };
  long long l24 = l % 24;
  CompatDetail c;
  c.cond1 = mod24(l24 * mod24(r.sum_Nn_rn())) == mod24(rp.sum_Nn_rn());
  c.cond2 = mod24(r.sum_n_rn()) == mod24(l24 * mod24(rp.sum_n_rn()));
  Int delta = delta_of(r, rp, l);
  c.cond3 = ((N * l) % 2 == 0) || (delta % 4 == 1);
  long long kernel = delta_kernel(r, rp, l);
  long long period = lcm_ll(N * l, 4 * kernel);
  if (!chi.is_trivial()) period = lcm_ll(period, lcm_ll(chi.modulus, 4 * std::llabs(chi.disc)));
  if (!chip.is_trivial()) period = lcm_ll(period, lcm_ll(chip.modulus, 4 * std::llabs(chip.disc)));
  if (chi.is_trivial() && chip.is_trivial())
    c.cond4 = kernel == 1;
  else if (period <= 4000000)
    c.cond4 = charcom4_residues(N, chi, chip, kernel, l, period);
  else
    c.cond4 = charcom4_algebraic(N, chi, chip, kernel, l);
  return c;
}

bool compatible_closed_form(long long N, const RealDirichlet& chi, const EtaExponents& r, const RealDirichlet& chip,
                            const EtaExponents& rp, long long l) {
  return compatible_detail(N, chi, r, chip, rp, l).all();
}

OracleVerdict compatible_sample_oracle(long long N, const CharEval& v1, const CharEval& v2, long long l, unsigned trials,
                                       std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<unsigned> len(1, 10);
  Int L(static_cast<long>(l));
  OracleVerdict out;
  for (unsigned t = 0; t < trials; ++t) {
    MatZ g;
    if (t == 0)
      g = MatZ::T();
    else if (t == 1)
      g = -MatZ::identity();
    else
      g = random_gamma0(N * l, len(gen), gen());
    MetaElem x{g, 1};
    MetaElem y{{g.a, g.b * L, g.c / L, g.d}, 1};
    ++out.trials_run;
    if (v1(x) != v2(y)) {
      out.counterexample = g;
      return out;
    }
  }
  return out;
}

EtaExponents fricke_transform(const EtaExponents& r) {
  std::map<long long, long long> e;
  for (const auto& [n, v] : r.exps) e[r.level / n] = v;
  return EtaExponents(r.level, e);
}

Mu24 v1v2_on_coset(long long N, const Character& v1, const Character& v2, long long l, const MatZ& rep) {
  if (!compatible_closed_form(N, v1.chi, v1.r, v2.chi, v2.r, l))
    throw ContractViolation("v1v2_on_coset: characters are not compatible");
  if (rep.c != 0 || rep.a * rep.d != zint(l)) throw std::invalid_argument("v1v2_on_coset: representative must be (a,b;0,d), ad = l");
  if (rep.a == 1) return v2(MetaElem{MatZ::T(), 1}).pow(-rep.b.get_si());
  Ab0dDecomposition dec = decompose_ab0d(rep.a, rep.b, rep.d, N, l);
  return v1(MetaElem{dec.gamma1, 1}).inverse() * v2(MetaElem{dec.gamma2, 1}).inverse();
}

}  // namespace etaq
