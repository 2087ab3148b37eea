#include "etaq/heckeops.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "etaq/hpfloat.hpp"

namespace etaq {

namespace {

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

long long mod24(long long x) { return ((x % 24) + 24) % 24; }

// smallest e >= lo with e = cls (mod 24)
long long first_in_class(long long lo, long long cls) { return lo + mod24(cls - lo); }

Rat rat_pow(long long a, long long e) {
  Int p;
  mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(e < 0 ? -e : e));
  return e < 0 ? make_rat(1, p) : Rat(p);
}

Int int_pow(long long a, unsigned long e) {
  Int p;
  mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(a), e);
  return p;
}

long long isqrt_exact(long long v) {
  long long s = static_cast<long long>(std::llround(std::sqrt(static_cast<long double>(v))));
  while (s * s > v) --s;
  while ((s + 1) * (s + 1) <= v) ++s;
  return s;
}

bool is_square_ll(long long v) {
  if (v < 0) return false;
  long long s = isqrt_exact(v);
  return s * s == v;
}

// P_r(m/24) when 24 | m and m >= 0, else 0
Int p_at(EtaCache& cache, long long r, long long m) {
  if (m < 0 || m % 24 != 0) return 0;
  return cache.get(r, static_cast<size_t>(m / 24))[static_cast<size_t>(m / 24)];
}

size_t bits_of(const Int& v) { return v == 0 ? 1 : mpz_sizeinbase(v.get_mpz_t(), 2); }

// round a numeric value known to be m / D; throws when it is not close to such a value
Rat round_rational(const HpComplex& z, const Int& D, const char* where) {
  BigFloat scaled = z.re * BigFloat::from(D, z.re.prec());
  Int m = scaled.round_to_int();
  BigFloat err = (scaled - BigFloat::from(m, z.re.prec())).abs();
  BigFloat imag = (z.im * BigFloat::from(D, z.re.prec())).abs();
  if (err.to_double() > 1e-6 || imag.to_double() > 1e-6)
    throw std::runtime_error(std::string(where) + ": numeric sum is not a rational with the expected denominator");
  return make_rat(m, D);
}

void check_guard(long long r, long long l) {
  for (long long d : divisors(l)) {
    Int v = zint(r) * (zint(d) * zint(d) - 1);
    if (v % 24 != 0) throw std::logic_error("eta power coefficients: 24 does not divide r(d^2 - 1)");
  }
}

}  // namespace

OperatorSpec::OperatorSpec(long long N, long long l, Character source, Character target)
    : N_(N), l_(l), source_(std::move(source)), target_(std::move(target)) {
  if (N <= 0 || l <= 0) throw std::invalid_argument("OperatorSpec: N and l must be positive");
  if (source_.r.level != N || target_.r.level != N)
    throw std::invalid_argument("OperatorSpec: exponent vectors must have level N");
  if (source_.r.total() != target_.r.total()) throw std::invalid_argument("OperatorSpec: weights differ");
  if (!compatible_closed_form(N, source_.chi, source_.r, target_.chi, target_.r, l))
    throw ContractViolation("OperatorSpec: characters are not compatible for l = " + std::to_string(l));
}

bool OperatorSpec::rad_case() const {
  for (const auto& [p, e] : factor(zint(l_))) {
    (void)e;
    if (zint(N_) % p != 0) return false;
  }
  return true;
}

TlResult tl_rad_case(const OperatorSpec& op, const QExp24& f) {
  if (!op.rad_case()) throw ContractViolation("tl_rad_case: rad(l) must divide rad(N)");
  const long long l = op.l();
  if (mod24(f.offset24 - op.source().r.sum_n_rn()) != 0)
    throw ContractViolation("tl_rad_case: series exponents do not match the source character");
  const long long s2 = op.target().r.sum_n_rn();
  TlResult out;
  out.l = l;
  out.l_exponent = 1 - op.weight() / 2;
  long long start = first_in_class(-floor_div(-f.offset24, l), s2);
  out.series.offset24 = start;
  for (long long e = start; e * l < f.end24(); e += 24) out.series.coeffs.push_back(f.at24(e * l));
  return out;
}

TlResult tl_rad_case_cosets(const OperatorSpec& op, const QExp24& f, long long shift) {
  if (!op.rad_case()) throw ContractViolation("tl_rad_case_cosets: rad(l) must divide rad(N)");
  const long long l = op.l();
  const long long s2 = op.target().r.sum_n_rn();
  std::vector<Mu24> u;
  for (long long b = shift; b < shift + l; ++b)
    u.push_back(v1v2_on_coset(op.level(), op.source(), op.target(), l, MatZ{1, zint(b), 0, zint(l)}));
  const mpfr_prec_t prec = 128;
  TlResult out;
  out.l = l;
  out.l_exponent = 1 - op.weight() / 2;
  long long start = first_in_class(-floor_div(-f.offset24, l), s2);
  out.series.offset24 = start;
  // output exponents off the class of s2 must cancel too
  for (long long e = -floor_div(-f.offset24, l); e * l < f.end24(); ++e) {
    Rat c = f.at24(e * l);
    if (c == 0) {
      if (mod24(e - s2) == 0) out.series.coeffs.push_back(0);
      continue;
    }
    HpComplex s(prec);
    for (long long i = 0; i < l; ++i) {
      long long b = shift + i;
      Rat x = make_rat(zint(u[i].exponent * l + e * l * b), zint(24 * l));
      s += HpComplex::unit(x, prec);
    }
    Rat m = round_rational(s, 1, "tl_rad_case_cosets");
    Rat v = c * m / zint(l);
    if (mod24(e - s2) == 0) {
      out.series.coeffs.push_back(v);
    } else if (v != 0) {
      throw std::runtime_error("tl_rad_case_cosets: exponent outside the target class survived");
    }
  }
  // exponents of f that are not multiples of l contribute nothing after summing over b
  for (long long E = f.offset24; E < f.end24(); E += 24) {
    if (E % l == 0) continue;
    Rat c = f.at24(E);
    if (c == 0) continue;
    HpComplex s(prec);
    for (long long i = 0; i < l; ++i) {
      long long b = shift + i;
      s += HpComplex::unit(make_rat(zint(u[i].exponent * l + E * b), zint(24 * l)), prec);
    }
    if (s.abs().to_double() > 1e-20) throw std::runtime_error("tl_rad_case_cosets: fractional exponent survived");
  }
  return out;
}

TlResult tl_general(const OperatorSpec& op, const QExp24& f) {
  const long long l = op.l(), N = op.level();
  const Rat k = op.weight();
  if (mod24(f.offset24 - op.source().r.sum_n_rn()) != 0)
    throw ContractViolation("tl_general: series exponents do not match the source character");
  const long long s2 = op.target().r.sum_n_rn();
  const bool half = k.get_den() != 1;
  const long long kfloor = [&] {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), k.get_num_mpz_t(), k.get_den_mpz_t());
    return q.get_si();
  }();

  struct Block {
    long long a, d;
    std::vector<std::pair<long long, Mu24>> bs;
  };
  std::vector<Block> blocks;
  for (long long a : divisors(l)) {
    if (a == 1 || gcd_ll(N, a) != 1) continue;
    Block blk{a, l / a, {}};
    for (long long b = 0; b < blk.d; ++b)
      if (gcd_ll(gcd_ll(a, b), blk.d) == 1)
        blk.bs.emplace_back(b, v1v2_on_coset(N, op.source(), op.target(), l, MatZ{zint(a), zint(b), 0, zint(blk.d)}));
    blocks.push_back(std::move(blk));
  }

  Int den = 1;
  size_t maxbits = 1;
  for (const Rat& c : f.coeffs) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    maxbits = std::max(maxbits, bits_of(c.get_num()));
  }
  if (kfloor < 0) den *= int_pow(l, static_cast<unsigned long>(-kfloor + 1));
  const mpfr_prec_t prec = static_cast<mpfr_prec_t>(maxbits + 2 * bits_of(den) +
                                                     static_cast<size_t>(std::abs(kfloor) + 2) * bits_of(zint(l)) + 128);

  TlResult out;
  out.l = l;
  out.l_exponent = -k / 2;
  long long lo = -floor_div(-f.offset24, l);
  for (const auto& blk : blocks) lo = std::min(lo, -floor_div(-f.offset24 * blk.a, blk.d));
  long long start = first_in_class(lo, s2);
  out.series.offset24 = start;
  for (long long e = start; e * l < f.end24(); e += 24) {
    Rat exact = Rat(zint(l)) * f.at24(e * l);
    HpComplex acc(prec);
    bool any = false;
    for (const auto& blk : blocks) {
      if ((e * blk.d) % blk.a != 0) continue;
      long long E = e * blk.d / blk.a;
      Rat c = f.at24(E);
      if (c == 0) continue;
      HpComplex s(prec);
      for (const auto& [b, u] : blk.bs)
        s += HpComplex::unit(make_rat(zint(u.exponent) * zint(blk.d) + zint(E) * zint(b), zint(24 * blk.d)), prec);
      BigFloat ak = BigFloat::from(rat_pow(blk.a, kfloor), prec);
      if (half) ak = ak * BigFloat::from(zint(blk.a), prec).sqrt();
      acc += s.scaled(ak * BigFloat::from(c, prec));
      any = true;
    }
    if (any) exact += round_rational(acc, den, "tl_general");
    out.series.coeffs.push_back(exact);
  }
  return out;
}

Mu24 level1_coset_factor(long long r, long long l, long long a, long long b) {
  long long d = l / a;
  Mu24 v(-(r % 24) * mod24(b * d + 3 * d - 3));
  if (r % 2 != 0) v *= Mu24::sign(kronecker(-b, gcd_ll(a, d)));
  return v;
}

bool newman_admissible(long long r, long long l) {
  if (l <= 0) return false;
  if ((zint(r) * zint(l - 1)) % 24 != 0) return false;
  if (r % 2 != 0 && !is_square_ll(l)) return false;
  return true;
}

Rat tl_level1_coeff_fourier(long long r, long long l, long long nprime, EtaCache& cache) {
  if (!newman_admissible(r, l)) throw std::invalid_argument("tl_level1: need 24 | r(l-1), and l square for odd r");
  struct Term {
    long long a, d;
    Int P;
  };
  std::vector<Term> terms;
  size_t bits = 1;
  for (long long a : divisors(l)) {
    if (nprime % (a * a) != 0) continue;
    Int P = p_at(cache, r, nprime / (a * a) - r);
    if (P == 0) continue;
    bits = std::max(bits, bits_of(P));
    terms.push_back({a, l / a, P});
  }
  if (terms.empty()) return 0;
  const long long rabs = r < 0 ? -r : r;
  const mpfr_prec_t prec =
      static_cast<mpfr_prec_t>(bits + static_cast<size_t>(rabs / 2 + 4) * bits_of(zint(l)) + 128);
  HpComplex acc(prec);
  for (const auto& t : terms) {
    // inner sum over b with e(b x), x = (n' - r l^2)/(24 a l), stepped by repeated multiplication
    Rat x = make_rat(zint(nprime) - zint(r) * zint(l) * zint(l), zint(24 * t.a * l));
    HpComplex step = HpComplex::unit(x, prec);
    HpComplex cur = HpComplex::unit(0, prec);
    HpComplex inner(prec);
    long long g = gcd_ll(t.a, t.d);
    for (long long b = 0; b < t.d; ++b) {
      if (gcd_ll(g, b) == 1) {
        int psi = (r % 2 != 0) ? kronecker(-b, g) : 1;
        if (psi > 0)
          inner += cur;
        else if (psi < 0)
          inner = inner - cur;
      }
      cur = cur * step;
    }
    HpComplex pre = HpComplex::unit(make_rat(zint(-r * (t.d - 1)), 8), prec);
    BigFloat ap = BigFloat::from(rat_pow(t.a, floor_div(r, 2)), prec);
    if (r % 2 != 0) ap = ap * BigFloat::from(zint(t.a), prec).sqrt();
    acc += (pre * inner).scaled(ap * BigFloat::from(t.P, prec));
  }
  Int D = r >= 0 ? zint(l) : int_pow(l, static_cast<unsigned long>((rabs + 1) / 2 + 1));
  return round_rational(acc, D, "tl_level1");
}

QExp24 tl_level1_etapower(long long r, long long l, long long nmax, EtaCache& cache) {
  if (!newman_admissible(r, l)) throw std::invalid_argument("tl_level1: need 24 | r(l-1), and l square for odd r");
  long long lo = r >= 0 ? -floor_div(-r, l) : r * l;
  QExp24 out;
  out.offset24 = first_in_class(lo, r);
  for (long long n = out.offset24; n <= nmax; n += 24) out.coeffs.push_back(tl_level1_coeff_fourier(r, l, l * n, cache));
  return out;
}

Rat R_even(long long n, long long r, long long l, EtaCache& cache) {
  if (r % 2 != 0) throw std::invalid_argument("R_even: r must be even");
  if (!newman_admissible(r, l)) throw std::invalid_argument("R_even: need 24 | r(l-1)");
  check_guard(r, l);
  Rat total = 0;
  for (long long a : divisors(l)) {
    long long d = l / a;
    if ((n * l) % (a * a) != 0) continue;
    Int P = p_at(cache, r, n * l / (a * a) - r);
    if (P == 0) continue;
    long long sgn_exp = r * (d - 1);
    if (sgn_exp % 4 != 0) throw std::logic_error("R_even: r(d-1)/4 is not an integer");
    int sign = ((sgn_exp / 4) % 2 == 0) ? 1 : -1;
    long long need = 24 * a / gcd_ll(24 * a, n - r * l);
    long long g = gcd_ll(a, d);
    long long tsum = 0;
    for (long long t : divisors(g))
      if (t % need == 0) tsum += moebius(t) * (d / t);
    if (tsum == 0) continue;
    total += rat_pow(a, r / 2) * sign * zint(tsum) * P;
  }
  return total;
}

namespace {

Rat r_odd_impl(long long n, long long r, long long l, EtaCache& cache, bool squarefree_root) {
  if (r % 2 == 0) throw std::invalid_argument("R_odd: r must be odd");
  if (!newman_admissible(r, l)) throw std::invalid_argument("R_odd: need l square and 24 | r(l-1)");
  check_guard(r, l);
  Rat total = 0;
  const long long s = (r - 1) / 2;
  const int two_sign = (s % 2 == 0) ? 2 : -2;
  for (long long a : divisors(l)) {
    long long d = l / a;
    if ((n * l) % (a * a) != 0) continue;
    Int P = p_at(cache, r, n * l / (a * a) - r);
    if (P == 0) continue;
    RadFamily rf = rad_family(zint(gcd_ll(a, d)));
    Int X = rf.rad * (zint(n) - zint(r) * zint(l));
    if (X % zint(24 * a) != 0) continue;
    Int t = X / zint(24 * a);
    long long radO = rf.radO.get_si(), radE = rf.radE.get_si();
    if (a % radO != 0 || !is_square_ll(a / radO)) throw std::logic_error("R_odd: a / radO(a,d) is not a square");
    // a^{r/2} / sqrt(radp) = a^{(r-1)/2} sqrt(a / radO) / radE
    Rat mag = rat_pow(a, s) * zint(isqrt_exact(a / radO)) / zint(radE);
    int k = kronecker(zint(two_sign), zint(d)) * kronecker(t, rf.radO);
    if (squarefree_root) {
      if (radE != 1) throw std::logic_error("R_odd: radE must be 1 when l is the square of a square-free number");
    } else {
      k *= kronecker(rf.radE, rf.radO);
    }
    if (k == 0) continue;
    Int prod = 1;
    if (!squarefree_root)
      for (const auto& [p, e] : factor(rf.radE)) {
        (void)e;
        int kp = kronecker(t, p);
        prod *= p - 1 - p * kp * kp;
      }
    total += Rat(zint(k) * zint(d)) * mag * prod * P;
  }
  return total;
}

}  // namespace

Rat R_odd(long long n, long long r, long long l, EtaCache& cache) { return r_odd_impl(n, r, l, cache, false); }

Rat R_odd_squarefree_root(long long n, long long r, long long l, EtaCache& cache) {
  long long s = isqrt_exact(l);
  if (s * s != l || squarefree_kernel(zint(s)) != zint(s))
    throw std::invalid_argument("R_odd_squarefree_root: l must be the square of a square-free number");
  return r_odd_impl(n, r, l, cache, true);
}

Rat R_coeff(long long n, long long r, long long l, EtaCache& cache) {
  return r % 2 == 0 ? R_even(n, r, l, cache) : R_odd(n, r, l, cache);
}

NewmanReport newman_check(long long r, long long l, long long nmax, EtaCache& cache) {
  NewmanReport rep;
  rep.constant = R_coeff(r, r, l, cache);
  for (long long n = std::min<long long>(0, r); n <= nmax; ++n) {
    Rat lhs = R_coeff(n, r, l, cache);
    Rat rhs = rep.constant * p_at(cache, r, n - r);
    ++rep.checked;
    if (lhs != rhs) {
      rep.pass = false;
      rep.first_bad_n = n;
      break;
    }
  }
  return rep;
}

Rat tl_order_bound(const OperatorSpec& op, const CuspOrder& ord, long long a, long long c) {
  if (!op.rad_case()) throw ContractViolation("tl_order_bound: rad(l) must divide rad(N)");
  if (c <= 0 || gcd_ll(a, c) != 1) throw std::invalid_argument("tl_order_bound: need c > 0 and gcd(a, c) = 1");
  const long long l = op.l();
  std::optional<Rat> best;
  for (long long lam = 0; lam < l; ++lam) {
    long long num = a + c * lam, den = c * l;
    long long g = gcd_ll(num < 0 ? -num : num, den);
    Rat v = Rat(zint(g * g), zint(l)) * ord(num / g, den / g);
    v.canonicalize();
    if (!best || v < *best) best = v;
  }
  return *best;
}

CuspOrder eta_cusp_orders(const EtaExponents& spec) {
  return [spec](long long, long long den) { return ord_at_cusp(spec, den, 1); };
}

}  // namespace etaq
