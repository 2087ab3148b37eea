#include "etaq/metaplectic.hpp"

#include <random>
#include <sstream>

#include "etaq/hpfloat.hpp"

namespace etaq {

std::string MatZ::str() const {
  std::ostringstream os;
  os << "(" << a << "," << b << ";" << c << "," << d << ")";
  return os.str();
}

namespace {

struct RatComplex {
  Rat re, im;
};

HpComplex to_hp(const RatComplex& z, mpfr_prec_t prec) {
  return {BigFloat::from(z.re, prec), BigFloat::from(z.im, prec)};
}

}  // namespace

int cocycle_sigma(const MatZ& A, const MatZ& B) {
  if (A.det() <= 0 || B.det() <= 0) throw std::invalid_argument("cocycle_sigma: determinants must be positive");
  // tau = 2i; every intermediate below is an exact Gaussian rational
  const Int& a2 = B.a;
  const Int& b2 = B.b;
  const Int& c2 = B.c;
  const Int& d2 = B.d;
  Int den = d2 * d2 + 4 * c2 * c2;
  RatComplex btau{make_rat(b2 * d2 + 4 * a2 * c2, den), make_rat(2 * a2 * d2 - 2 * b2 * c2, den)};
  RatComplex z1{A.c * btau.re + A.d, A.c * btau.im};
  RatComplex z2{Rat(d2), Rat(2 * c2)};
  MatZ AB = A * B;
  RatComplex z3{Rat(AB.d), Rat(2 * AB.c)};

  size_t bits = 0;
  for (const Int* v : {&A.a, &A.b, &A.c, &A.d, &B.a, &B.b, &B.c, &B.d})
    bits = std::max(bits, mpz_sizeinbase(v->get_mpz_t(), 2));
  mpfr_prec_t prec = static_cast<mpfr_prec_t>(std::max<size_t>(256, 4 * bits + 128));

  HpComplex delta = (to_hp(z1, prec).sqrt() * to_hp(z2, prec).sqrt()) / to_hp(z3, prec).sqrt();
  double re = delta.re.to_double();
  double im = delta.im.to_double();
  if (std::abs(std::abs(re) - 1.0) > 1e-12 || std::abs(im) > 1e-12)
    throw std::runtime_error("cocycle_sigma: evaluation did not round to a sign");
  return re > 0 ? 1 : -1;
}

MetaElem meta_compose(const MetaElem& x, const MetaElem& y) {
  return {x.mat * y.mat, x.eps * y.eps * cocycle_sigma(x.mat, y.mat)};
}

MetaElem meta_inverse(const MetaElem& x) {
  if (x.mat.det() != 1) throw std::invalid_argument("meta_inverse: only determinant-one matrices are supported");
  MatZ inv{x.mat.d, -x.mat.b, -x.mat.c, x.mat.a};
  return {inv, x.eps * cocycle_sigma(x.mat, inv)};
}

std::vector<MatZ> coset_reps_doubledecomp(long long l, long long N, long long m) {
  if (l <= 0 || N <= 0 || m <= 0) throw std::invalid_argument("coset_reps_doubledecomp: arguments must be positive");
  if (l % (m * m) != 0 || gcd_ll(N, m) != 1)
    throw std::invalid_argument("coset_reps_doubledecomp: need m^2 | l and gcd(N, m) = 1");
  std::vector<MatZ> out;
  for (long long a : divisors(l)) {
    if (gcd_ll(N, a) != 1) continue;
    long long d = l / a;
    for (long long b = 0; b < d; ++b)
      if (gcd_ll(gcd_ll(a, b), d) == m) out.push_back({zint(a), zint(b), 0, zint(d)});
  }
  return out;
}

Ab0dDecomposition decompose_ab0d(const Int& a, const Int& b, const Int& d, long long N, long long l) {
  if (a <= 0 || d <= 0 || a * d != zint(l) || b < 0 || b >= d)
    throw std::invalid_argument("decompose_ab0d: need ad = l and 0 <= b < d");
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
  Int gna;
  Int NN(static_cast<long>(N));
  mpz_gcd(gna.get_mpz_t(), NN.get_mpz_t(), a.get_mpz_t());
  if (g != 1 || gna != 1) throw std::invalid_argument("decompose_ab0d: need gcd(a,b,d) = 1 and gcd(N,a) = 1");

  Int Nd = NN * d;
  Int x = 0, u;
  for (;; ++x) {
    u = -NN * b + a * x;
    Int gg;
    mpz_gcd(gg.get_mpz_t(), Nd.get_mpz_t(), u.get_mpz_t());
    if (gg == 1) break;
    if (x > Nd + 1) throw std::logic_error("decompose_ab0d: no admissible x");
  }
  // u y + Nd z = 1, minimal |y|
  Int gg, y, z;
  mpz_gcdext(gg.get_mpz_t(), y.get_mpz_t(), z.get_mpz_t(), u.get_mpz_t(), Nd.get_mpz_t());
  if (gg < 0) {
    y = -y;
    z = -z;
  }
  Int step = Nd;
  Int cand = y % step;
  if (cand < 0) cand += step;
  if (2 * cand > step) cand -= step;
  z += (y - cand) * u / Nd;
  y = cand;
  if (u * y + Nd * z != 1) throw std::logic_error("decompose_ab0d: Bezout failure");

  Ab0dDecomposition out;
  out.gamma1 = {u, z, -Nd, y};
  out.alpha = {1, 0, 0, Int(static_cast<long>(l))};
  out.gamma2 = {a * y, b * y - d * z, NN, x};
  return out;
}

MatZ random_gamma0(long long N, unsigned word_length, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<int> pick(0, 1);
  std::uniform_int_distribution<int> expo(1, 3);
  std::uniform_int_distribution<int> sgn(0, 1);
  MatZ m = MatZ::identity();
  Int NN(static_cast<long>(N));
  for (unsigned i = 0; i < word_length; ++i) {
    int k = expo(gen) * (sgn(gen) ? 1 : -1);
    if (pick(gen))
      m = m * MatZ{1, k, 0, 1};
    else
      m = m * MatZ{1, 0, NN * k, 1};
  }
  return m;
}

bool in_gamma0(const MatZ& m, const Int& N) {
  return m.det() == 1 && mpz_divisible_p(m.c.get_mpz_t(), N.get_mpz_t());
}

}  // namespace etaq
