#include "etaq/hpfloat.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace etaq {

BigFloat::BigFloat(mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(const BigFloat& o) {
  mpfr_init2(v_, o.prec());
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
  if (this != &o) {
    mpfr_set_prec(v_, o.prec());
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::from(const Int& v, mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_set_z(r.v_, v.get_mpz_t(), MPFR_RNDN);
  return r;
}

BigFloat BigFloat::from(const Rat& v, mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_set_q(r.v_, v.get_mpq_t(), MPFR_RNDN);
  return r;
}

BigFloat BigFloat::from(double v, mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_set_d(r.v_, v, MPFR_RNDN);
  return r;
}

#define ETAQ_BINOP(op, fn)                                         \
  BigFloat BigFloat::operator op(const BigFloat& o) const {        \
    BigFloat r(std::max(prec(), o.prec()));                        \
    fn(r.v_, v_, o.v_, MPFR_RNDN);                                 \
    return r;                                                      \
  }
ETAQ_BINOP(+, mpfr_add)
ETAQ_BINOP(-, mpfr_sub)
ETAQ_BINOP(*, mpfr_mul)
ETAQ_BINOP(/, mpfr_div)
#undef ETAQ_BINOP

BigFloat BigFloat::operator-() const {
  BigFloat r(prec());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat& BigFloat::operator+=(const BigFloat& o) {
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigFloat BigFloat::abs() const {
  BigFloat r(prec());
  mpfr_abs(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::sqrt() const {
  BigFloat r(prec());
  mpfr_sqrt(r.v_, v_, MPFR_RNDN);
  return r;
}

Int BigFloat::round_to_int() const {
  Int z;
  mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDN);
  return z;
}

std::string BigFloat::str(int digits) const {
  std::vector<char> buf(static_cast<size_t>(digits) + 64);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, v_);
  return buf.data();
}

HpComplex HpComplex::unit(const Rat& x, mpfr_prec_t prec) {
  // reduce to [0,1) exactly before scaling by 2 pi
  Int fl;
  mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  Rat frac = x - Rat(fl);
  BigFloat t = BigFloat::from(frac, prec);
  BigFloat pi(prec);
  mpfr_const_pi(pi.get(), MPFR_RNDN);
  BigFloat ang = t * pi * BigFloat::from(2.0, prec);
  HpComplex z(prec);
  mpfr_sin_cos(z.im.get(), z.re.get(), ang.get(), MPFR_RNDN);
  return z;
}

HpComplex HpComplex::operator*(const HpComplex& o) const {
  return {re * o.re - im * o.im, re * o.im + im * o.re};
}

HpComplex HpComplex::operator/(const HpComplex& o) const {
  BigFloat den = o.re * o.re + o.im * o.im;
  return {(re * o.re + im * o.im) / den, (im * o.re - re * o.im) / den};
}

HpComplex& HpComplex::operator+=(const HpComplex& o) {
  re += o.re;
  im += o.im;
  return *this;
}

BigFloat HpComplex::abs() const { return (re * re + im * im).sqrt(); }

HpComplex HpComplex::sqrt() const {
  mpfr_prec_t p = std::max(re.prec(), im.prec());
  if (im.is_zero()) {
    if (re.sign() >= 0) return {re.sqrt(), BigFloat(p)};
    return {BigFloat(p), (-re).sqrt()};
  }
  BigFloat m = abs();
  BigFloat half = BigFloat::from(0.5, p);
  BigFloat x = ((m + re) * half).sqrt();
  BigFloat y = ((m - re) * half).sqrt();
  if (im.sign() < 0) y = -y;
  return {x, y};
}

HpComplex gauss_value_numeric(const GaussValue& g, mpfr_prec_t prec) {
  BigFloat mag = BigFloat::from(g.coeff, prec) * BigFloat::from(g.sqrt_part, prec).sqrt();
  BigFloat zero(prec);
  switch (g.i_power) {
    case 0: return {mag, zero};
    case 1: return {zero, mag};
    case 2: return {-mag, zero};
    default: return {zero, -mag};
  }
}

HpComplex gauss_sum_bruteforce(const Int& m, const Int& t, mpfr_prec_t prec) {
  if (m <= 0 || mpz_even_p(m.get_mpz_t())) throw std::invalid_argument("gauss_sum_bruteforce: m must be odd and positive");
  HpComplex s(prec);
  Int tm = t % m;
  if (tm < 0) tm += m;
  for (Int b = 0; b < m; ++b) {
    int k = kronecker(b, m);
    if (k == 0) continue;
    HpComplex z = HpComplex::unit(make_rat(Int((tm * b) % m), m), prec);
    if (k > 0)
      s += z;
    else
      s = s - z;
  }
  return s;
}

}  // namespace etaq
