#pragma once

#include <mpfr.h>

#include <string>

#include "etaq/arith.hpp"

namespace etaq {

// RAII mpfr value; binary ops take the larger operand precision
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t prec = 256);
  BigFloat(const BigFloat& o);
  BigFloat(BigFloat&& o) noexcept;
  BigFloat& operator=(const BigFloat& o);
  BigFloat& operator=(BigFloat&& o) noexcept;
  ~BigFloat();

  static BigFloat from(const Int& v, mpfr_prec_t prec);
  static BigFloat from(const Rat& v, mpfr_prec_t prec);
  static BigFloat from(double v, mpfr_prec_t prec);

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

  BigFloat operator+(const BigFloat& o) const;
  BigFloat operator-(const BigFloat& o) const;
  BigFloat operator*(const BigFloat& o) const;
  BigFloat operator/(const BigFloat& o) const;
  BigFloat operator-() const;
  BigFloat& operator+=(const BigFloat& o);

  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  BigFloat abs() const;
  BigFloat sqrt() const;
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  Int round_to_int() const;
  std::string str(int digits = 30) const;

 private:
  mpfr_t v_;
};

struct HpComplex {
  BigFloat re, im;

  explicit HpComplex(mpfr_prec_t prec = 256) : re(prec), im(prec) {}
  HpComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}

  // e(x) = exp(2 pi i x)
  static HpComplex unit(const Rat& x, mpfr_prec_t prec);

  HpComplex operator+(const HpComplex& o) const { return {re + o.re, im + o.im}; }
  HpComplex operator-(const HpComplex& o) const { return {re - o.re, im - o.im}; }
  HpComplex operator*(const HpComplex& o) const;
  HpComplex operator/(const HpComplex& o) const;
  HpComplex scaled(const BigFloat& s) const { return {re * s, im * s}; }
  HpComplex& operator+=(const HpComplex& o);
  BigFloat abs() const;
  // principal branch, -pi/2 < arg <= pi/2; negative reals map to +i sqrt(|x|)
  HpComplex sqrt() const;
};

HpComplex gauss_value_numeric(const GaussValue& g, mpfr_prec_t prec);
HpComplex gauss_sum_bruteforce(const Int& m, const Int& t, mpfr_prec_t prec = 256);

}  // namespace etaq
