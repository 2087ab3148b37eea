#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace etaq {

using Int = mpz_class;
using Rat = mpq_class;

class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// e(exponent/24)
struct Mu24 {
  int exponent = 0;

  Mu24() = default;
  explicit Mu24(long long e) : exponent(static_cast<int>(((e % 24) + 24) % 24)) {}
  static Mu24 from_int(const Int& e);
  static Mu24 sign(int s) { return Mu24(s < 0 ? 12 : 0); }

  Mu24 operator*(Mu24 o) const { return Mu24(exponent + o.exponent); }
  Mu24& operator*=(Mu24 o) { return *this = *this * o; }
  Mu24 inverse() const { return Mu24(-exponent); }
  Mu24 pow(long long k) const { return Mu24((exponent * (k % 24)) % 24); }
  bool operator==(const Mu24&) const = default;
  bool is_real() const { return exponent == 0 || exponent == 12; }
};

struct GaussValue {
  Rat coeff = 0;
  Int sqrt_part = 1;
  int i_power = 0;

  void canonicalize();
  bool operator==(const GaussValue& o) const {
    return coeff == o.coeff && sqrt_part == o.sqrt_part && i_power == o.i_power;
  }
};

struct RadFamily {
  Int rad, radE, radO, radp, irad, iradp;
};

using Factorization = std::vector<std::pair<Int, unsigned>>;

// long long -> Int (mpz_class has no long long constructor)
inline Int zint(long long v) { return Int(static_cast<long>(v)); }

inline Rat make_rat(const Int& n, const Int& d) {
  Rat q(n, d);
  q.canonicalize();
  return q;
}

int kronecker(const Int& m, const Int& n);
int kronecker(long long m, long long n);

int moebius(long long n);
Int sigma_divisors(const Rat& k);
long long sigma_divisors(long long k);
std::vector<long long> sigma_table(long long nmax);

Factorization factor(Int n);
std::vector<long long> divisors(long long n);
long long gcd_ll(long long a, long long b);
long long lcm_ll(long long a, long long b);
bool is_square(const Int& n);
bool is_prime_ll(long long n);
Int squarefree_kernel(const Int& n);

RadFamily rad_family(const Int& m);

GaussValue gauss_sum_formula(const Int& m, const Int& t);

}  // namespace etaq
