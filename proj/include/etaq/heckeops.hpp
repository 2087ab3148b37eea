#pragma once

#include <functional>
#include <optional>

#include "etaq/characters.hpp"
#include "etaq/qseries.hpp"

namespace etaq {

// T_l from source to target character on Gamma0(N); construction checks compatibility
class OperatorSpec {
 public:
  OperatorSpec(long long N, long long l, Character source, Character target);

  long long level() const { return N_; }
  long long l() const { return l_; }
  Rat weight() const { return source_.r.weight(); }
  const Character& source() const { return source_; }
  const Character& target() const { return target_; }
  bool rad_case() const;  // rad(l) | rad(N)

 private:
  long long N_, l_;
  Character source_, target_;
};

// T_l f = l^{l_exponent} * series
struct TlResult {
  QExp24 series;
  long long l = 1;
  Rat l_exponent = 0;
};

TlResult tl_rad_case(const OperatorSpec& op, const QExp24& f);
// same operator summed over the coset representatives (1, b; 0, l), b in [shift, shift + l)
TlResult tl_rad_case_cosets(const OperatorSpec& op, const QExp24& f, long long shift);
// all representatives with gcd(a,b,d) = 1; numeric sums rounded back to rationals (experimental)
TlResult tl_general(const OperatorSpec& op, const QExp24& f);

// l^{r/4} T_l eta^r on SL2(Z); coefficient of q^{n/24} for n <= nmax
QExp24 tl_level1_etapower(long long r, long long l, long long nmax, EtaCache& cache);
// the same sum read off at q^{nprime/(24 l)}, before any vanishing is used
Rat tl_level1_coeff_fourier(long long r, long long l, long long nprime, EtaCache& cache);
// psi^r_{a,b} e(-r(bd+3d-3)/24) as an element of mu_24 times a sign
Mu24 level1_coset_factor(long long r, long long l, long long a, long long b);

Rat R_even(long long n, long long r, long long l, EtaCache& cache);
Rat R_odd(long long n, long long r, long long l, EtaCache& cache);
Rat R_odd_squarefree_root(long long n, long long r, long long l, EtaCache& cache);
Rat R_coeff(long long n, long long r, long long l, EtaCache& cache);

bool newman_admissible(long long r, long long l);

struct NewmanReport {
  bool pass = true;
  long long checked = 0;
  Rat constant = 0;  // R(r; r, l)
  std::optional<long long> first_bad_n;
};
NewmanReport newman_check(long long r, long long l, long long nmax, EtaCache& cache);

// cusp orders of f as a function of a reduced cusp num/den
using CuspOrder = std::function<Rat(long long num, long long den)>;
Rat tl_order_bound(const OperatorSpec& op, const CuspOrder& ord, long long a, long long c);
CuspOrder eta_cusp_orders(const EtaExponents& spec);

}  // namespace etaq
