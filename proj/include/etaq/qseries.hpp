#pragma once

#include <cstddef>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "etaq/arith.hpp"
#include "etaq/characters.hpp"

namespace etaq {

// sum_{n < trunc} coeffs[n] q^{(offset24 + 24 n)/24} + O(q^{(offset24 + 24 trunc)/24})
struct QExp24 {
  long long offset24 = 0;
  std::vector<Rat> coeffs;

  size_t trunc() const { return coeffs.size(); }
  long long end24() const { return offset24 + 24 * static_cast<long long>(coeffs.size()); }
  // coefficient of q^{e24/24}; zero off-lattice or below offset, throws past truncation
  Rat at24(long long e24) const;
  bool is_zero() const;
  QExp24 normalized() const;
  QExp24 truncated(size_t terms) const;
  Rat leading() const;

  static QExp24 one(size_t terms) {
    QExp24 f;
    f.coeffs.assign(terms, Rat(0));
    if (terms) f.coeffs[0] = 1;
    return f;
  }
  static QExp24 from_ints(long long offset24, const std::vector<Int>& v);
};

QExp24 series_add(const QExp24& f, const QExp24& g);
QExp24 series_sub(const QExp24& f, const QExp24& g);
QExp24 series_scale(const QExp24& f, const Rat& c);
QExp24 series_mul(const QExp24& f, const QExp24& g);
QExp24 series_invert(const QExp24& f);
QExp24 series_pow(const QExp24& f, long long k);
// f(m tau)
QExp24 series_dilate(const QExp24& f, long long m);

// memoized P_r prefixes; optional term limit turns over-deep requests into ResourceError
class EtaCache {
 public:
  explicit EtaCache(size_t max_terms = 0) : max_terms_(max_terms) {}

  const std::vector<Int>& get(long long r, size_t nmax);
  Int coeff(long long r, const Rat& n);  // P_r(n), zero for non-integral or negative n
  void load(const std::string& path);
  void save(const std::string& path) const;
  size_t max_terms() const { return max_terms_; }
  const std::map<long long, std::vector<Int>>& entries() const { return table_; }

 private:
  size_t max_terms_;
  std::map<long long, std::vector<Int>> table_;
};

std::vector<Int> eta_power_coeffs(long long r, size_t nmax);
std::vector<Int> eta_power_coeffs_recursive(long long r, size_t nmax);

std::vector<Int> eta_quotient_ints(const EtaExponents& spec, size_t nmax);
QExp24 eta_quotient_series(const EtaExponents& spec, size_t nmax);

Rat ord_at_cusp(const EtaExponents& spec, long long c, long long d);
long long index_gamma0(long long N);

struct Cusp {
  long long a = 1, c = 1;  // the cusp a/c, c | N
  long long width = 1;
};
std::vector<Cusp> cusps_gamma0(long long N);

long long sturm_terms(long long N, const Rat& k);

// terms at infinity forcing G = 0 when ord_s(G) >= bound_s at every other cusp (valence bound)
long long certified_terms(long long N, const Rat& k, long long offset24, const std::vector<std::pair<Cusp, Rat>>& bounds);

bool series_equal_certified(const QExp24& f, const QExp24& g, size_t terms);

}  // namespace etaq
