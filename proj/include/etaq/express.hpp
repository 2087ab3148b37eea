#pragma once

#include <optional>
#include <string>
#include <vector>

#include "etaq/characters.hpp"
#include "etaq/qseries.hpp"

namespace etaq {

struct ExpressProblem {
  long long r = 0, p = 5, beta = 1;
  long long ob = 1;    // 1 for odd beta
  long long g = 4;     // gcd(12, p - 1)
  long long pi_p = 1;  // (p - 1) / g

  // throws unless p is prime, beta >= 1 and 24 | r(p^2 - 1)
  static ExpressProblem make(long long r, long long p, long long beta);
  Int p_beta() const;
  Int a0() const;                       // r (p^{beta+ob} - 1) / 24
  long long block_Y(long long y) const;  // 24 y / g
  EtaExponents block(long long y) const;  // eta^r(p^ob tau) (eta(p tau)/eta(tau))^{24y/g}
};

QExp24 F_series(const ExpressProblem& prob, size_t terms, EtaCache& cache);
std::vector<Int> a_coeff(const ExpressProblem& prob, long long y, size_t nmax);

struct Thresholds {
  std::optional<long long> y0;
  long long y1 = 0;
  Rat y1_bound = 0;
};
Thresholds thresholds(const ExpressProblem& prob, EtaCache& cache);

// c_{y0}, ..., c_{ymax}; ymax defaults to y1
std::vector<Rat> c_coeffs(const ExpressProblem& prob, EtaCache& cache, std::optional<long long> ymax = std::nullopt);

enum class ConditionStatus { holds, fails, vacuous };
struct ConditionReport {
  ConditionStatus status = ConditionStatus::vacuous;
  std::optional<long long> witness;  // failing n, or the offending smallest y
  std::string reason;
};
ConditionReport check_condition(const ExpressProblem& prob, EtaCache& cache);

enum class VerifyStatus { unverified, verified, failed };

struct Identity {
  ExpressProblem problem;
  std::vector<std::pair<long long, Rat>> terms;  // (y, c_y), zero terms dropped
  long long y0 = 0, y1 = 0;
  long long verified_to = 0;
  VerifyStatus status = VerifyStatus::unverified;
};

Identity build_identity(const ExpressProblem& prob, EtaCache& cache);
// exact comparison on the valence budget plus five, plus extra
bool verify_identity(Identity& id, long long extra, EtaCache& cache);
long long identity_budget(const Identity& id);

}  // namespace etaq
