#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>

#include "etaq/arith.hpp"
#include "etaq/metaplectic.hpp"

namespace etaq {

struct EtaExponents {
  long long level = 1;
  std::map<long long, long long> exps;  // n -> r_n, zero entries dropped

  EtaExponents() = default;
  EtaExponents(long long N, std::map<long long, long long> e);

  long long get(long long n) const;
  long long total() const;  // sum r_n = 2k
  Rat weight() const { return make_rat(zint(total()), 2); }
  long long sum_n_rn() const;
  long long sum_Nn_rn() const;
  std::string str() const;
  bool operator==(const EtaExponents& o) const { return level == o.level && exps == o.exps; }
  bool operator<(const EtaExponents& o) const;
};

// d -> (disc/d) on d coprime to modulus; disc = 1 is the trivial character
struct RealDirichlet {
  long long modulus = 1;
  long long disc = 1;

  static RealDirichlet trivial(long long N) { return {N, 1}; }
  bool is_trivial() const { return disc == 1; }
  int value(const Int& d) const;
  RealDirichlet inverse() const { return *this; }
};

struct Character {
  RealDirichlet chi;
  EtaExponents r;

  Mu24 operator()(const MetaElem& x) const;
};

using CharEval = std::function<Mu24(const MetaElem&)>;

Mu24 v_eta(const MetaElem& x);
Mu24 v_r(const EtaExponents& spec, const MetaElem& x);

Int delta_of(const EtaExponents& r, const EtaExponents& rp, long long l);

struct CompatDetail {
  bool cond1 = false, cond2 = false, cond3 = false, cond4 = false;
  bool all() const { return cond1 && cond2 && cond3 && cond4; }
};

CompatDetail compatible_detail(long long N, const RealDirichlet& chi, const EtaExponents& r, const RealDirichlet& chip,
                               const EtaExponents& rp, long long l);
bool compatible_closed_form(long long N, const RealDirichlet& chi, const EtaExponents& r, const RealDirichlet& chip,
                            const EtaExponents& rp, long long l);
// condition 4 by exhaustive residues only (test oracle; period must be small)
bool charcom4_exhaustive(long long N, const RealDirichlet& chi, const RealDirichlet& chip, const Int& delta, long long l);

struct OracleVerdict {
  std::optional<MatZ> counterexample;
  unsigned trials_run = 0;
};

OracleVerdict compatible_sample_oracle(long long N, const CharEval& v1, const CharEval& v2, long long l, unsigned trials,
                                       std::uint64_t seed);

EtaExponents fricke_transform(const EtaExponents& r);

Mu24 v1v2_on_coset(long long N, const Character& v1, const Character& v2, long long l, const MatZ& rep);

}  // namespace etaq
