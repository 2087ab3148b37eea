#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "etaq/characters.hpp"
#include "etaq/heckeops.hpp"
#include "etaq/qseries.hpp"

namespace etaq {

struct LevelWeight {
  long long N = 1;
  Rat k = 0;
  bool operator==(const LevelWeight& o) const { return N == o.N && k == o.k; }
};

// index(N) k < 12 (equality when cusp_forms is set)
std::vector<LevelWeight> dimension_candidates(bool cusp_forms);

// exponent boxes from the simplex of cusp orders; every holomorphic quotient lies inside
std::vector<std::pair<long long, long long>> exponent_bounds(long long N, const Rat& k);

std::vector<EtaExponents> enumerate_holomorphic(long long N, const Rat& k, bool cusp_only = false);

struct AdmissibleL {
  bool half_integral = false;
  std::set<int> residues;     // integral weight: l mod 24 in 1..24
  long long l0 = 0;           // half-integral weight: l = l0 m^2
  std::set<int> m2_residues;  // m^2 mod 24
  bool empty() const { return half_integral ? m2_residues.empty() : residues.empty(); }
  bool contains(long long l) const;
  std::string describe() const;
};

std::optional<AdmissibleL> findl(long long N, const EtaExponents& r, const EtaExponents& rp);

struct PairEntry {
  EtaExponents r, rp;
  AdmissibleL adm;
};
std::vector<PairEntry> admissible_pairs(long long N, const Rat& k, bool cusp_only = false);

struct ConstantResult {
  Rat coeff = 0;       // c = coeff * l^{l_exponent}
  Rat l_exponent = 0;
  long long l = 1;
  std::string method;  // rad, level1 or general
  long long terms_checked = 0;
  bool certified = false;
};

// T_l eta^r = c eta^{r'}; the identity is checked on a valence-bound prefix
ConstantResult determine_constant(long long N, const EtaExponents& r, const EtaExponents& rp, long long l, EtaCache& cache);

}  // namespace etaq
