#include "properties.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "etaq/characters.hpp"
#include "etaq/heckeops.hpp"
#include "etaq/metaplectic.hpp"
#include "etaq/qseries.hpp"
#include "etaq/search.hpp"
#include "oracles.hpp"

using namespace etaq;

namespace props {

namespace {

MatZ random_matrix(std::mt19937_64& gen) {
  std::uniform_int_distribution<int> det(1, 10), len(0, 6), coin(0, 1);
  long long D = det(gen);
  auto ds = divisors(D);
  long long a = ds[std::uniform_int_distribution<size_t>(0, ds.size() - 1)(gen)];
  long long d = D / a;
  long long b = std::uniform_int_distribution<long long>(0, d - 1)(gen);
  MatZ m = random_gamma0(1, len(gen), gen()) * MatZ{zint(a), zint(b), 0, zint(d)} * random_gamma0(1, len(gen), gen());
  if (coin(gen)) m = -m;
  return m;
}

MatZ random_gamma0_signed(long long N, std::mt19937_64& gen) {
  std::uniform_int_distribution<unsigned> len(0, 8);
  MatZ m = random_gamma0(N, len(gen), gen());
  if (gen() & 1) m = -m;
  return m;
}

EtaExponents random_exponents(long long N, long long bound, std::mt19937_64& gen) {
  std::uniform_int_distribution<long long> pick(-bound, bound);
  std::map<long long, long long> e;
  for (long long n : divisors(N)) e[n] = pick(gen);
  return EtaExponents(N, e);
}

// same level and weight: shift the difference onto one divisor
EtaExponents random_partner(const EtaExponents& r, long long bound, std::mt19937_64& gen) {
  EtaExponents rp = random_exponents(r.level, bound, gen);
  std::map<long long, long long> e = rp.exps;
  auto ds = divisors(r.level);
  long long n = ds[std::uniform_int_distribution<size_t>(0, ds.size() - 1)(gen)];
  e[n] = rp.get(n) + r.total() - rp.total();
  return EtaExponents(r.level, e);
}

// (disc/.) with conductor |disc| dividing N, so the character is defined modulo N
RealDirichlet random_real_character(long long N, std::mt19937_64& gen) {
  static const long long discs[] = {1, -4, 8, -8, 5, -3, 12, -7, -11, 13, 17, -20, 24, -15, -24, 21};
  std::vector<long long> ok;
  for (long long d : discs)
    if (N % std::llabs(d) == 0) ok.push_back(d);
  return {N, ok[std::uniform_int_distribution<size_t>(0, ok.size() - 1)(gen)]};
}

}  // namespace

Result cocycle_identity(long long samples, std::uint64_t seed) {
  Result res{"cocycle identity"};
  std::mt19937_64 gen(seed);
  for (long long i = 0; i < samples; ++i) {
    MatZ A = random_matrix(gen), B = random_matrix(gen), C = random_matrix(gen);
    ++res.cases;
    int lhs = cocycle_sigma(A, B) * cocycle_sigma(A * B, C);
    int rhs = cocycle_sigma(B, C) * cocycle_sigma(A, B * C);
    if (lhs != rhs) res.fail(A.str() + " " + B.str() + " " + C.str());
  }
  return res;
}

Result cocycle_matches_arguments(long long samples, std::uint64_t seed) {
  Result res{"cocycle vs argument bookkeeping"};
  std::mt19937_64 gen(seed);
  for (long long i = 0; i < samples; ++i) {
    MatZ A = random_matrix(gen), B = random_matrix(gen);
    ++res.cases;
    if (cocycle_sigma(A, B) != oracle::cocycle_by_args(A, B)) res.fail(A.str() + " " + B.str());
  }
  return res;
}

Result meta_associative(long long samples, std::uint64_t seed) {
  Result res{"metaplectic associativity"};
  std::mt19937_64 gen(seed);
  auto elem = [&] { return MetaElem{random_matrix(gen), (gen() & 1) ? 1 : -1}; };
  for (long long i = 0; i < samples; ++i) {
    MetaElem x = elem(), y = elem(), z = elem();
    ++res.cases;
    if (meta_compose(meta_compose(x, y), z) != meta_compose(x, meta_compose(y, z)))
      res.fail(x.mat.str() + " " + y.mat.str() + " " + z.mat.str());
  }
  return res;
}

Result decomposition_recomposes(long long lmax, long long Nmax) {
  Result res{"ab0d decomposition recomposes"};
  for (long long l = 2; l <= lmax; ++l)
    for (long long N = 1; N <= Nmax; ++N)
      for (long long a : divisors(l)) {
        if (a == 1 || gcd_ll(N, a) != 1) continue;
        long long d = l / a;
        for (long long b = 0; b < d; ++b) {
          if (gcd_ll(gcd_ll(a, b), d) != 1) continue;
          ++res.cases;
          auto dec = decompose_ab0d(zint(a), zint(b), zint(d), N, l);
          MetaElem prod = meta_compose(meta_compose({dec.gamma1, 1}, {dec.alpha, 1}), {dec.gamma2, 1});
          MetaElem want{{zint(a), zint(b), 0, zint(d)}, 1};
          bool ok = prod == want && in_gamma0(dec.gamma1, zint(N)) && in_gamma0(dec.gamma2, zint(N));
          if (!ok) {
            std::ostringstream os;
            os << "l=" << l << " N=" << N << " a=" << a << " b=" << b << " got " << prod.mat.str() << " eps " << prod.eps;
            res.fail(os.str());
          }
        }
      }
  return res;
}

Result coset_partition_counts(long long lmax, long long Nmax) {
  Result res{"double coset representatives partition the cosets"};
  for (long long l = 1; l <= lmax; ++l)
    for (long long N = 1; N <= Nmax; ++N) {
      long long expect = 0;
      for (long long a : divisors(l))
        if (gcd_ll(N, a) == 1) expect += l / a;
      long long got = 0;
      for (long long m = 1; m * m <= l; ++m)
        if (l % (m * m) == 0 && gcd_ll(N, m) == 1) got += static_cast<long long>(coset_reps_doubledecomp(l, N, m).size());
      ++res.cases;
      if (got != expect) res.fail("l=" + std::to_string(l) + " N=" + std::to_string(N));
    }
  return res;
}

Result character_multiplicative(long long samples, std::uint64_t seed) {
  Result res{"character multiplicativity"};
  std::mt19937_64 gen(seed);
  for (long long i = 0; i < samples; ++i) {
    long long N = 1 + static_cast<long long>(gen() % 12);
    EtaExponents r = random_exponents(N, 8, gen);
    RealDirichlet chi = (gen() % 3 == 0) ? random_real_character(N, gen) : RealDirichlet::trivial(N);
    Character v{chi, r};
    MetaElem x{random_gamma0_signed(N, gen), (gen() & 1) ? 1 : -1};
    MetaElem y{random_gamma0_signed(N, gen), (gen() & 1) ? 1 : -1};
    ++res.cases;
    bool ok = v(meta_compose(x, y)) == v(x) * v(y);
    if (i % 2 == 0) ok = ok && v_eta(meta_compose(x, y)) == v_eta(x) * v_eta(y);
    if (!ok) res.fail("N=" + std::to_string(N) + " r=" + r.str() + " x=" + x.mat.str() + " y=" + y.mat.str());
  }
  return res;
}

Result minus_identity_parity(long long samples, std::uint64_t seed) {
  Result res{"value at -I"};
  std::mt19937_64 gen(seed);
  for (long long i = 0; i < samples; ++i) {
    long long N = 1 + static_cast<long long>(gen() % 12);
    EtaExponents r = random_exponents(N, 12, gen);
    RealDirichlet chi = random_real_character(N, gen);
    Character v{chi, r};
    ++res.cases;
    Mu24 want = Mu24(-6 * r.total()) * Mu24::sign(chi.value(-1));
    if (v(MetaElem{-MatZ::identity(), 1}) != want) res.fail("N=" + std::to_string(N) + " r=" + r.str());
  }
  return res;
}

Result adjoint_symmetry(long long samples, std::uint64_t seed) {
  Result res{"adjoint and Fricke symmetry"};
  std::mt19937_64 gen(seed);
  for (long long i = 0; i < samples; ++i) {
    long long N = 1 + static_cast<long long>(gen() % 12);
    long long l = 1 + static_cast<long long>(gen() % 60);
    EtaExponents r = random_exponents(N, 8, gen);
    EtaExponents rp = random_partner(r, 8, gen);
    RealDirichlet chi = random_real_character(N, gen), chip = random_real_character(N, gen);
    ++res.cases;
    bool a = compatible_closed_form(N, chi, r, chip, rp, l);
    bool b = compatible_closed_form(N, chip.inverse(), fricke_transform(rp), chi.inverse(), fricke_transform(r), l);
    bool inv = fricke_transform(fricke_transform(r)) == r;
    if (a != b || !inv) res.fail("N=" + std::to_string(N) + " l=" + std::to_string(l) + " r=" + r.str() + " r'=" + rp.str());
  }
  return res;
}

OracleAgreement oracle_agreement(long long Nmax, long long lmax, int vectors_per_N, unsigned trials, std::uint64_t seed) {
  OracleAgreement out;
  out.result.name = "randomized oracle agrees with closed form";
  std::mt19937_64 gen(seed);
  for (long long N = 1; N <= Nmax; ++N)
    for (int v = 0; v < vectors_per_N; ++v) {
      EtaExponents r = random_exponents(N, 8, gen);
      EtaExponents rp = v == 0 ? r : random_partner(r, 8, gen);
      Character c1{RealDirichlet::trivial(N), r}, c2{RealDirichlet::trivial(N), rp};
      for (long long l = 1; l <= lmax; ++l) {
        bool closed = compatible_closed_form(N, c1.chi, r, c2.chi, rp, l);
        OracleVerdict ov = compatible_sample_oracle(N, c1, c2, l, trials, gen());
        ++out.pairs;
        ++out.result.cases;
        if (closed && ov.counterexample)
          out.result.fail("N=" + std::to_string(N) + " l=" + std::to_string(l) + " r=" + r.str() + " r'=" + rp.str() +
                          " witness " + ov.counterexample->str());
        if (!closed && !ov.counterexample) ++out.misses;
      }
    }
  return out;
}

Result two_path_tl(long long lmax, long long nmax) {
  Result res{"T_l on eta powers: direct sum vs closed form"};
  EtaCache cache;
  for (long long r = -6; r <= 24; ++r)
    for (long long l = 1; l <= lmax; ++l) {
      if (!newman_admissible(r, l)) continue;
      QExp24 direct = tl_level1_etapower(r, l, nmax, cache);
      for (long long n = direct.offset24; n <= nmax; n += 24) {
        ++res.cases;
        if (direct.at24(n) != R_coeff(n, r, l, cache)) {
          res.fail("r=" + std::to_string(r) + " l=" + std::to_string(l) + " n=" + std::to_string(n));
          break;
        }
      }
      // internal indices off l * (r + 24 Z) vanish
      for (long long np = 0; np <= 4 * l * 24; np += 7) {
        if (np % l == 0 && ((np / l - r) % 24 + 24) % 24 == 0) continue;
        ++res.cases;
        if (tl_level1_coeff_fourier(r, l, np, cache) != 0)
          res.fail("nonvanishing r=" + std::to_string(r) + " l=" + std::to_string(l) + " n'=" + std::to_string(np));
      }
      // coset factors from the character agree with the explicit sign
      Character v{RealDirichlet::trivial(1), EtaExponents(1, {{1, r}})};
      for (long long a : divisors(l)) {
        if (a == 1) continue;
        long long d = l / a;
        for (long long b = 0; b < d; ++b) {
          if (gcd_ll(gcd_ll(a, b), d) != 1) continue;
          ++res.cases;
          if (v1v2_on_coset(1, v, v, l, MatZ{zint(a), zint(b), 0, zint(d)}) != level1_coset_factor(r, l, a, b))
            res.fail("coset factor r=" + std::to_string(r) + " l=" + std::to_string(l) + " a=" + std::to_string(a) +
                     " b=" + std::to_string(b));
        }
      }
    }
  return res;
}

Result rad_case_representatives(std::uint64_t seed) {
  Result res{"rad case: representative shifts give the same operator"};
  std::mt19937_64 gen(seed);
  static const long long levels[] = {2, 3, 4, 6, 8, 9, 10, 12};
  int found = 0;
  for (int attempt = 0; attempt < 20000 && found < 40; ++attempt) {
    long long N = levels[gen() % std::size(levels)];
    std::vector<long long> ls;
    for (long long l = 2; l <= 36; ++l) {
      bool ok = true;
      for (const auto& [p, e] : factor(zint(l))) {
        (void)e;
        if (zint(N) % p != 0) ok = false;
      }
      if (ok) ls.push_back(l);
    }
    long long l = ls[gen() % ls.size()];
    EtaExponents r = random_exponents(N, 5, gen);
    EtaExponents rp = (gen() % 3 == 0) ? r : random_partner(r, 5, gen);
    Character c1{RealDirichlet::trivial(N), r}, c2{RealDirichlet::trivial(N), rp};
    if (!compatible_closed_form(N, c1.chi, r, c2.chi, rp, l)) continue;
    ++found;
    OperatorSpec op(N, l, c1, c2);
    QExp24 f = eta_quotient_series(r, static_cast<size_t>(8 * l));
    TlResult exact = tl_rad_case(op, f);
    long long shift = static_cast<long long>(gen() % 200) - 100;
    ++res.cases;
    try {
      TlResult viasum = tl_rad_case_cosets(op, f, shift);
      if (viasum.series.offset24 != exact.series.offset24 || viasum.series.coeffs != exact.series.coeffs)
        res.fail("N=" + std::to_string(N) + " l=" + std::to_string(l) + " r=" + r.str() + " r'=" + rp.str());
    } catch (const std::exception& e) {
      res.fail(std::string(e.what()) + " N=" + std::to_string(N) + " l=" + std::to_string(l));
    }
  }
  return res;
}

Result enumeration_complete(long long Nmax) {
  Result res{"holomorphic eta-quotient enumeration is complete"};
  std::vector<LevelWeight> cases = dimension_candidates(false);
  for (const auto& c : dimension_candidates(true)) cases.push_back(c);
  for (const auto& [N, k] : cases) {
    if (N > Nmax) continue;
    long long twok = Rat(k * 2).get_num().get_si();
    long long ndiv = static_cast<long long>(divisors(N).size());
    long long box = ndiv <= 4 ? 6 * twok + 6 : 8;
    for (bool cusp : {false, true}) {
      auto mine = enumerate_holomorphic(N, k, cusp);
      auto brute = oracle::eta_box_enumeration(N, twok, box, cusp);
      std::set<std::vector<long long>> a, b(brute.begin(), brute.end());
      bool inside = true;
      for (const auto& e : mine) {
        std::vector<long long> v;
        for (long long n : divisors(N)) {
          v.push_back(e.get(n));
          if (e.get(n) > box || e.get(n) < -box) inside = false;
        }
        a.insert(v);
      }
      ++res.cases;
      bool ok = inside ? a == b : std::includes(a.begin(), a.end(), b.begin(), b.end());
      if (!ok)
        res.fail("N=" + std::to_string(N) + " k=" + k.get_str() + (cusp ? " cusp" : "") + " enumerated " +
                 std::to_string(a.size()) + " vs box " + std::to_string(b.size()));
    }
  }
  return res;
}

}  // namespace props
