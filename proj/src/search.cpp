#include "etaq/search.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace etaq {

namespace {

long long euler_phi(long long n) {
  long long out = n;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    out -= out / p;
  }
  if (n > 1) out -= out / n;
  return out;
}

Int floor_rat(const Rat& q) {
  Int f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return f;
}

Int ceil_rat(const Rat& q) {
  Int f;
  mpz_cdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return f;
}

// solve M x = b over Q by Gauss-Jordan
std::vector<Rat> solve(std::vector<std::vector<Rat>> M, std::vector<Rat> b) {
  const size_t n = M.size();
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && M[piv][col] == 0) ++piv;
    if (piv == n) throw std::logic_error("solve: singular order matrix");
    std::swap(M[piv], M[col]);
    std::swap(b[piv], b[col]);
    for (size_t row = 0; row < n; ++row) {
      if (row == col || M[row][col] == 0) continue;
      Rat f = M[row][col] / M[col][col];
      for (size_t j = col; j < n; ++j) M[row][j] -= f * M[col][j];
      b[row] -= f * b[col];
    }
  }
  for (size_t i = 0; i < n; ++i) b[i] /= M[i][i];
  return b;
}

bool is_perfect_square(const Int& v) { return v >= 0 && mpz_perfect_square_p(v.get_mpz_t()); }

}  // namespace

std::vector<LevelWeight> dimension_candidates(bool cusp_forms) {
  std::vector<LevelWeight> out;
  for (long long N = 1; N <= 24; ++N) {
    long long idx = index_gamma0(N);
    for (long long twok = 1; idx * twok <= 24; ++twok) {
      bool keep = cusp_forms ? idx * twok == 24 : idx * twok < 24;
      if (keep) out.push_back({N, make_rat(zint(twok), 2)});
    }
  }
  return out;
}

std::vector<std::pair<long long, long long>> exponent_bounds(long long N, const Rat& k) {
  auto ds = divisors(N);
  const size_t m = ds.size();
  std::vector<std::vector<Rat>> A(m, std::vector<Rat>(m));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) {
      long long g = gcd_ll(ds[j], ds[i]);
      A[i][j] = make_rat(zint(g * g), zint(24 * ds[j]));
    }
  Rat total = Rat(zint(index_gamma0(N))) * k / 12;
  std::vector<Rat> lo(m), hi(m);
  for (size_t i = 0; i < m; ++i) {
    long long c = ds[i];
    long long w = euler_phi(gcd_ll(c, N / c)) * (N / gcd_ll(c * c, N));
    std::vector<Rat> ord(m, Rat(0));
    ord[i] = total / zint(w);
    std::vector<Rat> r = solve(A, ord);
    for (size_t j = 0; j < m; ++j) {
      if (i == 0 || r[j] < lo[j]) lo[j] = r[j];
      if (i == 0 || r[j] > hi[j]) hi[j] = r[j];
    }
  }
  std::vector<std::pair<long long, long long>> out;
  for (size_t j = 0; j < m; ++j) out.emplace_back(floor_rat(lo[j]).get_si(), ceil_rat(hi[j]).get_si());
  return out;
}

std::vector<EtaExponents> enumerate_holomorphic(long long N, const Rat& k, bool cusp_only) {
  if (N <= 0 || k <= 0 || Rat(k * 2).get_den() != 1) throw std::invalid_argument("enumerate_holomorphic: bad level or weight");
  auto ds = divisors(N);
  auto bounds = exponent_bounds(N, k);
  const long long twok = Rat(k * 2).get_num().get_si();
  const size_t m = ds.size();
  std::vector<EtaExponents> out;
  std::vector<long long> cur(m, 0);
  auto emit = [&] {
    std::map<long long, long long> e;
    for (size_t i = 0; i < m; ++i) e[ds[i]] = cur[i];
    EtaExponents spec(N, e);
    for (long long c : ds) {
      Rat o = ord_at_cusp(spec, c, 1);
      if (o < 0 || (cusp_only && o == 0)) return;
    }
    out.push_back(spec);
  };
  auto rec = [&](auto&& self, size_t i, long long used) -> void {
    if (i + 1 == m) {
      cur[i] = twok - used;
      if (cur[i] >= bounds[i].first && cur[i] <= bounds[i].second) emit();
      return;
    }
    for (long long v = bounds[i].first; v <= bounds[i].second; ++v) {
      cur[i] = v;
      self(self, i + 1, used + v);
    }
  };
  rec(rec, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

bool AdmissibleL::contains(long long l) const {
  if (l <= 0) return false;
  if (!half_integral) return residues.count(static_cast<int>((l - 1) % 24 + 1)) > 0;
  if (l % l0 != 0) return false;
  long long q = l / l0;
  if (!is_perfect_square(zint(q))) return false;
  return m2_residues.count(static_cast<int>(q % 24)) > 0;
}

std::string AdmissibleL::describe() const {
  std::ostringstream os;
  if (!half_integral) {
    os << "l mod 24 in {";
    bool first = true;
    for (int r : residues) {
      os << (first ? "" : ",") << (r % 24);
      first = false;
    }
    os << "}";
  } else {
    os << "l = " << l0 << " m^2, m^2 mod 24 in {";
    bool first = true;
    for (int r : m2_residues) {
      os << (first ? "" : ",") << r;
      first = false;
    }
    os << "}";
  }
  return os.str();
}

std::optional<AdmissibleL> findl(long long N, const EtaExponents& r, const EtaExponents& rp) {
  if (r.level != N || rp.level != N) throw std::invalid_argument("findl: exponent vectors must have level N");
  if (r.total() != rp.total()) throw std::invalid_argument("findl: weights differ");
  const RealDirichlet triv = RealDirichlet::trivial(N);
  AdmissibleL adm;
  adm.half_integral = r.total() % 2 != 0;
  if (!adm.half_integral) {
    for (long long l = 1; l <= 24; ++l)
      if (compatible_closed_form(N, triv, r, triv, rp, l)) adm.residues.insert(static_cast<int>(l));
  } else {
    adm.l0 = squarefree_kernel(delta_of(r, rp, 1)).get_si();
    // one representative m for each square class mod 24
    static const std::pair<int, long long> reps[] = {{0, 12}, {1, 1}, {4, 2}, {9, 3}, {12, 6}, {16, 4}};
    for (const auto& [s, m] : reps)
      if (compatible_closed_form(N, triv, r, triv, rp, adm.l0 * m * m)) adm.m2_residues.insert(s);
  }
  if (adm.empty()) return std::nullopt;
  return adm;
}

std::vector<PairEntry> admissible_pairs(long long N, const Rat& k, bool cusp_only) {
  auto forms = enumerate_holomorphic(N, k, cusp_only);
  std::vector<PairEntry> out;
  for (const auto& r : forms)
    for (const auto& rp : forms)
      if (auto adm = findl(N, r, rp)) out.push_back({r, rp, *adm});
  return out;
}

ConstantResult determine_constant(long long N, const EtaExponents& r, const EtaExponents& rp, long long l, EtaCache& cache) {
  Character src{RealDirichlet::trivial(N), r}, tgt{RealDirichlet::trivial(N), rp};
  OperatorSpec op(N, l, src, tgt);
  const Rat k = r.weight();
  if (k <= 0) throw std::invalid_argument("determine_constant: weight must be positive");

  QExp24 target = eta_quotient_series(rp, 1);
  ConstantResult res;
  res.l = l;
  // holomorphic on both sides, so all cusp bounds are zero
  const long long start_guess = std::min<long long>(0, target.offset24);
  long long terms = certified_terms(N, k, start_guess, {}) + 2;
  long long top = target.offset24 + 24 * terms;  // exclusive bound on output exponents

  TlResult t;
  if (N == 1) {
    long long rr = r.get(1);
    t.series = tl_level1_etapower(rr, l, top, cache);
    t.l = l;
    t.l_exponent = -k / 2;
    res.method = "level1";
  } else {
    long long need = (top * l - r.sum_n_rn()) / 24 + 2;
    QExp24 f = eta_quotient_series(r, static_cast<size_t>(need));
    if (op.rad_case()) {
      t = tl_rad_case(op, f);
      res.method = "rad";
    } else {
      t = tl_general(op, f);
      res.method = "general";
    }
  }
  res.l_exponent = t.l_exponent;
  const QExp24& s = t.series;
  res.coeff = s.at24(target.offset24);

  long long lo = std::min(s.offset24, target.offset24);
  long long n_terms = certified_terms(N, k, lo, {});
  long long hi = std::min(s.end24(), lo + 24 * n_terms);
  QExp24 tgt_series = eta_quotient_series(rp, static_cast<size_t>((hi - target.offset24) / 24 + 1));
  bool ok = true;
  for (long long e = lo; e < hi; e += 24) {
    Rat want = e >= target.offset24 ? res.coeff * tgt_series.at24(e) : Rat(0);
    if (s.at24(e) != want) ok = false;
  }
  res.terms_checked = (hi - lo) / 24;
  res.certified = ok && res.terms_checked >= n_terms;
  if (!ok) throw std::runtime_error("determine_constant: T_l eta^r is not a multiple of eta^r' on the checked prefix");
  return res;
}

}  // namespace etaq
