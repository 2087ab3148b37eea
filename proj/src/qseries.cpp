#include "etaq/qseries.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <numeric>

#include "json.hpp"

namespace etaq {

namespace {

bool all_integral(const std::vector<Rat>& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x.get_den() == 1; });
}

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

struct SparseTerm {
  size_t k;
  long c;
};

// eta(dil tau) without its q^{dil/24} prefactor: pentagonal numbers
std::vector<SparseTerm> sparse_eta(size_t nmax, size_t dil) {
  std::vector<SparseTerm> out{{0, 1}};
  for (long long k = 1;; ++k) {
    size_t e1 = static_cast<size_t>(k * (3 * k - 1) / 2) * dil;
    size_t e2 = static_cast<size_t>(k * (3 * k + 1) / 2) * dil;
    if (e1 > nmax) break;
    long c = (k % 2) ? -1L : 1L;
    out.push_back({e1, c});
    if (e2 <= nmax) out.push_back({e2, c});
  }
  return out;
}

// eta^3(dil tau) without prefactor: sum (-1)^m (2m+1) q^{m(m+1)/2}
std::vector<SparseTerm> sparse_eta3(size_t nmax, size_t dil) {
  std::vector<SparseTerm> out;
  for (long long m = 0;; ++m) {
    size_t pos = static_cast<size_t>(m * (m + 1) / 2) * dil;
    if (pos > nmax) break;
    out.push_back({pos, (m % 2 ? -1L : 1L) * (2 * m + 1)});
  }
  return out;
}

void addmul_si(mpz_ptr acc, mpz_srcptr x, long c) {
  if (c >= 0)
    mpz_addmul_ui(acc, x, static_cast<unsigned long>(c));
  else
    mpz_submul_ui(acc, x, static_cast<unsigned long>(-c));
}

// f <- f * h, h[0] = 1
void mul_sparse(std::vector<Int>& f, const std::vector<SparseTerm>& h) {
  for (size_t i = f.size(); i-- > 0;) {
    for (size_t t = 1; t < h.size() && h[t].k <= i; ++t) addmul_si(f[i].get_mpz_t(), f[i - h[t].k].get_mpz_t(), h[t].c);
  }
}

// f <- f / h, h[0] = 1
void div_sparse(std::vector<Int>& f, const std::vector<SparseTerm>& h) {
  for (size_t i = 0; i < f.size(); ++i) {
    for (size_t t = 1; t < h.size() && h[t].k <= i; ++t) addmul_si(f[i].get_mpz_t(), f[i - h[t].k].get_mpz_t(), -h[t].c);
  }
}

void apply_eta_power(std::vector<Int>& f, long long r, size_t dil) {
  if (r == 0 || f.empty()) return;
  size_t nmax = f.size() - 1;
  long long a = std::llabs(r);
  auto e3 = sparse_eta3(nmax, dil);
  auto e1 = sparse_eta(nmax, dil);
  for (long long i = 0; i < a / 3; ++i) (r > 0 ? mul_sparse : div_sparse)(f, e3);
  for (long long i = 0; i < a % 3; ++i) (r > 0 ? mul_sparse : div_sparse)(f, e1);
}

}  // namespace

QExp24 QExp24::from_ints(long long offset24, const std::vector<Int>& v) {
  QExp24 f;
  f.offset24 = offset24;
  f.coeffs.reserve(v.size());
  for (const auto& x : v) f.coeffs.emplace_back(x);
  return f;
}

Rat QExp24::at24(long long e24) const {
  if (e24 < offset24) return 0;
  if ((e24 - offset24) % 24 != 0) return 0;
  long long idx = (e24 - offset24) / 24;
  if (idx >= static_cast<long long>(coeffs.size())) throw std::out_of_range("QExp24: coefficient beyond truncation");
  return coeffs[static_cast<size_t>(idx)];
}

bool QExp24::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Rat& x) { return x == 0; });
}

QExp24 QExp24::normalized() const {
  size_t i = 0;
  while (i < coeffs.size() && coeffs[i] == 0) ++i;
  QExp24 f;
  f.offset24 = offset24 + 24 * static_cast<long long>(i);
  f.coeffs.assign(coeffs.begin() + static_cast<long>(i), coeffs.end());
  return f;
}

QExp24 QExp24::truncated(size_t terms) const {
  QExp24 f = *this;
  if (f.coeffs.size() > terms) f.coeffs.resize(terms);
  return f;
}

Rat QExp24::leading() const {
  for (const auto& c : coeffs)
    if (c != 0) return c;
  return 0;
}

QExp24 series_add(const QExp24& f, const QExp24& g) {
  if (((f.offset24 - g.offset24) % 24 + 24) % 24 != 0) {
    if (f.is_zero()) return g.truncated(static_cast<size_t>(std::max(0LL, floor_div(std::min(f.end24(), g.end24()) - g.offset24 + 23, 24))));
    if (g.is_zero()) return f.truncated(static_cast<size_t>(std::max(0LL, floor_div(std::min(f.end24(), g.end24()) - f.offset24 + 23, 24))));
    throw std::invalid_argument("series_add: exponents lie in different classes mod 1");
  }
  long long start = std::min(f.offset24, g.offset24);
  long long end = std::min(f.end24(), g.end24());
  QExp24 h;
  h.offset24 = start;
  for (long long e = start; e < end; e += 24) {
    Rat v = 0;
    if (e >= f.offset24) v += f.coeffs[static_cast<size_t>((e - f.offset24) / 24)];
    if (e >= g.offset24) v += g.coeffs[static_cast<size_t>((e - g.offset24) / 24)];
    h.coeffs.push_back(v);
  }
  return h;
}

QExp24 series_scale(const QExp24& f, const Rat& c) {
  QExp24 h = f;
  for (auto& x : h.coeffs) x *= c;
  return h;
}

QExp24 series_sub(const QExp24& f, const QExp24& g) { return series_add(f, series_scale(g, -1)); }

QExp24 series_mul(const QExp24& f, const QExp24& g) {
  size_t T = std::min(f.trunc(), g.trunc());
  QExp24 h;
  h.offset24 = f.offset24 + g.offset24;
  const QExp24* outer = &f;
  const QExp24* inner = &g;
  auto nonzeros = [T](const QExp24& s) {
    size_t c = 0;
    for (size_t i = 0; i < T; ++i) c += (s.coeffs[i] != 0);
    return c;
  };
  if (nonzeros(g) < nonzeros(f)) std::swap(outer, inner);
  if (all_integral(f.coeffs) && all_integral(g.coeffs)) {
    std::vector<Int> acc(T, Int(0));
    for (size_t i = 0; i < T; ++i) {
      const Int& a = outer->coeffs[i].get_num();
      if (a == 0) continue;
      for (size_t j = 0; i + j < T; ++j) {
        const Int& b = inner->coeffs[j].get_num();
        if (b != 0) mpz_addmul(acc[i + j].get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      }
    }
    for (auto& x : acc) h.coeffs.emplace_back(x);
    return h;
  }
  h.coeffs.assign(T, Rat(0));
  for (size_t i = 0; i < T; ++i) {
    if (outer->coeffs[i] == 0) continue;
    for (size_t j = 0; i + j < T; ++j)
      if (inner->coeffs[j] != 0) h.coeffs[i + j] += outer->coeffs[i] * inner->coeffs[j];
  }
  return h;
}

QExp24 series_invert(const QExp24& f0) {
  QExp24 f = f0.normalized();
  if (f.coeffs.empty() || f.coeffs[0] == 0) throw std::invalid_argument("series_invert: zero series");
  size_t T = f.trunc();
  QExp24 g;
  g.offset24 = -f.offset24;
  g.coeffs.assign(T, Rat(0));
  Rat inv0 = 1 / f.coeffs[0];
  std::vector<size_t> nz;
  for (size_t k = 1; k < T; ++k)
    if (f.coeffs[k] != 0) nz.push_back(k);
  g.coeffs[0] = inv0;
  for (size_t n = 1; n < T; ++n) {
    Rat s = 0;
    for (size_t k : nz) {
      if (k > n) break;
      s += f.coeffs[k] * g.coeffs[n - k];
    }
    g.coeffs[n] = -s * inv0;
  }
  return g;
}

QExp24 series_pow(const QExp24& f, long long k) {
  if (k < 0) return series_pow(series_invert(f), -k);
  QExp24 base = f;
  QExp24 acc = QExp24::one(f.trunc());
  while (k > 0) {
    if (k & 1) acc = series_mul(acc, base);
    k >>= 1;
    if (k) base = series_mul(base, base);
  }
  return acc;
}

QExp24 series_dilate(const QExp24& f, long long m) {
  if (m <= 0) throw std::invalid_argument("series_dilate: factor must be positive");
  QExp24 h;
  h.offset24 = f.offset24 * m;
  h.coeffs.assign(f.trunc() * static_cast<size_t>(m), Rat(0));
  for (size_t i = 0; i < f.trunc(); ++i) h.coeffs[i * static_cast<size_t>(m)] = f.coeffs[i];
  return h;
}

std::vector<Int> eta_power_coeffs(long long r, size_t nmax) {
  std::vector<Int> f(nmax + 1, Int(0));
  f[0] = 1;
  apply_eta_power(f, r, 1);
  return f;
}

std::vector<Int> eta_power_coeffs_recursive(long long r, size_t nmax) {
  std::vector<long long> sig = sigma_table(static_cast<long long>(nmax));
  std::vector<Int> p(nmax + 1, Int(0));
  p[0] = 1;
  Int s;
  for (size_t n = 1; n <= nmax; ++n) {
    s = 0;
    for (size_t k = 1; k <= n; ++k) addmul_si(s.get_mpz_t(), p[n - k].get_mpz_t(), sig[k]);
    s *= zint(-r);
    mpz_divexact_ui(p[n].get_mpz_t(), s.get_mpz_t(), n);
  }
  return p;
}

const std::vector<Int>& EtaCache::get(long long r, size_t nmax) {
  auto it = table_.find(r);
  if (it != table_.end() && it->second.size() > nmax) return it->second;
  if (max_terms_ && nmax + 1 > max_terms_)
    throw ResourceError("P_r cache limit exceeded: requested " + std::to_string(nmax + 1) + " terms of r=" +
                        std::to_string(r));
  size_t want = nmax;
  if (it != table_.end()) want = std::max(nmax, it->second.size() * 3 / 2);
  if (max_terms_) want = std::min(want, max_terms_ - 1);
  table_[r] = eta_power_coeffs(r, want);
  return table_[r];
}

Int EtaCache::coeff(long long r, const Rat& n) {
  if (n.get_den() != 1 || n < 0) return 0;
  return get(r, n.get_num().get_ui())[n.get_num().get_ui()];
}

static const char* kCacheMagic = "etaq-pr-cache";

void EtaCache::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) return;
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception&) {
    throw std::runtime_error("cache file is not valid JSON: " + path);
  }
  if (j.value("magic", "") != kCacheMagic || j.value("version", 0) != 1)
    throw std::runtime_error("cache file has wrong magic header or version: " + path);
  for (auto& [key, arr] : j.at("entries").items()) {
    long long r = std::stoll(key);
    std::vector<Int> v;
    v.reserve(arr.size());
    for (const auto& s : arr) v.emplace_back(s.get<std::string>());
    // only accept prefixes that start like P_r
    if (v.empty() || v[0] != 1) continue;
    auto& cur = table_[r];
    if (v.size() > cur.size()) cur = std::move(v);
  }
}

void EtaCache::save(const std::string& path) const {
  nlohmann::json j;
  j["magic"] = kCacheMagic;
  j["version"] = 1;
  nlohmann::json entries = nlohmann::json::object();
  for (const auto& [r, v] : table_) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& x : v) arr.push_back(x.get_str());
    entries[std::to_string(r)] = std::move(arr);
  }
  j["entries"] = std::move(entries);
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache file: " + tmp);
    out << j.dump();
    if (!out) throw std::runtime_error("cannot write cache file: " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) throw std::runtime_error("cannot rename cache file into place: " + path);
}

std::vector<Int> eta_quotient_ints(const EtaExponents& spec, size_t nmax) {
  std::vector<Int> f(nmax + 1, Int(0));
  f[0] = 1;
  for (const auto& [n, r] : spec.exps)
    if (r > 0) apply_eta_power(f, r, static_cast<size_t>(n));
  for (const auto& [n, r] : spec.exps)
    if (r < 0) apply_eta_power(f, r, static_cast<size_t>(n));
  return f;
}

QExp24 eta_quotient_series(const EtaExponents& spec, size_t nmax) {
  return QExp24::from_ints(spec.sum_n_rn(), eta_quotient_ints(spec, nmax));
}

Rat ord_at_cusp(const EtaExponents& spec, long long c, long long d) {
  if (c <= 0 || gcd_ll(c, d) != 1) throw std::invalid_argument("ord_at_cusp: need c > 0 and gcd(c, d) = 1");
  Rat s = 0;
  for (const auto& [n, r] : spec.exps) {
    long long g = gcd_ll(n, c);
    s += make_rat(Int(static_cast<long>(g * g * r)), Int(static_cast<long>(n)));
  }
  return s / 24;
}

long long index_gamma0(long long N) {
  if (N <= 0) throw std::invalid_argument("index_gamma0: N must be positive");
  long long idx = N, m = N;
  for (long long p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    while (m % p == 0) m /= p;
    idx = idx / p * (p + 1);
  }
  if (m > 1) idx = idx / m * (m + 1);
  return idx;
}

std::vector<Cusp> cusps_gamma0(long long N) {
  std::vector<Cusp> out;
  for (long long c : divisors(N)) {
    long long g = gcd_ll(c, N / c);
    long long width = N / gcd_ll(c * c, N);
    for (long long a0 = 0; a0 < g; ++a0) {
      if (gcd_ll(a0, g) != 1) continue;
      long long a = (a0 == 0) ? 1 : a0;
      while (gcd_ll(a, c) != 1) a += g;
      out.push_back({a, c, width});
    }
  }
  return out;
}

long long sturm_terms(long long N, const Rat& k) {
  if (k < 0) throw std::invalid_argument("sturm_terms: weight must be non-negative");
  Rat b = Rat(zint(index_gamma0(N))) * k / 12;
  Int fl;
  mpz_fdiv_q(fl.get_mpz_t(), b.get_num_mpz_t(), b.get_den_mpz_t());
  return fl.get_si() + 1;
}

long long certified_terms(long long N, const Rat& k, long long offset24, const std::vector<std::pair<Cusp, Rat>>& bounds) {
  Rat B = Rat(zint(index_gamma0(N))) * k / 12;
  for (const auto& [cusp, b] : bounds) {
    if (cusp.c == N) continue;
    B -= Rat(zint(cusp.width)) * b;
  }
  B -= make_rat(zint(offset24), 24);
  Int fl;
  mpz_fdiv_q(fl.get_mpz_t(), B.get_num_mpz_t(), B.get_den_mpz_t());
  return std::max<long long>(1, fl.get_si() + 1);
}

bool series_equal_certified(const QExp24& f, const QExp24& g, size_t terms) {
  if (((f.offset24 - g.offset24) % 24 + 24) % 24 != 0) return false;
  long long start = std::min(f.offset24, g.offset24);
  long long last = start + 24 * (static_cast<long long>(terms) - 1);
  if (terms > 0 && (last >= f.end24() || last >= g.end24()))
    throw std::invalid_argument("series_equal_certified: insufficient truncation");
  for (long long e = start; e <= last; e += 24)
    if (f.at24(e) != g.at24(e)) return false;
  return true;
}

}  // namespace etaq
