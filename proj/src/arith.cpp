#include "etaq/arith.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace etaq {

namespace {

const int kTab2[8] = {0, 1, 0, -1, 0, -1, 0, 1};

template <class T>
int kron_impl(T a, T b, auto is_odd, auto low3, auto shr1) {
  if (b == 0) return (a == 1 || a == -1) ? 1 : 0;
  if (!is_odd(a) && !is_odd(b)) return 0;
  int k = 1;
  int v = 0;
  while (!is_odd(b)) {
    b = shr1(b);
    ++v;
  }
  if (v & 1) k = kTab2[low3(a)];
  if (b < 0) {
    b = -b;
    if (a < 0) k = -k;
  }
  a = a % b;
  if (a < 0) a += b;
  while (a != 0) {
    v = 0;
    while (!is_odd(a)) {
      a = shr1(a);
      ++v;
    }
    if (v & 1) k *= kTab2[low3(b)];
    if (low3(a) & low3(b) & 2) k = -k;
    T r = b % a;
    b = a;
    a = r;
  }
  return b == 1 ? k : 0;
}

}  // namespace

Mu24 Mu24::from_int(const Int& e) {
  Int r = e % 24;
  if (r < 0) r += 24;
  return Mu24(r.get_si());
}

int kronecker(const Int& m, const Int& n) {
  return kron_impl<Int>(
      m, n, [](const Int& x) { return mpz_odd_p(x.get_mpz_t()) != 0; },
      [](const Int& x) {
        Int r = x % 8;
        if (r < 0) r += 8;
        return static_cast<int>(r.get_si());
      },
      [](const Int& x) {
        Int r;
        mpz_tdiv_q_2exp(r.get_mpz_t(), x.get_mpz_t(), 1);
        return r;
      });
}

int kronecker(long long m, long long n) {
  if (m == INT64_MIN || n == INT64_MIN) return kronecker(Int(std::to_string(m)), Int(std::to_string(n)));
  return kron_impl<long long>(
      m, n, [](long long x) { return (x & 1) != 0; },
      [](long long x) { return static_cast<int>(((x % 8) + 8) % 8); }, [](long long x) { return x / 2; });
}

long long gcd_ll(long long a, long long b) { return std::gcd(a, b); }
long long lcm_ll(long long a, long long b) { return std::lcm(a, b); }

bool is_prime_ll(long long n) {
  if (n < 2) return false;
  for (long long p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

Factorization factor(Int n) {
  if (n <= 0) throw std::invalid_argument("factor: argument must be positive");
  Factorization out;
  auto take = [&](const Int& p) {
    unsigned e = 0;
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  };
  take(2);
  take(3);
  for (unsigned long p = 5; p <= 1000000 && Int(p) * p <= n; p += 6) {
    take(Int(p));
    take(Int(p + 2));
  }
  if (n == 1) return out;
  // cofactor: prime, or a product of primes above the trial bound
  std::vector<Int> stack{n};
  std::vector<Int> primes;
  while (!stack.empty()) {
    Int m = stack.back();
    stack.pop_back();
    if (m == 1) continue;
    if (mpz_probab_prime_p(m.get_mpz_t(), 40)) {
      primes.push_back(m);
      continue;
    }
    Int root;
    if (mpz_perfect_square_p(m.get_mpz_t())) {
      mpz_sqrt(root.get_mpz_t(), m.get_mpz_t());
      stack.push_back(root);
      stack.push_back(root);
      continue;
    }
    Int d = 1;
    for (unsigned long c = 1; d == 1 || d == m; ++c) {
      Int x = 2, y = 2;
      d = 1;
      auto f = [&](const Int& v) { return Int((v * v + c) % m); };
      while (d == 1) {
        x = f(x);
        y = f(f(y));
        Int diff = abs(x - y);
        mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), m.get_mpz_t());
      }
    }
    stack.push_back(d);
    stack.push_back(m / d);
  }
  std::sort(primes.begin(), primes.end());
  for (const auto& p : primes) {
    if (!out.empty() && out.back().first == p)
      ++out.back().second;
    else
      out.emplace_back(p, 1);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<long long> divisors(long long n) {
  if (n <= 0) throw std::invalid_argument("divisors: argument must be positive");
  std::vector<long long> small, large;
  for (long long d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

bool is_square(const Int& n) { return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0; }

Int squarefree_kernel(const Int& n) {
  Int k = 1;
  for (const auto& [p, e] : factor(abs(n)))
    if (e & 1) k *= p;
  return k;
}

int moebius(long long n) {
  if (n <= 0) throw std::invalid_argument("moebius: n must be positive");
  int mu = 1;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

long long sigma_divisors(long long k) {
  if (k <= 0) return 0;
  long long s = 0;
  for (long long d = 1; d * d <= k; ++d) {
    if (k % d) continue;
    s += d;
    if (d != k / d) s += k / d;
  }
  return s;
}

Int sigma_divisors(const Rat& k) {
  if (k.get_den() != 1 || k <= 0) return 0;
  Int s = 1;
  for (const auto& [p, e] : factor(k.get_num())) {
    Int pk = 1, t = 1;
    for (unsigned i = 0; i < e; ++i) {
      pk *= p;
      t += pk;
    }
    s *= t;
  }
  return s;
}

std::vector<long long> sigma_table(long long nmax) {
  std::vector<long long> s(static_cast<size_t>(std::max(nmax, 0LL)) + 1, 0);
  for (long long d = 1; d <= nmax; ++d)
    for (long long m = d; m <= nmax; m += d) s[m] += d;
  return s;
}

RadFamily rad_family(const Int& m) {
  if (m <= 0) throw std::invalid_argument("rad_family: m must be positive");
  RadFamily r{1, 1, 1, 1, 1, 1};
  for (const auto& [p, e] : factor(m)) {
    if (e % 2 == 0)
      r.radE *= p;
    else
      r.radO *= p;
  }
  r.rad = r.radE * r.radO;
  r.radp = r.radE * r.radE * r.radO;
  r.irad = m / r.rad;
  r.iradp = m / r.radp;
  return r;
}

void GaussValue::canonicalize() {
  i_power = ((i_power % 4) + 4) % 4;
  if (coeff == 0) {
    sqrt_part = 1;
    i_power = 0;
    return;
  }
  if (sqrt_part <= 0) throw std::invalid_argument("GaussValue: sqrt_part must be positive");
  Int outside = 1, inside = 1;
  for (const auto& [p, e] : factor(sqrt_part)) {
    for (unsigned i = 0; i < e / 2; ++i) outside *= p;
    if (e & 1) inside *= p;
  }
  coeff *= outside;
  coeff.canonicalize();
  sqrt_part = inside;
}

GaussValue gauss_sum_formula(const Int& m, const Int& t) {
  if (m <= 0 || mpz_even_p(m.get_mpz_t())) throw std::invalid_argument("gauss_sum_formula: m must be odd and positive");
  GaussValue g;
  RadFamily rf = rad_family(m);
  if (!mpz_divisible_p(t.get_mpz_t(), rf.irad.get_mpz_t())) {
    g.canonicalize();
    return g;
  }
  unsigned u = 0;
  for (const auto& [p, e] : factor(rf.radO))
    if (p % 4 == 3) ++u;
  // m / sqrt(radp) = m sqrt(radO) / (radE radO)
  Rat c(m, rf.radE * rf.radO);
  c.canonicalize();
  c *= kronecker(Int(t / rf.iradp), rf.radO);
  Int s = t / rf.irad;
  for (const auto& [p, e] : factor(rf.radE)) {
    int kr = kronecker(s, p);
    c *= Int(p - 1 - p * kr * kr);
  }
  g.coeff = c;
  g.sqrt_part = rf.radO;
  g.i_power = static_cast<int>((u * u) % 4);
  g.canonicalize();
  return g;
}

}  // namespace etaq
