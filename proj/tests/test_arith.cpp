#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "etaq/arith.hpp"
#include "etaq/hpfloat.hpp"
#include "oracles.hpp"

using namespace etaq;

TEST_CASE("kronecker rules") {
  CHECK(kronecker(7LL, 1LL) == 1);
  CHECK(kronecker(3LL, 2LL) == -1);
  CHECK(kronecker(5LL, 0LL) == 0);
  CHECK(kronecker(1LL, 0LL) == 1);
  CHECK(kronecker(-1LL, 0LL) == 1);
  CHECK(kronecker(2LL, 15LL) == 1);
  CHECK(kronecker(-5LL, -1LL) == -1);
  CHECK(kronecker(5LL, -1LL) == 1);
  CHECK(kronecker(0LL, -1LL) == 1);
  CHECK(kronecker(4LL, 2LL) == 0);
  for (long long m : {1LL, 3LL, 5LL, 7LL, 9LL, 11LL, 13LL, 15LL}) {
    int expect = (m % 8 == 1 || m % 8 == 7) ? 1 : -1;
    CHECK(kronecker(m, 2LL) == expect);
  }
}

TEST_CASE("kronecker agrees with gmp and between integer widths") {
  for (long long m = -60; m <= 60; ++m)
    for (long long n = -60; n <= 60; ++n) {
      int g = mpz_kronecker(Int(static_cast<long>(m)).get_mpz_t(), Int(static_cast<long>(n)).get_mpz_t());
      REQUIRE(kronecker(m, n) == g);
      REQUIRE(kronecker(Int(static_cast<long>(m)), Int(static_cast<long>(n))) == g);
    }
}

TEST_CASE("kronecker legendre symbols against residue tables") {
  for (long long p : {3LL, 5LL, 7LL, 11LL, 13LL, 101LL}) {
    for (long long a = 0; a < p; ++a) {
      CHECK(kronecker(a, p) == oracle::legendre_by_table(a, p));
    }
  }
}

TEST_CASE("kronecker multiplicativity and reciprocity") {
  for (long long m = -40; m <= 40; ++m)
    for (long long n1 = 1; n1 <= 40; ++n1)
      for (long long n2 = 1; n2 <= 40; ++n2) {
        if (gcd_ll(m, n1 * n2) != 1) continue;
        REQUIRE(kronecker(m, n1 * n2) == kronecker(m, n1) * kronecker(m, n2));
      }
  for (long long m1 = -199; m1 <= 199; m1 += 2)
    for (long long m2 = -199; m2 <= 199; m2 += 2) {
      if (gcd_ll(m1, m2) != 1) continue;
      int eps = (m1 < 0 && m2 < 0) ? -1 : 1;
      int sign = (((m1 - 1) / 2) % 2 != 0 && ((m2 - 1) / 2) % 2 != 0) ? -1 : 1;
      REQUIRE(kronecker(m1, m2) * kronecker(m2, m1) == eps * sign);
    }
}

TEST_CASE("moebius") {
  CHECK(moebius(1) == 1);
  CHECK(moebius(6) == 1);
  CHECK(moebius(12) == 0);
  CHECK(moebius(30) == -1);
  CHECK_THROWS_AS(moebius(0), std::invalid_argument);
  for (long long n = 1; n <= 10000; ++n) {
    int s = 0;
    for (long long t : divisors(n)) s += moebius(t);
    REQUIRE(s == (n == 1 ? 1 : 0));
  }
}

TEST_CASE("sigma") {
  CHECK(sigma_divisors(Rat(6)) == 12);
  CHECK(sigma_divisors(Rat(1)) == 1);
  CHECK(sigma_divisors(make_rat(3, 2)) == 0);
  CHECK(sigma_divisors(Rat(0)) == 0);
  CHECK(sigma_divisors(Rat(-4)) == 0);
  auto tab = sigma_table(500);
  for (long long k = 1; k <= 500; ++k) {
    REQUIRE(tab[k] == sigma_divisors(k));
    REQUIRE(Int(static_cast<long>(tab[k])) == sigma_divisors(Rat(zint(k))));
  }
}

TEST_CASE("rad family") {
  auto r1 = rad_family(1);
  CHECK(r1.rad == 1);
  CHECK(r1.iradp == 1);
  auto r9 = rad_family(9);
  CHECK(r9.radE == 3);
  CHECK(r9.radO == 1);
  CHECK(r9.rad == 3);
  CHECK(r9.radp == 9);
  CHECK(r9.irad == 3);
  CHECK(r9.iradp == 1);
  auto r45 = rad_family(45);
  CHECK(r45.radE == 3);
  CHECK(r45.radO == 5);
  CHECK(r45.rad == 15);
  CHECK(r45.radp == 45);
  CHECK(r45.irad == 3);
  CHECK(r45.iradp == 1);
  CHECK_THROWS_AS(rad_family(0), std::invalid_argument);
  for (long m = 1; m <= 100000; ++m) {
    auto r = rad_family(m);
    Int g;
    mpz_gcd(g.get_mpz_t(), r.radE.get_mpz_t(), r.radO.get_mpz_t());
    REQUIRE(m % r.rad == 0);
    REQUIRE(m % r.radp == 0);
    REQUIRE(r.radE * r.radO == r.rad);
    REQUIRE(g == 1);
  }
}

TEST_CASE("factor handles large cofactors") {
  Int n = Int("2154851") * Int("385954601") * 7;
  auto f = factor(n);
  REQUIRE(f.size() == 3);
  CHECK(f[0].first == 7);
  CHECK(f[1].first == Int("2154851"));
  CHECK(f[2].first == Int("385954601"));
  Int big = Int("58346710427");
  CHECK(factor(big).size() == 1);
}

TEST_CASE("gauss sums: examples") {
  auto one = gauss_sum_bruteforce(1, 5);
  CHECK(std::abs(one.re.to_double() - 1.0) < 1e-30);
  auto g3 = gauss_sum_bruteforce(3, 1);
  CHECK(std::abs(g3.re.to_double()) < 1e-30);
  CHECK(std::abs(g3.im.to_double() - std::sqrt(3.0)) < 1e-12);
  auto g9 = gauss_sum_bruteforce(9, 3);
  CHECK(std::abs(g9.re.to_double() + 3.0) < 1e-30);

  GaussValue f1 = gauss_sum_formula(1, 0);
  CHECK(f1.coeff == 1);
  CHECK(f1.sqrt_part == 1);
  CHECK(f1.i_power == 0);
  GaussValue f3 = gauss_sum_formula(3, 1);
  CHECK(f3.coeff == 1);
  CHECK(f3.sqrt_part == 3);
  CHECK(f3.i_power == 1);
  GaussValue f9 = gauss_sum_formula(9, 1);
  CHECK(f9.coeff == 0);
  CHECK(f9.sqrt_part == 1);
  GaussValue f93 = gauss_sum_formula(9, 3);
  CHECK(f93.coeff == -3);
  CHECK_THROWS_AS(gauss_sum_formula(4, 1), std::invalid_argument);
  CHECK_THROWS_AS(gauss_sum_bruteforce(0, 1), std::invalid_argument);
}

TEST_CASE("gauss sums: formula matches brute force on a grid") {
  auto report = oracle::gauss_grid_check(301, 4, 7);
  CHECK(report.failures == 0);
  CHECK(report.pairs > 500);
  CHECK(report.max_error < 1e-20);
}
