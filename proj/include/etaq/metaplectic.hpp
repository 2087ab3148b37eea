#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "etaq/arith.hpp"

namespace etaq {

struct MatZ {
  Int a = 1, b = 0, c = 0, d = 1;

  Int det() const { return a * d - b * c; }
  MatZ operator*(const MatZ& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
  MatZ operator-() const { return {-a, -b, -c, -d}; }
  bool operator==(const MatZ&) const = default;
  std::string str() const;

  static MatZ identity() { return {1, 0, 0, 1}; }
  static MatZ T(const Int& k = 1) { return {1, k, 0, 1}; }
  static MatZ S() { return {0, -1, 1, 0}; }
};

struct MetaElem {
  MatZ mat;
  int eps = 1;

  bool operator==(const MetaElem&) const = default;
};

int cocycle_sigma(const MatZ& A, const MatZ& B);
MetaElem meta_compose(const MetaElem& x, const MetaElem& y);
MetaElem meta_inverse(const MetaElem& x);

std::vector<MatZ> coset_reps_doubledecomp(long long l, long long N, long long m);

struct Ab0dDecomposition {
  MatZ gamma1;
  MatZ alpha;
  MatZ gamma2;
};

Ab0dDecomposition decompose_ab0d(const Int& a, const Int& b, const Int& d, long long N, long long l);

MatZ random_gamma0(long long N, unsigned word_length, std::uint64_t seed);

bool in_gamma0(const MatZ& m, const Int& N);

}  // namespace etaq
