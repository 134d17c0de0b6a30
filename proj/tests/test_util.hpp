#pragma once

#include <random>
#include <vector>

#include "parkgram/polynomial.hpp"

namespace parkgram::testutil {

// Deterministic generators for the randomized suites. Every test fixes its
// own seed so failures reproduce.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  int int_in(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(engine_);
  }

  Rational rational(int num_abs, int den_max) {
    return {BigInt(int_in(-num_abs, num_abs)), BigInt(int_in(1, den_max))};
  }

  Rational nonzero_rational(int num_abs, int den_max) {
    while (true) {
      Rational r = rational(num_abs, den_max);
      if (!r.is_zero()) return r;
    }
  }

  Rational positive_rational(int num_max, int den_max) {
    return {BigInt(int_in(1, num_max)), BigInt(int_in(1, den_max))};
  }

  Polynomial polynomial(const std::vector<VarId>& vars, int max_terms, int min_exp, int max_exp) {
    Polynomial p;
    int terms = int_in(0, max_terms);
    for (int t = 0; t < terms; ++t) {
      Monomial m;
      for (const VarId& v : vars) {
        int e = int_in(min_exp, max_exp);
        if (e != 0 && int_in(0, 1) == 1) m.exps[v] = e;
      }
      p += Polynomial::monomial(m, rational(3, 2));
    }
    return p;
  }

  std::vector<int> pf_sequence(int n, int max_value) {
    std::vector<int> c(n);
    for (int& v : c) v = int_in(1, max_value);
    return c;
  }

private:
  std::mt19937_64 engine_;
};

}  // namespace parkgram::testutil
