// Acceptance suite: runs every release criterion end to end, prints one
// PASS/FAIL line per criterion with its elapsed time, and exits nonzero if
// anything failed. All checks are exact; the time limits are part of the
// criteria and enforced.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "parkgram/counting.hpp"
#include "parkgram/grammar.hpp"
#include "parkgram/parking.hpp"
#include "test_util.hpp"

using namespace parkgram;
using testutil::Rng;

namespace {

struct Criterion {
  int id;
  std::string label;
  double time_limit_s;
  std::function<bool(std::string&)> run;
};

BigInt ipow(long long base, int e) {
  return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(e));
}

bool expect(bool ok, std::string& detail, const std::string& message) {
  if (!ok && detail.empty()) detail = message;
  return ok;
}

// 1. brute-force |PF_n| = (n+1)^(n-1) for n = 1..6
bool classical_counts(std::string& detail) {
  const std::array<long long, 6> expected{1, 3, 16, 125, 1296, 16807};
  bool ok = true;
  for (int n = 1; n <= 6; ++n) {
    ThresholdVector u;
    for (int i = 1; i <= n; ++i) u.push_back(Rational(i));
    auto count = enumerate_u_parking(u).size();
    ok &= expect(count == static_cast<size_t>(expected[n - 1]), detail,
                 "n=" + std::to_string(n) + " gave " + std::to_string(count));
  }
  return ok;
}

// 2. D^n(S) under G at A=S=1 equals (n+1)^(n-1) for n = 1..8
bool grammar_g_counts(std::string& detail) {
  Grammar g = builtin_grammar("G");
  bool ok = true;
  for (int n = 1; n <= 8; ++n) {
    Rational v =
        derive_n(g, Polynomial::var("S"), n).substitute({{"A", 1}, {"S", 1}}).constant_value();
    ok &= expect(v == Rational(ipow(n + 1, n - 1)), detail,
                 "n=" + std::to_string(n) + " gave " + v.str());
  }
  return ok;
}

// 3. weighted substitution of D^n(z) under H and the forest coefficient table
bool grammar_h_counts(std::string& detail) {
  Grammar h = builtin_grammar("H");
  bool ok = true;
  for (int n = 1; n <= 7; ++n) {
    Polynomial d = derive_n(h, Polynomial::var("z"), n);
    for (int a = 1; a <= 4; ++a)
      for (int b = 1; b <= 4; ++b) {
        Rational v = d.substitute({{"y", 1}, {"z", 1}, {"x", a}, {"w", b}}).constant_value();
        ok &= expect(v == Rational(BigInt(a) * ipow(a + b * n, n - 1)), detail,
                     "a=" + std::to_string(a) + " b=" + std::to_string(b) +
                         " n=" + std::to_string(n));
      }
    auto table = planted_forest_coefficients(n);
    ok &= expect(table.size() == static_cast<size_t>(n), detail,
                 "table size at n=" + std::to_string(n));
    for (int k = 1; k <= n; ++k)
      ok &= expect(table[k] == binomial(n - 1, k - 1) * ipow(n, n - k), detail,
                   "p_k mismatch at n=" + std::to_string(n) + " k=" + std::to_string(k));
  }
  return ok;
}

// 4. brute force equals a^(b-1) for the listed coprime pairs
bool rational_counts(std::string& detail) {
  bool ok = true;
  for (auto [a, b] :
       std::vector<std::pair<int, int>>{{2, 3}, {3, 2}, {3, 4}, {5, 3}, {4, 7}}) {
    auto count = enumerate_u_parking(ab_threshold_vector(a, b, b)).size();
    ok &= expect(BigInt(count) == count_rational(a, b), detail,
                 "(" + std::to_string(a) + "," + std::to_string(b) + ") gave " +
                     std::to_string(count));
  }
  return ok;
}

// 5. five computation routes agree for (3,2,2) and (2,3,2)
bool periodic_agreement(std::string& detail) {
  bool ok = true;
  for (auto [a, b, k] : std::vector<std::array<int, 3>>{{3, 2, 2}, {2, 3, 2}}) {
    Rational specsum = count_periodic_specsum(a, b, k);
    BigInt scale = Rational(b).pow(k * b).num();
    BigInt brute(enumerate_u_parking(ab_threshold_vector(a, b, k * b)).size());
    std::string tag = "(" + std::to_string(a) + "," + std::to_string(b) + "," +
                      std::to_string(k) + ")";
    ok &= expect(specsum == Rational(brute), detail, tag + " specsum vs brute");
    ok &= expect(count_periodic_scaled(a, b, k) == brute * scale, detail, tag + " scaled");
    ok &= expect(count_periodic_egf(a, b, k) == brute, detail, tag + " egf");
    ok &= expect(count_periodic_grammar(a, b, k) == brute * scale, detail, tag + " grammar");
  }
  return ok;
}

// 6. scaling identity at random rational points
bool scaling_identity(std::string& detail) {
  Rng rng(88551);
  bool ok = true;
  for (int trial = 0; trial < 100; ++trial) {
    int n = rng.int_in(1, 6);
    std::vector<Rational> u;
    for (int i = 0; i < n; ++i) u.push_back(rng.rational(6, 4));
    for (const Rational& k : {Rational(2), Rational(3), Rational::parse("5/2")})
      ok &= expect(check_scaling(u, k), detail, "trial " + std::to_string(trial));
  }
  return ok;
}

// 7. Abel identity and its uniform-argument corollary at random points
bool abel_identities(std::string& detail) {
  Rng rng(88552);
  bool ok = true;
  for (int trial = 0; trial < 100; ++trial) {
    int k = rng.int_in(1, 4);
    int n = rng.int_in(1, 6);
    std::vector<Rational> xs;
    for (int i = 0; i < k; ++i) xs.push_back(rng.nonzero_rational(6, 3));
    auto [lhs, rhs] = abel_identity_sides(xs, n);
    ok &= expect(lhs == rhs, detail, "abel trial " + std::to_string(trial));
  }
  int done = 0;
  while (done < 100) {
    int k = rng.int_in(1, 4);
    int n = rng.int_in(1, 6);
    Rational x = rng.rational(9, 3);
    if (x == Rational(k)) continue;
    auto [lhs, rhs] = abel_uniform_sides(x, n, k);
    ok &= expect(lhs == rhs, detail, "uniform trial " + std::to_string(done));
    ++done;
  }
  return ok;
}

// 8. q-analogues against brute force
bool q_analogues(std::string& detail) {
  bool ok = true;
  for (int n = 1; n <= 6; ++n) {
    ThresholdVector u;
    for (int i = 1; i <= n; ++i) u.push_back(Rational(i));
    ok &= expect(q_classical(n) == q_bruteforce(u), detail, "classical n=" + std::to_string(n));
  }
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      for (int n = 1; n <= 5; ++n) {
        WeightVector x(n, Rational(b));
        x[0] = a;
        ok &= expect(q_basic(a, b, n) == q_bruteforce(prefix_sums(x)), detail,
                     "basic " + std::to_string(a) + "," + std::to_string(b) + "," +
                         std::to_string(n));
      }
  for (int l = 1; l <= 5; ++l)
    for (int k = 0; k <= 3; ++k) {
      WeightVector x(l, Rational(k));
      x[0] = 1;
      ok &= expect(q_unit_step(l, k) == q_bruteforce(prefix_sums(x)), detail,
                   "unit step " + std::to_string(l) + "," + std::to_string(k));
    }
  for (auto [a, b, d] : std::vector<std::array<int, 3>>{{3, 2, 1}, {3, 2, 2}, {4, 3, 1}}) {
    ok &= expect(q_periodic(a, b, d) == q_bruteforce(ab_threshold_vector(a, b, d * b)), detail,
                 "periodic (" + std::to_string(a) + "," + std::to_string(b) + "," +
                     std::to_string(d) + ")");
  }
  return ok;
}

// 9. block decomposition soundness over all 243 (6,4)-parking functions
bool decomposition_soundness(std::string& detail) {
  const int a = 3, b = 2, k = 2;
  auto specs = spec_compositions(k, b);
  auto members = enumerate_u_parking(ab_threshold_vector(a, b, k * b));
  bool ok = expect(members.size() == 243, detail, "member count");
  for (const PFSeq& c : members) {
    auto dec = decompose_blocks(c, a, b, k);
    ok &= expect(std::find(specs.begin(), specs.end(), dec.lengths) != specs.end(), detail,
                 "lengths outside spec(2,2)");
    std::set<int> seen;
    for (const auto& codes : dec.positions)
      for (int r : codes) seen.insert(r);
    ok &= expect(seen.size() == c.size(), detail, "positions do not partition");
    ok &= expect(ones_count(c) == ones_count(dec.blocks[0]), detail, "a 1 escaped block 1");
    for (int t = 1; t <= k; ++t) {
      PFSeq norm = normalize_block(dec.blocks[t - 1], t, dec.lengths, a, b);
      WeightVector x(norm.size(), Rational(a - 1, b));
      if (!x.empty()) x[0] = 1;
      ok &= expect(is_x_parking(norm, x), detail, "normalized block not x*-parking");
    }
  }
  return ok;
}

// 10. randomized property suites, >= 500 cases total under one fixed seed
bool property_suites(std::string& detail) {
  Rng rng(88553);
  Grammar g = builtin_grammar("H");
  const std::vector<VarId> vars{"z", "x", "y", "w"};
  bool ok = true;

  for (int trial = 0; trial < 200; ++trial) {  // ring laws + canonical form
    Polynomial p = rng.polynomial(vars, 4, -2, 3);
    Polynomial q = rng.polynomial(vars, 4, -2, 3);
    Polynomial r = rng.polynomial(vars, 4, -2, 3);
    ok &= expect((p + q) + r == p + (q + r), detail, "associativity");
    ok &= expect(p * q == q * p, detail, "commutativity");
    ok &= expect(p * (q + r) == p * q + p * r, detail, "distributivity");
    ok &= expect((p + Rational(-1) * p).is_zero(), detail, "additive inverse");
    ok &= expect((p * q).is_canonical() && (p + q).is_canonical(), detail, "canonical form");
  }

  for (int trial = 0; trial < 200; ++trial) {  // linearity + Leibniz
    Polynomial p = rng.polynomial(vars, 3, -2, 3);
    Polynomial q = rng.polynomial(vars, 3, -2, 3);
    ok &= expect(derive(g, p + q) == derive(g, p) + derive(g, q), detail, "linearity");
    ok &= expect(derive(g, p * q) == derive(g, p) * q + p * derive(g, q), detail, "Leibniz");
    ok &= expect(derive(g, p).is_canonical(), detail, "derivative canonical");
  }

  int done = 0;
  while (done < 150) {  // conversion round trips over random (a,b)-parking functions
    int b = rng.int_in(2, 7);
    int a = rng.int_in(1, 7);
    if (std::gcd(a, b) != 1) continue;
    ThresholdVector u = ab_threshold_vector(a, b, b);
    PFSeq c = rng.pf_sequence(b, static_cast<int>(u.back().floor().convert_to<long long>()));
    if (!is_u_parking(c, u)) continue;
    ABSeq ab = u_to_ab_pf(c);
    ok &= expect(ab_to_u_pf(ab) == c, detail, "ab/u round trip");
    LatticePath path = dyck_path_of(ab, a, b);
    ok &= expect(path.heights() == ab, detail, "path heights round trip");
    ok &= expect(LatticePath::parse(path.str()).heights() == ab, detail, "path text round trip");
    ++done;
  }
  return ok;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {1, "classical counts (n+1)^(n-1), n <= 6, brute force", 10.0, classical_counts},
      {2, "grammar G: D^n(S) at A=S=1, n <= 8", 30.0, grammar_g_counts},
      {3, "grammar H: a(a+bn)^(n-1) sweep + forest coefficients", 60.0, grammar_h_counts},
      {4, "rational counts a^(b-1), five slopes", 10.0, rational_counts},
      {5, "periodic counts: five routes agree, (3,2,2) and (2,3,2)", 60.0, periodic_agreement},
      {6, "scaling identity, 100 random rational vectors x 3 factors", 60.0, scaling_identity},
      {7, "Abel identity + uniform corollary, 100 random cases each", 60.0, abel_identities},
      {8, "q-analogues vs brute force", 60.0, q_analogues},
      {9, "block decomposition soundness over all 243 cases", 60.0, decomposition_soundness},
      {10, "randomized property suites (>= 500 cases, fixed seed)", 60.0, property_suites},
  };

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = criterion.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed > criterion.time_limit_s) {
      ok = false;
      if (detail.empty()) detail = "exceeded time limit";
    }
    std::printf("%s  criterion %2d: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", criterion.id,
                criterion.label.c_str(), elapsed, detail.empty() ? "" : " -- ",
                detail.c_str());
    failures += ok ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
