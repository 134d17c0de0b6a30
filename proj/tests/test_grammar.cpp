#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <vector>

#include "parkgram/config.hpp"
#include "parkgram/counting.hpp"
#include "parkgram/grammar.hpp"
#include "test_util.hpp"

using namespace parkgram;

namespace {

Polynomial P(std::string_view text) { return Polynomial::parse(text); }

BigInt ipow(long long base, int e) {
  return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(e));
}

// Independent second route for D^n(S) under G: terms kept as a flat list of
// (A-exp, S-exp, coeff) and differentiated by the explicit two-term rule
// D(A^a S^s) = a A^(a+2) S^(s+1) + s A^(a+1) S^(s+1).
std::map<int, BigInt> tree_table_by_lists(int n) {
  std::vector<std::pair<std::pair<int, int>, BigInt>> terms{{{0, 1}, 1}};
  for (int step = 0; step < n; ++step) {
    std::map<std::pair<int, int>, BigInt> next;
    for (const auto& [exps, coeff] : terms) {
      auto [a, s] = exps;
      if (a > 0) next[{a + 2, s + 1}] += coeff * a;
      if (s > 0) next[{a + 1, s + 1}] += coeff * s;
    }
    terms.assign(next.begin(), next.end());
  }
  std::map<int, BigInt> table;
  for (const auto& [exps, coeff] : terms) {
    REQUIRE(exps.second == n + 1);
    table[exps.first - n] = coeff;
  }
  return table;
}

}  // namespace

TEST_CASE("built-in rule sets match their definitions") {
  Grammar g = builtin_grammar("G");
  REQUIRE(g.rules().size() == 2);
  CHECK(*g.rule_for("A") == P("A^3*S"));
  CHECK(*g.rule_for("S") == P("A*S^2"));

  Grammar h = builtin_grammar("H");
  CHECK(*h.rule_for("z") == P("z*x*y"));
  CHECK(*h.rule_for("x") == P("x*y*w"));
  CHECK(*h.rule_for("y") == P("y^3*w"));
  CHECK(*h.rule_for("w") == P("y*w^2"));

  Grammar k1 = builtin_grammar("K:1");
  REQUIRE(k1.rule_for("t1") != nullptr);  // explicit rule to zero, not "no rule"
  CHECK(k1.rule_for("t1")->is_zero());
  CHECK(*k1.rule_for("z1") == P("z1*x1*y1*t1"));
  CHECK(*k1.rule_for("w1") == P("y1*w1^2*t1"));

  // Hprime:1 is H with z,x renamed to z1,x1.
  Grammar hp = builtin_grammar("Hprime:1");
  CHECK(*hp.rule_for("z1") == P("z1*x1*y"));
  CHECK(*hp.rule_for("x1") == P("x1*y*w"));
  CHECK(*hp.rule_for("y") == *h.rule_for("y"));
  CHECK(*hp.rule_for("w") == *h.rule_for("w"));

  Grammar h1 = builtin_grammar("H1:2:3");
  CHECK(*h1.rule_for("z") == P("z*(x1+x2)*y"));
  CHECK(*h1.rule_for("x2") == P("x2*y*(w1+w2+w3)"));
  CHECK(*h1.rule_for("w3") == P("w3*y*(w1+w2+w3)"));

  CHECK_THROWS_AS(builtin_grammar("Q"), Error);
  CHECK_THROWS_AS(builtin_grammar("K:0"), Error);
  CHECK_THROWS_AS(builtin_grammar("H1:1"), Error);
}

TEST_CASE("grammar text format round-trips, keeping explicit zero rules") {
  Grammar k = builtin_grammar("K:1");
  Grammar back = Grammar::from_text(k.to_text());
  CHECK(back.rules() == k.rules());
  REQUIRE(back.rule_for("t1") != nullptr);
  CHECK(back.rule_for("t1")->is_zero());

  Grammar parsed = Grammar::from_text("A -> A^3*S\nS -> A*S^2\n");
  CHECK(parsed.rules() == builtin_grammar("G").rules());
  CHECK_THROWS_AS(Grammar::from_text("A = S"), Error);
}

TEST_CASE("derive follows rules, Leibniz, and kills constants") {
  Grammar g = builtin_grammar("G");
  CHECK(derive(g, Polynomial::var("S")) == P("A*S^2"));
  // D(A*S) = D(A)*S + A*D(S) = A^3*S*S + A*A*S^2
  CHECK(derive(g, P("A*S")) == P("A^3*S^2 + A^2*S^2"));
  CHECK(derive(g, P("1")).is_zero());
  CHECK(derive(g, P("7*c")).is_zero());  // no rule for c
}

TEST_CASE("derive_n matches the closed forms") {
  Grammar g = builtin_grammar("G");
  CHECK(derive_n(g, Polynomial::var("S"), 0) == Polynomial::var("S"));

  for (int n = 1; n <= 8; ++n) {
    Rational value =
        derive_n(g, Polynomial::var("S"), n).substitute({{"A", 1}, {"S", 1}}).constant_value();
    CHECK(value == Rational(ipow(n + 1, n - 1)));
  }

  // (a,b,n) = (2,3,4): a(a+bn)^(n-1) = 2*14^3
  Grammar h = builtin_grammar("H");
  Rational v =
      derive_n(h, Polynomial::var("z"), 4).substitute({{"y", 1}, {"z", 1}, {"x", 2}, {"w", 3}}).constant_value();
  CHECK(v == Rational(5488));

  CHECK_THROWS_AS(derive_n(g, Polynomial::var("S"), limits().derive_cap + 1), Error);
}

TEST_CASE("derivative is linear and Leibniz on random polynomials") {
  testutil::Rng rng(424201);
  Grammar g = builtin_grammar("H");
  const std::vector<VarId> vars{"z", "x", "y", "w"};
  for (int trial = 0; trial < 100; ++trial) {
    Polynomial p = rng.polynomial(vars, 4, -2, 3);
    Polynomial q = rng.polynomial(vars, 4, -2, 3);
    CHECK(derive(g, p + q) == derive(g, p) + derive(g, q));
    CHECK(derive(g, p * q) == derive(g, p) * q + p * derive(g, q));
    CHECK(derive(g, p).is_canonical());
  }
}

TEST_CASE("chain rule on integer powers, including negative ones") {
  Grammar g = builtin_grammar("G");
  for (int n = -3; n <= 5; ++n) {
    Polynomial vn = n >= 0 ? P("S").pow(n) : Polynomial::monomial(Monomial::var("S", n), 1);
    Polynomial expected = Rational(n) * Polynomial::monomial(Monomial::var("S", n - 1), 1) * P("A*S^2");
    CHECK(derive(g, vn) == expected);
  }
}

TEST_CASE("D^n(S) is homogeneous of the tree shape") {
  Grammar g = builtin_grammar("G");
  for (int n = 1; n <= 6; ++n) {
    Polynomial d = derive_n(g, Polynomial::var("S"), n);
    for (const auto& [m, c] : d.terms()) {
      CHECK(m.exp_of("S") == n + 1);
      CHECK(m.exp_of("A") >= n);
      CHECK(m.exp_of("A") <= 2 * n);
    }
  }
}

TEST_CASE("tree coefficient table") {
  CHECK(tree_coefficient_table(1) == std::map<int, BigInt>{{0, 1}});

  // frozen from the independent list-route expansion of D^4(S)
  std::map<int, BigInt> expected4{{0, 24}, {1, 46}, {2, 40}, {3, 15}};
  CHECK(tree_coefficient_table(4) == expected4);
  CHECK(tree_table_by_lists(4) == expected4);

  for (int n = 1; n <= 8; ++n) {
    auto table = tree_coefficient_table(n);
    CHECK(table == tree_table_by_lists(n));
    BigInt total = 0;
    for (const auto& [k, v] : table) total += v;
    CHECK(total == ipow(n + 1, n - 1));
  }
}

TEST_CASE("planted forest coefficients match the closed form") {
  CHECK(planted_forest_coefficients(1) == std::map<int, BigInt>{{1, 1}});

  auto table3 = planted_forest_coefficients(3);
  CHECK(table3[1] == 9);  // C(2,0)*3^2

  for (int n : {2, 3, 4, 5}) {
    auto table = planted_forest_coefficients(n);
    REQUIRE(table.size() == static_cast<size_t>(n));
    for (int k = 1; k <= n; ++k)
      CHECK(table[k] == binomial(n - 1, k - 1) * ipow(n, n - k));
  }
}

TEST_CASE("Faa di Bruno coefficients match the closed form") {
  CHECK(faa_di_bruno_coefficients(1) == std::map<std::vector<int>, BigInt>{{{1}, 1}});

  auto table3 = faa_di_bruno_coefficients(3);
  CHECK(table3[{1, 1, 0}] == 3);

  for (int k : {2, 3, 4, 5}) {
    auto table = faa_di_bruno_coefficients(k);
    for (const auto& [key, coeff] : table) {
      long long weighted = 0;
      BigInt expected = factorial(k);
      for (int i = 1; i <= k; ++i) {
        weighted += static_cast<long long>(i) * key[i - 1];
        expected /= factorial(key[i - 1]) * ipow(i, key[i - 1]);
      }
      CHECK(weighted == k);
      CHECK(coeff == expected);
    }
    // completeness: every solution of sum(i*t_i) = k appears
    size_t solutions = 0;
    std::vector<int> t(k, 0);
    auto count = [&](auto&& self, int i, int rest) -> void {
      if (i == k) {
        if (rest == 0) ++solutions;
        return;
      }
      for (t[i] = 0; t[i] * (i + 1) <= rest; ++t[i]) self(self, i + 1, rest - t[i] * (i + 1));
      t[i] = 0;
    };
    count(count, 0, k);
    CHECK(table.size() == solutions);
  }
}

TEST_CASE("weighted substitution of D^n(z) under H matches a(a+bn)^(n-1)") {
  Grammar h = builtin_grammar("H");
  for (int n = 1; n <= 7; ++n) {
    Polynomial d = derive_n(h, Polynomial::var("z"), n);
    for (int a = 1; a <= 4; ++a) {
      for (int b = 1; b <= 4; ++b) {
        Rational value =
            d.substitute({{"y", 1}, {"z", 1}, {"x", a}, {"w", b}}).constant_value();
        CHECK(value == Rational(BigInt(a) * ipow(a + b * n, n - 1)));
      }
    }
  }
}

TEST_CASE("expanded-alphabet grammar H1 agrees with the closed form") {
  for (int a = 1; a <= 3; ++a) {
    for (int b = 1; b <= 3; ++b) {
      Grammar h1 = builtin_grammar(GrammarName{GrammarName::Kind::H1, a, b});
      for (int n = 1; n <= 5; ++n) {
        Polynomial d = derive_n(h1, Polynomial::var("z"), n);
        std::map<VarId, Rational> ones{{"z", 1}, {"y", 1}};
        for (int i = 1; i <= a; ++i) ones["x" + std::to_string(i)] = 1;
        for (int j = 1; j <= b; ++j) ones["w" + std::to_string(j)] = 1;
        CHECK(d.substitute(ones).constant_value() == Rational(BigInt(a) * ipow(a + b * n, n - 1)));
      }
    }
  }
}

TEST_CASE("grammar K with all t_i = 1 equals the unconstrained Leibniz sum") {
  const int a = 3, b = 2, k = 2;
  Grammar g = builtin_grammar("K:2");
  Polynomial d = derive_n(g, P("z1*z2"), k * b);
  std::map<VarId, Rational> assign;
  for (int i = 1; i <= k; ++i) {
    std::string s = std::to_string(i);
    assign["z" + s] = 1;
    assign["y" + s] = 1;
    assign["x" + s] = b;
    assign["w" + s] = a - 1;
    assign["t" + s] = 1;
  }
  Rational lhs = d.substitute(assign).constant_value();

  // sum over all weak compositions (j1,j2) of kb, D^j(z)| = b(b+j(a-1))^(j-1)
  auto closed = [&](int j) {
    return j == 0 ? Rational(1) : Rational(b) * Rational(b + j * (a - 1)).pow(j - 1);
  };
  Rational rhs = 0;
  for (int j1 = 0; j1 <= k * b; ++j1) {
    int j2 = k * b - j1;
    rhs += Rational(multinomial(k * b, {j1, j2})) * closed(j1) * closed(j2);
  }
  CHECK(lhs == rhs);
}
