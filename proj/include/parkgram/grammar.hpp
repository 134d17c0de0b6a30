#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "parkgram/polynomial.hpp"

namespace parkgram {

/// A context-free grammar here is just its substitution rules: a finite map
/// variable -> polynomial. Variables without a rule are constants and
/// differentiate to zero. A rule mapping to the zero polynomial is kept
/// distinct from "no rule" so grammar definitions round-trip through text.
class Grammar {
public:
  explicit Grammar(std::map<VarId, Polynomial> rules);

  const std::map<VarId, Polynomial>& rules() const { return rules_; }
  const Polynomial* rule_for(const VarId& v) const;

  /// One rule per line: "<var> -> <polynomial-expression>", sorted by variable.
  std::string to_text() const;
  static Grammar from_text(std::string_view text);

private:
  std::map<VarId, Polynomial> rules_;
};

/// Built-in rule sets, addressable by name string:
///   "G"          A -> A^3*S, S -> A*S^2
///   "H"          z -> z*x*y, x -> x*y*w, y -> y^3*w, w -> y*w^2
///   "Hprime:k"   z_i -> z_i*x_i*y, x_i -> x_i*y*w (i = 1..k), plus y, w as in H
///   "H1:a:b"     z -> z*(x1+..+xa)*y, x_i -> x_i*y*(w1+..+wb), y -> y^3*(...), w_j -> w_j*y*(...)
///   "K:k"        z_i -> z_i*x_i*y_i*t_i, x_i -> x_i*y_i*w_i*t_i, y_i -> y_i^3*w_i*t_i,
///                w_i -> y_i*w_i^2*t_i, t_i -> 0 (i = 1..k)
///   "F"          f_i -> f_{i+1}*g1, g_i -> i*g_{i+1} (indices up to the derivative cap)
struct GrammarName {
  enum class Kind { G, H, Hprime, H1, K, F };

  Kind kind = Kind::G;
  int p1 = 0;  // k for Hprime/K, a for H1
  int p2 = 0;  // b for H1

  static GrammarName parse(std::string_view text);
  std::string str() const;
};

Grammar builtin_grammar(const GrammarName& name);
Grammar builtin_grammar(std::string_view name);

/// The formal derivative induced by g: linear, Leibniz on products, and
/// D(v^n) = n*v^(n-1)*D(v) for any integer n (negative powers included).
Polynomial derive(const Grammar& g, const Polynomial& p);

/// n-fold derivative; n is bounded by limits().derive_cap.
Polynomial derive_n(const Grammar& g, const Polynomial& p, int n);

/// Coefficients T(n+1,k) of A^(n+k)*S^(n+1) in D^n(S) under G. Every monomial
/// of the derivative must have that shape or the call fails.
std::map<int, BigInt> tree_coefficient_table(int n);

/// Coefficients p_k(n) of x^k*w^(n-k)*z in D^n(z)|_{y=1} under H.
std::map<int, BigInt> planted_forest_coefficients(int n);

/// Coefficients of f_t*g1^t1*...*gk^tk in D^k(f0) under F, keyed by
/// (t1,...,tk); nonzero entries satisfy sum(i*t_i) = k.
std::map<std::vector<int>, BigInt> faa_di_bruno_coefficients(int k);

}  // namespace parkgram
