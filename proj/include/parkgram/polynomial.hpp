#pragma once

#include <compare>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <string_view>

#include "parkgram/rational.hpp"

namespace parkgram {

/// Variable names are plain identifiers ("A", "z1", "x_1", "q", ...).
using VarId = std::string;

/// Exponent maps are sparse and canonical: a variable is present iff its
/// exponent is nonzero. Negative exponents are allowed (Laurent monomials).
using Exponents = std::map<VarId, int>;

struct Monomial {
  Exponents exps;

  static Monomial unit() { return {}; }
  static Monomial var(VarId v, int e = 1);

  bool is_unit() const { return exps.empty(); }
  int exp_of(const VarId& v) const;
  Monomial times(const Monomial& o) const;

  bool operator==(const Monomial& o) const { return exps == o.exps; }
  // Total order: lexicographic over the name-sorted (variable, exponent) list.
  std::strong_ordering operator<=>(const Monomial& o) const;

  std::string str() const;
};

/// Evaluation hook that replaces a designated set of variables by a value
/// computed from the whole exponent map of each monomial (the step-function
/// substitution t_i^{j_i} -> eps(j_1-b + ... + j_i-b) is the motivating case).
struct MonomialFunctional {
  std::function<bool(const VarId&)> consumes;          // which variables it absorbs
  std::function<Rational(const Exponents&)> evaluate;  // sees the full exponent map
};

/// Hook that consumes nothing and multiplies by 1.
MonomialFunctional neutral_hook();

/// Hook over t1..tk: multiplies by 1 when every prefix sum of (exp(t_i) - b)
/// is nonnegative, else by 0. Filters grammar-K monomials to spec(k,b).
MonomialFunctional spec_step_hook(int k, int b);

/// Sparse multivariate Laurent polynomial with exact rational coefficients,
/// stored canonically: no zero coefficients, terms ordered by the monomial
/// total order. Immutable value semantics; all operations return new values.
class Polynomial {
public:
  Polynomial() = default;

  static Polynomial zero() { return {}; }
  static Polynomial constant(Rational c);
  static Polynomial var(VarId v);
  static Polynomial monomial(Monomial m, Rational c);

  /// Parses "+", "-", "*", "^", parentheses, rational literals "p/q" and
  /// variable identifiers, e.g. "A^3*S", "z*(x_1+x_2)*y", "1/2*w^-1".
  static Polynomial parse(std::string_view text);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  Rational coefficient_of(const Monomial& m) const;
  bool is_constant() const;
  Rational constant_value() const;  // requires is_constant()
  std::set<VarId> variables() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, const Polynomial& p);

  Polynomial pow(unsigned e) const;

  /// Eliminates the assigned variables; others stay symbolic. Assigning 0 to a
  /// variable that appears with a negative exponent is a hard error.
  Polynomial substitute(const std::map<VarId, Rational>& assignment) const;

  /// Full evaluation: every variable must be either assigned or consumed by
  /// the hook; the hook is applied once per term on the complete exponent map.
  Rational eval_with_functional(const std::map<VarId, Rational>& assignment,
                                const MonomialFunctional& hook) const;

  bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

  /// True when the stored form satisfies the canonical invariants. Operations
  /// maintain this; tests assert it after every step.
  bool is_canonical() const;

  std::string str() const;
  std::string to_json_string() const;
  static Polynomial from_json_string(std::string_view text);

private:
  void add_term(const Monomial& m, const Rational& c);

  std::map<Monomial, Rational> terms_;
};

}  // namespace parkgram
