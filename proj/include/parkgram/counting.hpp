#pragma once

#include <utility>
#include <vector>

#include "parkgram/parking.hpp"
#include "parkgram/polynomial.hpp"

namespace parkgram {

BigInt factorial(int n);
BigInt binomial(int n, int k);
BigInt multinomial(int n, const std::vector<int>& parts);

/// All compositions J = (j_1..j_k) of k*b with j_1+..+j_t >= t*b for every t,
/// in lexicographic order.
std::vector<std::vector<int>> spec_compositions(int k, int b);

/// alpha*(alpha + n*beta)^(n-1); n = 0 gives 1.
Rational count_basic(const Rational& alpha, const Rational& beta, int n);

/// Signed inclusion-exclusion over ordered set partitions, aggregated by
/// composition with multinomial weights. Integer parking count for valid
/// threshold vectors; defined for arbitrary rational u.
Rational count_u_incl_excl(const std::vector<Rational>& u);

/// Exact test of count(k*u) = k^n * count(u).
bool check_scaling(const std::vector<Rational>& u, const Rational& k);

/// a^(b-1); requires gcd(a,b) = 1.
BigInt count_rational(int a, int b);

/// Spec-composition sum: sum over J in spec(k,b) of
/// multinomial(kb;J) * prod_i (1 + j_i*(a-1)/b)^(j_i - 1).
Rational count_periodic_specsum(int a, int b, int k);

/// b^(kb)-scaled integer form: sum of multinomial(kb;J)*b^k*prod(b+j_i(a-1))^(j_i-1).
BigInt count_periodic_scaled(int a, int b, int k);

/// Evaluates D^(kb)(z1..zk) under grammar K with x_i = b, w_i = a-1,
/// z_i = y_i = 1 and the spec step hook; equals count_periodic_scaled.
BigInt count_periodic_grammar(int a, int b, int k);

/// Same derivative with x_i = 1, w_i = (a-1)/b; equals count_periodic_specsum.
Rational count_periodic_grammar_frac(int a, int b, int k);

/// Coefficient extraction from exp(sum_m (ma)^(mb-1) z^m/(mb)!) at z^k, times (kb)!.
BigInt count_periodic_egf(int a, int b, int k);

/// Both sides of (sum x_i)(n + sum x_i)^(n-1) =
/// sum over weak compositions of multinomial * prod x_j (x_j + i_j)^(i_j - 1).
/// Every x_j must be nonzero (i_j = 0 terms need x_j * x_j^-1).
std::pair<Rational, Rational> abel_identity_sides(const std::vector<Rational>& xs, int n);

/// Both sides of k*x^(n-1) = sum multinomial * prod (1 + i_j*(x-k)/n)^(i_j-1),
/// the equal-arguments form of the Abel identity; requires x != k.
std::pair<Rational, Rational> abel_uniform_sides(const Rational& x, int n, int k);

// --- q-analogues (statistic: number of entries equal to 1) -------------------

using QPolynomial = Polynomial;  // univariate in the distinguished variable "q"

QPolynomial q_bruteforce(const ThresholdVector& u);

/// q*(q+n)^(n-1), the classical ones-count generating polynomial.
QPolynomial q_classical(int n);

/// (q+a-1)*(q+a-1+bn)^(n-1) for weights (a,b,...,b).
QPolynomial q_basic(int a, int b, int n);

/// q*(q+l*k)^(l-1) for weights (1,k,...,k).
QPolynomial q_unit_step(int l, int k);

/// Spec-composition q-sum for (da,db)-parking functions; requires a = 1 (mod b).
QPolynomial q_periodic(int a, int b, int d);

/// Degenerate slope: sum over spec(d,b) of multinomial(db;J)*q^(j_1), matching
/// thresholds block_threshold_vector(b, d*b).
QPolynomial q_periodic_limit(int b, int d);

/// Dense coefficient list, lowest degree first, as decimal strings.
std::vector<std::string> qpoly_dense_coeffs(const QPolynomial& p);

/// Human form, highest degree first: "q^2 + 2*q".
std::string qpoly_str(const QPolynomial& p);

}  // namespace parkgram
