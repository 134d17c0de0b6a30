#include "parkgram/counting.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

#include "parkgram/config.hpp"
#include "parkgram/grammar.hpp"

namespace parkgram {

BigInt factorial(int n) {
  if (n < 0) fail(ErrorKind::BadParameter, "factorial of negative argument");
  static std::vector<BigInt> cache{1};
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  while (static_cast<int>(cache.size()) <= n)
    cache.push_back(cache.back() * static_cast<int>(cache.size()));
  return cache[n];
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  return factorial(n) / (factorial(k) * factorial(n - k));
}

BigInt multinomial(int n, const std::vector<int>& parts) {
  int total = 0;
  BigInt denom = 1;
  for (int p : parts) {
    if (p < 0) fail(ErrorKind::BadParameter, "negative multinomial part");
    total += p;
    denom *= factorial(p);
  }
  if (total != n) fail(ErrorKind::BadParameter, "multinomial parts do not sum to n");
  return factorial(n) / denom;
}

namespace {

void spec_rec(int k, int b, int remaining, std::vector<int>& acc,
              std::vector<std::vector<int>>& out) {
  int t = static_cast<int>(acc.size()) + 1;
  if (t > k) {
    if (remaining == 0) out.push_back(acc);
    return;
  }
  if (t == k) {
    // prefix condition at t = k is the total itself
    acc.push_back(remaining);
    out.push_back(acc);
    acc.pop_back();
    return;
  }
  int have = k * b - remaining;            // j_1 + ... + j_{t-1}
  int low = std::max(0, t * b - have);     // keep the prefix bound
  for (int j = low; j <= remaining; ++j) {
    acc.push_back(j);
    spec_rec(k, b, remaining - j, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> spec_compositions(int k, int b) {
  if (k < 1 || b < 1) fail(ErrorKind::BadParameter, "spec_compositions needs k,b >= 1");
  std::vector<std::vector<int>> out;
  std::vector<int> acc;
  spec_rec(k, b, k * b, acc, out);
  return out;
}

Rational count_basic(const Rational& alpha, const Rational& beta, int n) {
  if (n < 0) fail(ErrorKind::BadParameter, "count_basic needs n >= 0");
  if (n == 0) return 1;
  return alpha * (alpha + Rational(n) * beta).pow(n - 1);
}

Rational count_u_incl_excl(const std::vector<Rational>& u) {
  int n = static_cast<int>(u.size());
  // tail[s] = signed sum over compositions of the entries after position s.
  std::vector<Rational> tail(n + 1);
  tail[n] = 1;
  for (int s = n - 1; s >= 0; --s) {
    Rational acc = 0;
    for (int m = 1; m <= n - s; ++m) {
      Rational block = Rational(binomial(n - s, m)) * (-u[s]).pow(m) * tail[s + m];
      acc -= block;  // the (-1) per block
    }
    tail[s] = acc;
  }
  return tail[0];
}

bool check_scaling(const std::vector<Rational>& u, const Rational& k) {
  std::vector<Rational> scaled;
  scaled.reserve(u.size());
  for (const Rational& ui : u) scaled.push_back(k * ui);
  return count_u_incl_excl(scaled) ==
         k.pow(static_cast<long long>(u.size())) * count_u_incl_excl(u);
}

namespace {

void require_coprime(int a, int b) {
  if (a < 1 || b < 1) fail(ErrorKind::BadParameter, "parameters must be >= 1");
  if (std::gcd(a, b) != 1)
    fail(ErrorKind::GcdViolation,
         "gcd(" + std::to_string(a) + "," + std::to_string(b) + ") != 1");
}

BigInt require_integer(const Rational& value, const char* what) {
  if (!value.is_integer())
    fail(ErrorKind::NonIntegerResult, std::string(what) + " evaluated to non-integer " + value.str());
  return value.num();
}

}  // namespace

BigInt count_rational(int a, int b) {
  require_coprime(a, b);
  return boost::multiprecision::pow(BigInt(a), static_cast<unsigned>(b - 1));
}

Rational count_periodic_specsum(int a, int b, int k) {
  require_coprime(a, b);
  if (k < 1) fail(ErrorKind::BadParameter, "k >= 1 required");
  const Rational step(a - 1, b);
  Rational total = 0;
  for (const auto& J : spec_compositions(k, b)) {
    Rational term(multinomial(k * b, J));
    for (int j : J) term *= (Rational(1) + Rational(j) * step).pow(j - 1);
    total += term;
  }
  require_integer(total, "spec-composition sum");
  return total;
}

BigInt count_periodic_scaled(int a, int b, int k) {
  require_coprime(a, b);
  if (k < 1) fail(ErrorKind::BadParameter, "k >= 1 required");
  Rational total = 0;
  for (const auto& J : spec_compositions(k, b)) {
    Rational term = Rational(multinomial(k * b, J)) * Rational(b).pow(k);
    for (int j : J) term *= Rational(b + static_cast<long long>(j) * (a - 1)).pow(j - 1);
    total += term;
  }
  return require_integer(total, "scaled spec-composition sum");
}

namespace {

Rational grammar_k_evaluation(int a, int b, int k, bool scaled) {
  require_coprime(a, b);
  if (k < 1) fail(ErrorKind::BadParameter, "k >= 1 required");
  Grammar g = builtin_grammar(GrammarName{GrammarName::Kind::K, k});
  Polynomial start = Polynomial::constant(1);
  std::map<VarId, Rational> assignment;
  for (int i = 1; i <= k; ++i) {
    std::string suffix = std::to_string(i);
    start = start * Polynomial::var("z" + suffix);
    assignment["z" + suffix] = 1;
    assignment["y" + suffix] = 1;
    assignment["x" + suffix] = scaled ? Rational(b) : Rational(1);
    assignment["w" + suffix] = scaled ? Rational(a - 1) : Rational(a - 1, b);
  }
  Polynomial d = derive_n(g, start, k * b);
  return d.eval_with_functional(assignment, spec_step_hook(k, b));
}

}  // namespace

BigInt count_periodic_grammar(int a, int b, int k) {
  return require_integer(grammar_k_evaluation(a, b, k, /*scaled=*/true), "grammar evaluation");
}

Rational count_periodic_grammar_frac(int a, int b, int k) {
  return grammar_k_evaluation(a, b, k, /*scaled=*/false);
}

BigInt count_periodic_egf(int a, int b, int k) {
  require_coprime(a, b);
  if (k < 1) fail(ErrorKind::BadParameter, "k >= 1 required");

  // S(z) = sum_{m=1..k} (ma)^(mb-1) z^m / (mb)!   truncated at degree k
  std::vector<Rational> series(k + 1, Rational(0));
  for (int m = 1; m <= k; ++m) {
    BigInt num = boost::multiprecision::pow(BigInt(static_cast<long long>(m) * a),
                                            static_cast<unsigned>(m * b - 1));
    series[m] = Rational(num, factorial(m * b));
  }

  auto mul_trunc = [k](const std::vector<Rational>& p, const std::vector<Rational>& q) {
    std::vector<Rational> out(k + 1, Rational(0));
    for (int i = 0; i <= k; ++i) {
      if (p[i].is_zero()) continue;
      for (int j = 0; i + j <= k; ++j) out[i + j] += p[i] * q[j];
    }
    return out;
  };

  // exp(S) = sum_j S^j / j!; S has no constant term so j ranges to k.
  std::vector<Rational> expo(k + 1, Rational(0)), power(k + 1, Rational(0));
  expo[0] = 1;
  power[0] = 1;
  for (int j = 1; j <= k; ++j) {
    power = mul_trunc(power, series);
    Rational inv_fact = Rational(BigInt(1), factorial(j));
    for (int d = 0; d <= k; ++d) expo[d] += power[d] * inv_fact;
  }
  return require_integer(expo[k] * Rational(factorial(k * b)), "EGF coefficient");
}

namespace {

template <typename Fn>
void for_each_weak_composition(int n, int k, std::vector<int>& acc, Fn&& fn) {
  if (static_cast<int>(acc.size()) == k - 1) {
    int used = std::accumulate(acc.begin(), acc.end(), 0);
    acc.push_back(n - used);
    fn(acc);
    acc.pop_back();
    return;
  }
  int used = std::accumulate(acc.begin(), acc.end(), 0);
  for (int i = 0; i <= n - used; ++i) {
    acc.push_back(i);
    for_each_weak_composition(n, k, acc, fn);
    acc.pop_back();
  }
}

}  // namespace

std::pair<Rational, Rational> abel_identity_sides(const std::vector<Rational>& xs, int n) {
  if (xs.empty() || n < 1) fail(ErrorKind::BadParameter, "need k >= 1 and n >= 1");
  for (const Rational& x : xs)
    if (x.is_zero()) fail(ErrorKind::ZeroArgument, "Abel identity requires nonzero arguments");

  Rational sum = 0;
  for (const Rational& x : xs) sum += x;
  Rational lhs = sum * (Rational(n) + sum).pow(n - 1);

  int k = static_cast<int>(xs.size());
  Rational rhs = 0;
  std::vector<int> acc;
  for_each_weak_composition(n, k, acc, [&](const std::vector<int>& parts) {
    Rational term(multinomial(n, parts));
    for (int j = 0; j < k; ++j)
      term *= xs[j] * (xs[j] + Rational(parts[j])).pow(parts[j] - 1);
    rhs += term;
  });
  return {lhs, rhs};
}

std::pair<Rational, Rational> abel_uniform_sides(const Rational& x, int n, int k) {
  if (n < 1 || k < 1) fail(ErrorKind::BadParameter, "need n,k >= 1");
  if (x == Rational(k))
    fail(ErrorKind::DegenerateParameter, "x = k makes the substituted argument undefined");

  Rational lhs = Rational(k) * x.pow(n - 1);
  Rational slope = (x - Rational(k)) / Rational(n);
  Rational rhs = 0;
  std::vector<int> acc;
  for_each_weak_composition(n, k, acc, [&](const std::vector<int>& parts) {
    Rational term(multinomial(n, parts));
    for (int j = 0; j < k; ++j)
      term *= (Rational(1) + Rational(parts[j]) * slope).pow(parts[j] - 1);
    rhs += term;
  });
  return {lhs, rhs};
}

// --- q-analogues --------------------------------------------------------------

namespace {

const VarId kQ = "q";

Polynomial q_plus(const Rational& c) { return Polynomial::var(kQ) + Polynomial::constant(c); }

}  // namespace

QPolynomial q_bruteforce(const ThresholdVector& u) {
  QPolynomial total;
  for (const PFSeq& c : enumerate_u_parking(u))
    total += Polynomial::monomial(Monomial::var(kQ, ones_count(c)), 1);
  return total;
}

QPolynomial q_classical(int n) {
  if (n < 1) fail(ErrorKind::BadParameter, "q_classical needs n >= 1");
  return Polynomial::var(kQ) * q_plus(n).pow(n - 1);
}

QPolynomial q_basic(int a, int b, int n) {
  if (a < 1 || b < 1 || n < 1) fail(ErrorKind::BadParameter, "q_basic needs a,b,n >= 1");
  return q_plus(a - 1) * q_plus(Rational(a - 1) + Rational(n) * Rational(b)).pow(n - 1);
}

QPolynomial q_unit_step(int l, int k) {
  if (l < 1 || k < 0) fail(ErrorKind::BadParameter, "q_unit_step needs l >= 1, k >= 0");
  return Polynomial::var(kQ) * q_plus(static_cast<long long>(l) * k).pow(l - 1);
}

QPolynomial q_periodic(int a, int b, int d) {
  if (a < 1 || b < 1 || d < 1) fail(ErrorKind::BadParameter, "q_periodic needs a,b,d >= 1");
  if (a % b != 1 % b)
    fail(ErrorKind::ModViolation, "q_periodic needs a = 1 (mod b)");
  const Rational step(a - 1, b);
  QPolynomial total;
  for (const auto& J : spec_compositions(d, b)) {
    Rational scalar(multinomial(d * b, J));
    for (size_t t = 1; t < J.size(); ++t)
      scalar *= (Rational(1) + Rational(J[t]) * step).pow(J[t] - 1);
    Polynomial head =
        Polynomial::var(kQ) * q_plus(Rational(J[0]) * step).pow(J[0] - 1);
    total += scalar * head;
  }
  return total;
}

QPolynomial q_periodic_limit(int b, int d) {
  if (b < 1 || d < 1) fail(ErrorKind::BadParameter, "q_periodic_limit needs b,d >= 1");
  QPolynomial total;
  for (const auto& J : spec_compositions(d, b))
    total += Polynomial::monomial(Monomial::var(kQ, J[0]), Rational(multinomial(d * b, J)));
  return total;
}

std::vector<std::string> qpoly_dense_coeffs(const QPolynomial& p) {
  int degree = 0;
  for (const auto& [m, c] : p.terms()) {
    if (m.exps.size() > 1 || (m.exps.size() == 1 && m.exps.begin()->first != kQ))
      fail(ErrorKind::BadParameter, "not a univariate q-polynomial: " + p.str());
    int e = m.exp_of(kQ);
    if (e < 0) fail(ErrorKind::BadParameter, "negative q-power in q-polynomial");
    degree = std::max(degree, e);
  }
  std::vector<std::string> out(degree + 1, "0");
  for (const auto& [m, c] : p.terms()) out[m.exp_of(kQ)] = c.str();
  return out;
}

std::string qpoly_str(const QPolynomial& p) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<int, Rational>> terms;
  for (const auto& [m, c] : p.terms()) terms.emplace_back(m.exp_of(kQ), c);
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });
  std::string out;
  for (const auto& [e, c] : terms) {
    Rational mag = c.sign() < 0 ? -c : c;
    if (out.empty()) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    if (e == 0) {
      out += mag.str();
    } else {
      if (mag != Rational(1)) out += mag.str() + "*";
      out += e == 1 ? "q" : "q^" + std::to_string(e);
    }
  }
  return out;
}

}  // namespace parkgram
