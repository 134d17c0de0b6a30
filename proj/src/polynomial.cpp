#include "parkgram/polynomial.hpp"

#include <cctype>
#include <utility>
#include <vector>

#include <json.hpp>

namespace parkgram {

Monomial Monomial::var(VarId v, int e) {
  Monomial m;
  if (v.empty()) fail(ErrorKind::BadParameter, "empty variable name");
  if (e != 0) m.exps.emplace(std::move(v), e);
  return m;
}

int Monomial::exp_of(const VarId& v) const {
  auto it = exps.find(v);
  return it == exps.end() ? 0 : it->second;
}

Monomial Monomial::times(const Monomial& o) const {
  Monomial out = *this;
  for (const auto& [v, e] : o.exps) {
    int& slot = out.exps[v];
    slot += e;
    if (slot == 0) out.exps.erase(v);
  }
  return out;
}

std::strong_ordering Monomial::operator<=>(const Monomial& o) const {
  auto a = exps.begin();
  auto b = o.exps.begin();
  for (; a != exps.end() && b != o.exps.end(); ++a, ++b) {
    if (auto c = a->first <=> b->first; c != 0) return c;
    if (auto c = a->second <=> b->second; c != 0) return c;
  }
  if (a != exps.end()) return std::strong_ordering::greater;
  if (b != o.exps.end()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

std::string Monomial::str() const {
  if (is_unit()) return "1";
  std::string out;
  for (const auto& [v, e] : exps) {
    if (!out.empty()) out += "*";
    out += v;
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

MonomialFunctional neutral_hook() {
  return {[](const VarId&) { return false; }, [](const Exponents&) { return Rational(1); }};
}

MonomialFunctional spec_step_hook(int k, int b) {
  if (k < 1 || b < 1) fail(ErrorKind::BadParameter, "spec_step_hook needs k,b >= 1");
  std::set<VarId> vars;
  for (int i = 1; i <= k; ++i) vars.insert("t" + std::to_string(i));
  auto consumes = [vars](const VarId& v) { return vars.count(v) > 0; };
  auto evaluate = [k, b](const Exponents& exps) -> Rational {
    long long prefix = 0;
    for (int i = 1; i <= k; ++i) {
      auto it = exps.find("t" + std::to_string(i));
      long long j = it == exps.end() ? 0 : it->second;
      prefix += j - b;
      if (prefix < 0) return 0;
    }
    return 1;
  };
  return {consumes, evaluate};
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial Polynomial::constant(Rational c) {
  Polynomial p;
  p.add_term(Monomial::unit(), std::move(c));
  return p;
}

Polynomial Polynomial::var(VarId v) {
  Polynomial p;
  p.add_term(Monomial::var(std::move(v)), 1);
  return p;
}

Polynomial Polynomial::monomial(Monomial m, Rational c) {
  Polynomial p;
  p.add_term(std::move(m), std::move(c));
  return p;
}

Rational Polynomial::coefficient_of(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

Rational Polynomial::constant_value() const {
  if (terms_.empty()) return 0;
  if (!is_constant()) fail(ErrorKind::BadParameter, "polynomial is not constant: " + str());
  return terms_.begin()->second;
}

std::set<VarId> Polynomial::variables() const {
  std::set<VarId> out;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m.exps) out.insert(v);
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma.times(mb), ca * cb);
  return out;
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
  Polynomial out;
  if (c.is_zero()) return out;
  for (const auto& [m, k] : p.terms_) out.add_term(m, c * k);
  return out;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial out = constant(1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) out = out * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return out;
}

Polynomial Polynomial::substitute(const std::map<VarId, Rational>& assignment) const {
  Polynomial out;
  for (const auto& [m, c] : terms_) {
    Rational coeff = c;
    Monomial rest;
    for (const auto& [v, e] : m.exps) {
      auto it = assignment.find(v);
      if (it == assignment.end()) {
        rest.exps.emplace(v, e);
        continue;
      }
      if (e < 0 && it->second.is_zero())
        fail(ErrorKind::ZeroToNegativePower, "substituting 0 for " + v + "^" + std::to_string(e));
      coeff *= it->second.pow(e);
    }
    out.add_term(rest, coeff);
  }
  return out;
}

Rational Polynomial::eval_with_functional(const std::map<VarId, Rational>& assignment,
                                          const MonomialFunctional& hook) const {
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational value = c;
    for (const auto& [v, e] : m.exps) {
      if (hook.consumes && hook.consumes(v)) continue;
      auto it = assignment.find(v);
      if (it == assignment.end())
        fail(ErrorKind::UnassignedVariable, "variable " + v + " neither assigned nor hook-consumed");
      if (e < 0 && it->second.is_zero())
        fail(ErrorKind::ZeroToNegativePower, "evaluating 0 for " + v + "^" + std::to_string(e));
      value *= it->second.pow(e);
    }
    value *= hook.evaluate(m.exps);
    total += value;
  }
  return total;
}

bool Polynomial::is_canonical() const {
  for (const auto& [m, c] : terms_) {
    if (c.is_zero()) return false;
    for (const auto& [v, e] : m.exps)
      if (e == 0 || v.empty()) return false;
  }
  return true;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) out += "-";
      first = false;
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    if (m.is_unit()) {
      out += mag.str();
    } else if (mag == Rational(1)) {
      out += m.str();
    } else {
      out += mag.str() + "*" + m.str();
    }
  }
  return out;
}

std::string Polynomial::to_json_string() const {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : terms_) {
    nlohmann::json exps = nlohmann::json::object();
    for (const auto& [v, e] : m.exps) exps[v] = e;
    terms.push_back({{"coeff", c.str()}, {"exps", exps}});
  }
  return nlohmann::json{{"terms", terms}}.dump();
}

Polynomial Polynomial::from_json_string(std::string_view text) {
  nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
  if (doc.is_discarded() || !doc.contains("terms") || !doc["terms"].is_array())
    fail(ErrorKind::ParseError, "malformed polynomial JSON");
  Polynomial out;
  for (const auto& term : doc["terms"]) {
    Monomial m;
    for (const auto& [v, e] : term.at("exps").items()) {
      int exp = e.get<int>();
      if (exp != 0) m.exps[v] = exp;
    }
    out.add_term(m, Rational::parse(term.at("coeff").get<std::string>()));
  }
  return out;
}

// --- expression parser -------------------------------------------------------
//
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' ['-'] digits)?
//   base   := rational | identifier | '(' expr ')'
//
// '/' only appears inside a numeric literal ("3/4"), never as an operator.

namespace {

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  Polynomial run() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size())
      fail(ErrorKind::ParseError, "trailing input at '" + std::string(text_.substr(pos_)) + "'");
    return p;
  }

private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Polynomial expr() {
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    Polynomial p = term();
    if (neg) p = -p;
    while (true) {
      if (eat('+'))
        p += term();
      else if (eat('-'))
        p -= term();
      else
        break;
    }
    return p;
  }

  Polynomial term() {
    Polynomial p = factor();
    while (eat('*')) p = p * factor();
    return p;
  }

  Polynomial factor() {
    Polynomial base = atom();
    if (eat('^')) {
      skip_ws();
      bool neg = eat('-');
      std::string digits = read_digits();
      if (digits.empty()) fail(ErrorKind::ParseError, "missing exponent after '^'");
      long long e = std::stoll(digits);
      if (neg) e = -e;
      if (e >= 0) return base.pow(static_cast<unsigned>(e));
      // Negative powers only make sense for a single monomial base.
      if (base.term_count() != 1)
        fail(ErrorKind::ParseError, "negative power of a non-monomial expression");
      const auto& [m, c] = *base.terms().begin();
      Monomial inv;
      for (const auto& [v, ex] : m.exps) inv.exps[v] = -ex;
      Monomial acc = Monomial::unit();
      for (long long i = 0; i < -e; ++i) acc = acc.times(inv);
      return Polynomial::monomial(acc, c.pow(e));
    }
    return base;
  }

  Polynomial atom() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      eat('(');
      Polynomial p = expr();
      if (!eat(')')) fail(ErrorKind::ParseError, "missing ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = read_digits();
      if (eat('/')) {
        std::string den = read_digits();
        if (den.empty()) fail(ErrorKind::ParseError, "missing denominator");
        return Polynomial::constant(Rational::parse(num + "/" + den));
      }
      return Polynomial::constant(Rational::parse(num));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        name += text_[pos_++];
      }
      return Polynomial::var(name);
    }
    fail(ErrorKind::ParseError, "unexpected character '" + std::string(1, c) + "'");
  }

  std::string read_digits() {
    skip_ws();
    std::string out;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      out += text_[pos_++];
    return out;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text) { return Parser(text).run(); }

}  // namespace parkgram
