#include "parkgram/grammar.hpp"

#include <sstream>
#include <utility>

#include "parkgram/config.hpp"

namespace parkgram {

Grammar::Grammar(std::map<VarId, Polynomial> rules) : rules_(std::move(rules)) {
  for (const auto& [v, rhs] : rules_)
    if (v.empty()) fail(ErrorKind::BadParameter, "grammar rule with empty variable name");
}

const Polynomial* Grammar::rule_for(const VarId& v) const {
  auto it = rules_.find(v);
  return it == rules_.end() ? nullptr : &it->second;
}

std::string Grammar::to_text() const {
  std::string out;
  for (const auto& [v, rhs] : rules_) out += v + " -> " + rhs.str() + "\n";
  return out;
}

Grammar Grammar::from_text(std::string_view text) {
  std::map<VarId, Polynomial> rules;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    size_t arrow = line.find("->");
    if (arrow == std::string::npos)
      fail(ErrorKind::ParseError, "grammar line without '->': " + line);
    std::string lhs = line.substr(0, arrow);
    size_t b = lhs.find_first_not_of(" \t");
    size_t e = lhs.find_last_not_of(" \t");
    if (b == std::string::npos) fail(ErrorKind::ParseError, "grammar rule without variable");
    VarId v = lhs.substr(b, e - b + 1);
    if (!rules.emplace(v, Polynomial::parse(line.substr(arrow + 2))).second)
      fail(ErrorKind::ParseError, "duplicate rule for " + v);
  }
  return Grammar(std::move(rules));
}

// --- built-in grammars -------------------------------------------------------

namespace {

Polynomial var_product(std::initializer_list<VarId> vars) {
  Polynomial p = Polynomial::constant(1);
  for (const auto& v : vars) p = p * Polynomial::var(v);
  return p;
}

Polynomial var_sum(const std::string& stem, int count) {
  Polynomial p;
  for (int i = 1; i <= count; ++i) p += Polynomial::var(stem + std::to_string(i));
  return p;
}

std::string idx(const std::string& stem, int i) { return stem + std::to_string(i); }

}  // namespace

GrammarName GrammarName::parse(std::string_view text) {
  auto split = [](std::string_view s) {
    std::vector<std::string> parts;
    size_t start = 0;
    while (true) {
      size_t colon = s.find(':', start);
      parts.emplace_back(s.substr(start, colon - start));
      if (colon == std::string_view::npos) break;
      start = colon + 1;
    }
    return parts;
  };
  auto to_int = [&](const std::string& p) {
    try {
      size_t used = 0;
      int v = std::stoi(p, &used);
      if (used != p.size()) throw std::invalid_argument(p);
      return v;
    } catch (const std::exception&) {
      fail(ErrorKind::UnknownGrammar, "bad grammar parameter '" + p + "'");
    }
  };

  std::vector<std::string> parts = split(text);
  const std::string& head = parts[0];
  GrammarName name;
  if (head == "G" && parts.size() == 1) {
    name.kind = Kind::G;
  } else if (head == "H" && parts.size() == 1) {
    name.kind = Kind::H;
  } else if (head == "Hprime" && parts.size() == 2) {
    name.kind = Kind::Hprime;
    name.p1 = to_int(parts[1]);
  } else if (head == "H1" && parts.size() == 3) {
    name.kind = Kind::H1;
    name.p1 = to_int(parts[1]);
    name.p2 = to_int(parts[2]);
  } else if (head == "K" && parts.size() == 2) {
    name.kind = Kind::K;
    name.p1 = to_int(parts[1]);
  } else if (head == "F" && parts.size() == 1) {
    name.kind = Kind::F;
  } else {
    fail(ErrorKind::UnknownGrammar, "unknown grammar '" + std::string(text) + "'");
  }
  return name;
}

std::string GrammarName::str() const {
  switch (kind) {
    case Kind::G: return "G";
    case Kind::H: return "H";
    case Kind::Hprime: return "Hprime:" + std::to_string(p1);
    case Kind::H1: return "H1:" + std::to_string(p1) + ":" + std::to_string(p2);
    case Kind::K: return "K:" + std::to_string(p1);
    case Kind::F: return "F";
  }
  return "?";
}

Grammar builtin_grammar(const GrammarName& name) {
  using Kind = GrammarName::Kind;
  std::map<VarId, Polynomial> rules;
  switch (name.kind) {
    case Kind::G:
      rules["A"] = Polynomial::parse("A^3*S");
      rules["S"] = Polynomial::parse("A*S^2");
      break;
    case Kind::H:
      rules["z"] = var_product({"z", "x", "y"});
      rules["x"] = var_product({"x", "y", "w"});
      rules["y"] = Polynomial::parse("y^3*w");
      rules["w"] = Polynomial::parse("y*w^2");
      break;
    case Kind::Hprime: {
      int k = name.p1;
      if (k < 1) fail(ErrorKind::BadParameter, "Hprime needs k >= 1");
      for (int i = 1; i <= k; ++i) {
        rules[idx("z", i)] = var_product({idx("z", i), idx("x", i), "y"});
        rules[idx("x", i)] = var_product({idx("x", i), "y", "w"});
      }
      rules["y"] = Polynomial::parse("y^3*w");
      rules["w"] = Polynomial::parse("y*w^2");
      break;
    }
    case Kind::H1: {
      int a = name.p1, b = name.p2;
      if (a < 1 || b < 1) fail(ErrorKind::BadParameter, "H1 needs a,b >= 1");
      Polynomial xsum = var_sum("x", a);
      Polynomial wsum = var_sum("w", b);
      rules["z"] = Polynomial::var("z") * xsum * Polynomial::var("y");
      for (int i = 1; i <= a; ++i)
        rules[idx("x", i)] = Polynomial::var(idx("x", i)) * Polynomial::var("y") * wsum;
      rules["y"] = Polynomial::var("y").pow(3) * wsum;
      for (int j = 1; j <= b; ++j)
        rules[idx("w", j)] = Polynomial::var(idx("w", j)) * Polynomial::var("y") * wsum;
      break;
    }
    case Kind::K: {
      int k = name.p1;
      if (k < 1) fail(ErrorKind::BadParameter, "K needs k >= 1");
      for (int i = 1; i <= k; ++i) {
        rules[idx("z", i)] = var_product({idx("z", i), idx("x", i), idx("y", i), idx("t", i)});
        rules[idx("x", i)] = var_product({idx("x", i), idx("y", i), idx("w", i), idx("t", i)});
        rules[idx("y", i)] =
            Polynomial::var(idx("y", i)).pow(3) * var_product({idx("w", i), idx("t", i)});
        rules[idx("w", i)] =
            Polynomial::var(idx("y", i)) * Polynomial::var(idx("w", i)).pow(2) * Polynomial::var(idx("t", i));
        rules[idx("t", i)] = Polynomial::zero();  // explicit t_i -> 0
      }
      break;
    }
    case Kind::F: {
      // f_i, g_i form unbounded families; materialize every index reachable
      // within the derivative cap (derive_n rejects higher orders anyway).
      int depth = limits().derive_cap + 1;
      for (int i = 0; i <= depth; ++i)
        rules[idx("f", i)] = var_product({idx("f", i + 1), "g1"});
      for (int i = 1; i <= depth; ++i)
        rules[idx("g", i)] = Rational(i) * Polynomial::var(idx("g", i + 1));
      break;
    }
  }
  return Grammar(std::move(rules));
}

Grammar builtin_grammar(std::string_view name) { return builtin_grammar(GrammarName::parse(name)); }

// --- derivation --------------------------------------------------------------

Polynomial derive(const Grammar& g, const Polynomial& p) {
  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    for (const auto& [v, e] : m.exps) {
      const Polynomial* rule = g.rule_for(v);
      if (rule == nullptr || rule->is_zero()) continue;
      Monomial reduced = m;
      if (e == 1)
        reduced.exps.erase(v);
      else
        reduced.exps[v] = e - 1;
      out += Polynomial::monomial(reduced, c * Rational(e)) * *rule;
    }
  }
  return out;
}

Polynomial derive_n(const Grammar& g, const Polynomial& p, int n) {
  if (n < 0) fail(ErrorKind::BadParameter, "negative derivative order");
  if (n > limits().derive_cap)
    fail(ErrorKind::OrderTooLarge, "derivative order " + std::to_string(n) + " exceeds cap " +
                                       std::to_string(limits().derive_cap));
  Polynomial out = p;
  for (int i = 0; i < n; ++i) out = derive(g, out);
  return out;
}

// --- coefficient tables ------------------------------------------------------

namespace {

BigInt integer_coefficient(const Rational& c, const char* what) {
  if (!c.is_integer()) fail(ErrorKind::NonIntegerResult, std::string(what) + " coefficient is not integral");
  return c.num();
}

}  // namespace

std::map<int, BigInt> tree_coefficient_table(int n) {
  if (n < 1) fail(ErrorKind::BadParameter, "tree_coefficient_table needs n >= 1");
  Polynomial d = derive_n(builtin_grammar(GrammarName{GrammarName::Kind::G}), Polynomial::var("S"), n);
  std::map<int, BigInt> table;
  for (const auto& [m, c] : d.terms()) {
    if (m.exps.size() != 2 || m.exp_of("S") != n + 1)
      fail(ErrorKind::ShapeViolation, "unexpected monomial " + m.str() + " in D^n(S)");
    int k = m.exp_of("A") - n;
    if (k < 0 || k > n)
      fail(ErrorKind::ShapeViolation, "A-exponent out of range in " + m.str());
    table[k] = integer_coefficient(c, "tree table");
  }
  return table;
}

std::map<int, BigInt> planted_forest_coefficients(int n) {
  if (n < 1) fail(ErrorKind::BadParameter, "planted_forest_coefficients needs n >= 1");
  Polynomial d = derive_n(builtin_grammar(GrammarName{GrammarName::Kind::H}), Polynomial::var("z"), n);
  Polynomial at_y1 = d.substitute({{"y", 1}});
  std::map<int, BigInt> table;
  for (const auto& [m, c] : at_y1.terms()) {
    int k = m.exp_of("x");
    bool shaped = m.exp_of("z") == 1 && m.exp_of("w") == n - k && k >= 1 && k <= n &&
                  m.exps.size() == static_cast<size_t>(k < n ? 3 : 2);
    if (!shaped)
      fail(ErrorKind::ShapeViolation, "unexpected monomial " + m.str() + " in D^n(z)|_{y=1}");
    table[k] = integer_coefficient(c, "planted forest");
  }
  return table;
}

std::map<std::vector<int>, BigInt> faa_di_bruno_coefficients(int k) {
  if (k < 1) fail(ErrorKind::BadParameter, "faa_di_bruno_coefficients needs k >= 1");
  Polynomial d = derive_n(builtin_grammar(GrammarName{GrammarName::Kind::F}), Polynomial::var("f0"), k);
  std::map<std::vector<int>, BigInt> table;
  for (const auto& [m, c] : d.terms()) {
    std::vector<int> key(k, 0);
    int f_index = -1;
    long long weighted = 0, total = 0;
    for (const auto& [v, e] : m.exps) {
      if (v.size() > 1 && v[0] == 'f') {
        if (f_index >= 0 || e != 1)
          fail(ErrorKind::ShapeViolation, "unexpected f-part in " + m.str());
        f_index = std::stoi(v.substr(1));
      } else if (v.size() > 1 && v[0] == 'g') {
        int i = std::stoi(v.substr(1));
        if (i < 1 || i > k || e < 1)
          fail(ErrorKind::ShapeViolation, "unexpected g-part in " + m.str());
        key[i - 1] = e;
        weighted += static_cast<long long>(i) * e;
        total += e;
      } else {
        fail(ErrorKind::ShapeViolation, "unexpected variable " + v + " in D^k(f0)");
      }
    }
    if (f_index != total || weighted != k)
      fail(ErrorKind::ShapeViolation, "monomial " + m.str() + " violates the block-count shape");
    table[key] = integer_coefficient(c, "Faa di Bruno");
  }
  return table;
}

}  // namespace parkgram
