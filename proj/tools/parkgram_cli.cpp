// Command-line front end: counting, enumeration, membership checks,
// q-polynomials, grammar derivatives, spec compositions, conversions, and
// randomized identity verification. Exit codes: 0 success / all-pass,
// 1 verification failure, 2 usage or precondition error.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>

#include "parkgram/config.hpp"
#include "parkgram/counting.hpp"
#include "parkgram/grammar.hpp"
#include "parkgram/parking.hpp"

using namespace parkgram;

namespace {

constexpr std::uint64_t kDefaultSeed = 12345;

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) out.push_back(item);
  if (!text.empty() && text.back() == sep) out.push_back("");
  return out;
}

std::vector<int> parse_int_seq(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  for (const std::string& tok : split(text, ',')) {
    Rational r = Rational::parse(tok);
    if (!r.is_integer()) fail(ErrorKind::ParseError, "expected integer, got " + tok);
    out.push_back(static_cast<int>(r.num().convert_to<long long>()));
  }
  return out;
}

std::vector<Rational> parse_rat_seq(const std::string& text) {
  std::vector<Rational> out;
  if (text.empty()) return out;
  for (const std::string& tok : split(text, ',')) out.push_back(Rational::parse(tok));
  return out;
}

std::map<VarId, Rational> parse_assignment(const std::string& text) {
  std::map<VarId, Rational> out;
  if (text.empty()) return out;
  for (const std::string& tok : split(text, ',')) {
    size_t eq = tok.find('=');
    if (eq == std::string::npos) fail(ErrorKind::ParseError, "expected var=value, got " + tok);
    out[tok.substr(0, eq)] = Rational::parse(tok.substr(eq + 1));
  }
  return out;
}

std::string join_ints(const std::vector<int>& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(v[i]);
  }
  return out;
}

struct MethodResult {
  std::string name;
  std::string display;
  std::optional<Rational> normalized;  // missing -> skipped
};

int report_methods(const std::vector<MethodResult>& results) {
  bool agree = true;
  std::optional<Rational> reference;
  for (const MethodResult& r : results) {
    std::printf("%-11s %s\n", r.name.c_str(), r.display.c_str());
    if (!r.normalized) continue;
    if (!reference)
      reference = r.normalized;
    else if (*reference != *r.normalized)
      agree = false;
  }
  std::printf("%s\n", agree ? "AGREE" : "DISAGREE");
  return agree ? 0 : 1;
}

bool within_enum_cap(size_t n) { return n <= static_cast<size_t>(limits().enum_len_cap); }

// --- count -------------------------------------------------------------------

struct CountOpts {
  std::string alpha = "1", beta = "1";
  int n = 1, a = 1, b = 1, k = 1;
  std::string u;
  std::string method;
  bool all_methods = false;
};

int run_count_basic(const CountOpts& o) {
  Rational alpha = Rational::parse(o.alpha);
  Rational beta = Rational::parse(o.beta);
  auto brute = [&]() -> std::optional<Rational> {
    if (!within_enum_cap(o.n)) return std::nullopt;
    WeightVector x(o.n, beta);
    if (o.n > 0) x[0] = alpha;
    return Rational(BigInt(enumerate_u_parking(prefix_sums(x)).size()));
  };
  if (o.all_methods) {
    std::vector<MethodResult> rows;
    Rational formula = count_basic(alpha, beta, o.n);
    rows.push_back({"formula", formula.str(), formula});
    auto bf = brute();
    rows.push_back({"bruteforce", bf ? bf->str() : "skipped (length > cap)", bf});
    return report_methods(rows);
  }
  if (o.method == "bruteforce") {
    auto bf = brute();
    if (!bf) fail(ErrorKind::TooLarge, "length exceeds the enumeration cap");
    std::printf("%s\n", bf->str().c_str());
  } else {
    std::printf("%s\n", count_basic(alpha, beta, o.n).str().c_str());
  }
  return 0;
}

int run_count_rational(const CountOpts& o) {
  ThresholdVector u = ab_threshold_vector(o.a, o.b, o.b);
  auto brute = [&]() -> std::optional<Rational> {
    if (!within_enum_cap(u.size())) return std::nullopt;
    return Rational(BigInt(enumerate_u_parking(u).size()));
  };
  if (o.all_methods) {
    std::vector<MethodResult> rows;
    Rational formula(count_rational(o.a, o.b));
    rows.push_back({"formula", formula.str(), formula});
    Rational incl = count_u_incl_excl(u);
    rows.push_back({"inclexcl", incl.str(), incl});
    auto bf = brute();
    rows.push_back({"bruteforce", bf ? bf->str() : "skipped (length > cap)", bf});
    return report_methods(rows);
  }
  if (o.method == "bruteforce") {
    auto bf = brute();
    if (!bf) fail(ErrorKind::TooLarge, "length exceeds the enumeration cap");
    std::printf("%s\n", bf->str().c_str());
  } else if (o.method == "inclexcl") {
    std::printf("%s\n", count_u_incl_excl(u).str().c_str());
  } else {
    std::cout << count_rational(o.a, o.b).str() << "\n";
  }
  return 0;
}

int run_count_u(const CountOpts& o) {
  ThresholdVector u = parse_rat_seq(o.u);
  auto brute = [&]() -> std::optional<Rational> {
    if (!within_enum_cap(u.size())) return std::nullopt;
    return Rational(BigInt(enumerate_u_parking(u).size()));
  };
  if (o.all_methods) {
    std::vector<MethodResult> rows;
    Rational incl = count_u_incl_excl(u);
    rows.push_back({"inclexcl", incl.str(), incl});
    auto bf = brute();
    rows.push_back({"bruteforce", bf ? bf->str() : "skipped (length > cap)", bf});
    return report_methods(rows);
  }
  if (o.method == "bruteforce") {
    auto bf = brute();
    if (!bf) fail(ErrorKind::TooLarge, "length exceeds the enumeration cap");
    std::printf("%s\n", bf->str().c_str());
  } else {
    std::printf("%s\n", count_u_incl_excl(u).str().c_str());
  }
  return 0;
}

int run_count_periodic(const CountOpts& o) {
  const int a = o.a, b = o.b, k = o.k;
  Rational scale = Rational(b).pow(k * b);
  auto brute = [&]() -> std::optional<Rational> {
    if (!within_enum_cap(static_cast<size_t>(k) * b)) return std::nullopt;
    return Rational(BigInt(enumerate_u_parking(ab_threshold_vector(a, b, k * b)).size()));
  };
  if (o.all_methods) {
    std::vector<MethodResult> rows;
    Rational specsum = count_periodic_specsum(a, b, k);
    rows.push_back({"specsum", specsum.str(), specsum});
    BigInt scaled = count_periodic_scaled(a, b, k);
    Rational scaled_norm = Rational(scaled) / scale;
    rows.push_back({"scaled", scaled.str() + " (/b^kb = " + scaled_norm.str() + ")", scaled_norm});
    Rational egf(count_periodic_egf(a, b, k));
    rows.push_back({"egf", egf.str(), egf});
    BigInt grammar = count_periodic_grammar(a, b, k);
    Rational grammar_norm = Rational(grammar) / scale;
    rows.push_back(
        {"grammar", grammar.str() + " (/b^kb = " + grammar_norm.str() + ")", grammar_norm});
    auto bf = brute();
    rows.push_back({"bruteforce", bf ? bf->str() : "skipped (length > cap)", bf});
    return report_methods(rows);
  }
  std::string method = o.method.empty() || o.method == "formula" ? "specsum" : o.method;
  if (method == "specsum") {
    std::printf("%s\n", count_periodic_specsum(a, b, k).str().c_str());
  } else if (method == "scaled") {
    std::cout << count_periodic_scaled(a, b, k).str() << "\n";
  } else if (method == "egf") {
    std::cout << count_periodic_egf(a, b, k).str() << "\n";
  } else if (method == "grammar") {
    std::cout << count_periodic_grammar(a, b, k).str() << "\n";
  } else if (method == "bruteforce") {
    auto bf = brute();
    if (!bf) fail(ErrorKind::TooLarge, "length exceeds the enumeration cap");
    std::printf("%s\n", bf->str().c_str());
  } else {
    fail(ErrorKind::BadParameter, "unknown method " + method);
  }
  return 0;
}

// --- qpoly -------------------------------------------------------------------

struct QpolyOpts {
  int n = 1, a = 1, b = 1, d = 1, l = 1, k = 0;
  std::string u;
  bool dense = false, json = false, check = false;
};

int print_qpoly(const QPolynomial& p, const QpolyOpts& o,
                const std::optional<ThresholdVector>& check_u) {
  if (o.json) {
    nlohmann::json doc{{"coeffs", qpoly_dense_coeffs(p)}, {"pretty", qpoly_str(p)}};
    std::cout << doc.dump() << "\n";
  } else {
    std::cout << qpoly_str(p) << "\n";
    if (o.dense) {
      auto coeffs = qpoly_dense_coeffs(p);
      std::string joined;
      for (size_t i = 0; i < coeffs.size(); ++i) {
        if (i > 0) joined += ",";
        joined += coeffs[i];
      }
      std::cout << "coeffs: " << joined << "\n";
    }
  }
  if (o.check) {
    if (!check_u || !within_enum_cap(check_u->size())) {
      std::cout << "CHECK SKIPPED (out of enumeration bounds)\n";
      return 0;
    }
    bool ok = p == q_bruteforce(*check_u);
    std::cout << (ok ? "CHECK OK" : "CHECK FAIL") << "\n";
    return ok ? 0 : 1;
  }
  return 0;
}

// --- derive ------------------------------------------------------------------

struct DeriveOpts {
  std::string grammar = "G";
  std::string rules_file;
  std::string start = "S";
  int n = 1;
  std::string subst;
  std::string hook;
  bool json = false;
};

int run_derive(const DeriveOpts& o) {
  Grammar g = [&] {
    if (!o.rules_file.empty()) {
      std::ifstream in(o.rules_file);
      if (!in) fail(ErrorKind::BadParameter, "cannot open " + o.rules_file);
      std::stringstream buffer;
      buffer << in.rdbuf();
      return Grammar::from_text(buffer.str());
    }
    return builtin_grammar(o.grammar);
  }();

  Polynomial result = derive_n(g, Polynomial::parse(o.start), o.n);

  if (!o.hook.empty()) {
    // hook spec "spec:b=<int>"; the t-variable count comes from the grammar
    if (o.hook.rfind("spec:b=", 0) != 0)
      fail(ErrorKind::BadParameter, "unknown hook '" + o.hook + "' (expected spec:b=<int>)");
    int b = std::stoi(o.hook.substr(7));
    int k = 0;
    for (const auto& [v, rhs] : g.rules())
      if (v.size() > 1 && v[0] == 't') k = std::max(k, std::stoi(v.substr(1)));
    if (k == 0) fail(ErrorKind::BadParameter, "grammar has no t-variables for the spec hook");
    Rational value = result.eval_with_functional(parse_assignment(o.subst), spec_step_hook(k, b));
    if (o.json)
      std::cout << nlohmann::json{{"value", value.str()}}.dump() << "\n";
    else
      std::cout << value.str() << "\n";
    return 0;
  }

  if (!o.subst.empty()) result = result.substitute(parse_assignment(o.subst));
  if (o.json) {
    std::cout << result.to_json_string() << "\n";
  } else if (result.is_constant()) {
    std::cout << result.constant_value().str() << "\n";
  } else {
    std::cout << result.str() << "\n";
  }
  return 0;
}

// --- verify ------------------------------------------------------------------

struct VerifyOpts {
  int k = 4, n = 6, a = 3, b = 2, d = 2;
  int trials = 100;
  std::uint64_t seed = kDefaultSeed;
  bool quick = false;
};

class Reporter {
public:
  void record(bool ok, const std::string& line) {
    std::printf("%s %s\n", ok ? "PASS" : "FAIL", line.c_str());
    ++total_;
    failures_ += ok ? 0 : 1;
  }
  int finish() const {
    std::printf("%d/%d passed\n", total_ - failures_, total_);
    return failures_ == 0 ? 0 : 1;
  }
  int failures() const { return failures_; }

private:
  int total_ = 0;
  int failures_ = 0;
};

Rational random_rational(std::mt19937_64& rng, int num_abs, int den_max, bool nonzero) {
  std::uniform_int_distribution<int> num(-num_abs, num_abs);
  std::uniform_int_distribution<int> den(1, den_max);
  while (true) {
    Rational r(BigInt(num(rng)), BigInt(den(rng)));
    if (!nonzero || !r.is_zero()) return r;
  }
}

void verify_abel(const VerifyOpts& o, Reporter& reporter) {
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<int> pick_k(1, o.k), pick_n(1, o.n);
  for (int trial = 0; trial < o.trials; ++trial) {
    int k = pick_k(rng), n = pick_n(rng);
    std::vector<Rational> xs;
    std::string shown;
    for (int i = 0; i < k; ++i) {
      xs.push_back(random_rational(rng, 6, 3, true));
      shown += (i ? "," : "") + xs.back().str();
    }
    auto [lhs, rhs] = abel_identity_sides(xs, n);
    reporter.record(lhs == rhs, "abel n=" + std::to_string(n) + " xs=(" + shown + ")");
  }
}

void verify_cor3(const VerifyOpts& o, Reporter& reporter) {
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<int> pick_k(1, o.k), pick_n(1, o.n);
  int done = 0;
  while (done < o.trials) {
    int k = pick_k(rng), n = pick_n(rng);
    Rational x = random_rational(rng, 9, 3, false);
    if (x == Rational(k)) continue;
    auto [lhs, rhs] = abel_uniform_sides(x, n, k);
    reporter.record(lhs == rhs, "cor3 x=" + x.str() + " n=" + std::to_string(n) +
                                    " k=" + std::to_string(k));
    ++done;
  }
}

void verify_scaling(const VerifyOpts& o, Reporter& reporter) {
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<int> pick_n(1, o.n);
  for (int trial = 0; trial < o.trials; ++trial) {
    int n = pick_n(rng);
    std::vector<Rational> u;
    std::string shown;
    for (int i = 0; i < n; ++i) {
      u.push_back(random_rational(rng, 6, 4, false));
      shown += (i ? "," : "") + u.back().str();
    }
    bool ok = true;
    for (const Rational& k : {Rational(2), Rational(3), Rational::parse("5/2")})
      ok = ok && check_scaling(u, k);
    reporter.record(ok, "scaling u=(" + shown + ") k=2,3,5/2");
  }
}

void verify_thm15(const VerifyOpts& o, Reporter& reporter) {
  const int a = o.a, b = o.b, k = o.k;
  Rational specsum = count_periodic_specsum(a, b, k);
  Rational scale = Rational(b).pow(k * b);
  std::string tag = "thm15 a=" + std::to_string(a) + " b=" + std::to_string(b) +
                    " k=" + std::to_string(k) + " ";
  reporter.record(Rational(count_periodic_scaled(a, b, k)) / scale == specsum, tag + "scaled");
  reporter.record(Rational(count_periodic_egf(a, b, k)) == specsum, tag + "egf");
  reporter.record(Rational(count_periodic_grammar(a, b, k)) / scale == specsum, tag + "grammar");
  if (within_enum_cap(static_cast<size_t>(k) * b)) {
    BigInt brute(enumerate_u_parking(ab_threshold_vector(a, b, k * b)).size());
    reporter.record(Rational(brute) == specsum, tag + "bruteforce");
  }
}

void verify_thm24(const VerifyOpts& o, Reporter& reporter) {
  std::string tag = "thm24 a=" + std::to_string(o.a) + " b=" + std::to_string(o.b) +
                    " d=" + std::to_string(o.d);
  QPolynomial formula = q_periodic(o.a, o.b, o.d);
  if (!within_enum_cap(static_cast<size_t>(o.d) * o.b)) {
    reporter.record(false, tag + " (length exceeds enumeration cap)");
    return;
  }
  reporter.record(formula == q_bruteforce(ab_threshold_vector(o.a, o.b, o.d * o.b)), tag);
}

int run_verify(const std::string& suite, VerifyOpts o) {
  if (o.quick) o.trials = std::min(o.trials, 20);
  Reporter reporter;
  if (suite == "abel") {
    verify_abel(o, reporter);
  } else if (suite == "cor3") {
    verify_cor3(o, reporter);
  } else if (suite == "scaling") {
    verify_scaling(o, reporter);
  } else if (suite == "thm15") {
    verify_thm15(o, reporter);
  } else if (suite == "thm24") {
    verify_thm24(o, reporter);
  } else if (suite == "all") {
    verify_abel(o, reporter);
    verify_cor3(o, reporter);
    verify_scaling(o, reporter);
    for (auto [a, b, k] : std::vector<std::array<int, 3>>{{3, 2, 2}, {2, 3, 2}}) {
      VerifyOpts p = o;
      p.a = a;
      p.b = b;
      p.k = k;
      verify_thm15(p, reporter);
    }
    for (auto [a, b, d] : std::vector<std::array<int, 3>>{{3, 2, 1}, {3, 2, 2}, {4, 3, 1}}) {
      VerifyOpts p = o;
      p.a = a;
      p.b = b;
      p.d = d;
      verify_thm24(p, reporter);
    }
  } else {
    fail(ErrorKind::BadParameter, "unknown suite " + suite);
  }
  return reporter.finish();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact parking-function counts, grammar derivatives, and q-analogues"};
  app.require_subcommand(1);
  int rc = 0;

  int max_order = 0, max_enum = 0;
  app.add_option("--max-order", max_order, "override the derivative-order cap");
  app.add_option("--max-enum", max_enum, "override the enumeration-length cap");
  app.parse_complete_callback([&] {
    if (max_order > 0) limits().derive_cap = max_order;
    if (max_enum > 0) limits().enum_len_cap = max_enum;
  });

  // count
  CountOpts count_opts;
  auto* count = app.add_subcommand("count", "count parking functions");
  count->require_subcommand(1);
  auto add_count_common = [&](CLI::App* cmd, std::vector<std::string> methods) {
    cmd->add_option("--method", count_opts.method, "computation route")
        ->check(CLI::IsMember(methods));
    cmd->add_flag("--all-methods", count_opts.all_methods,
                  "run every applicable route and report agreement");
  };
  auto* count_basic_cmd = count->add_subcommand("basic", "alpha*(alpha+n*beta)^(n-1)");
  count_basic_cmd->add_option("--alpha", count_opts.alpha)->required();
  count_basic_cmd->add_option("--beta", count_opts.beta)->required();
  count_basic_cmd->add_option("-n", count_opts.n)->required();
  add_count_common(count_basic_cmd, {"formula", "bruteforce"});
  count_basic_cmd->callback([&] { rc = run_count_basic(count_opts); });

  auto* count_rational_cmd = count->add_subcommand("rational", "a^(b-1) for coprime slopes");
  count_rational_cmd->add_option("-a", count_opts.a)->required();
  count_rational_cmd->add_option("-b", count_opts.b)->required();
  add_count_common(count_rational_cmd, {"formula", "bruteforce", "inclexcl"});
  count_rational_cmd->callback([&] { rc = run_count_rational(count_opts); });

  auto* count_u_cmd = count->add_subcommand("u", "count against a threshold vector");
  count_u_cmd->add_option("-u", count_opts.u, "thresholds, e.g. 1,2 or 1,3/2")->required();
  add_count_common(count_u_cmd, {"inclexcl", "bruteforce"});
  count_u_cmd->callback([&] { rc = run_count_u(count_opts); });

  auto* count_periodic_cmd = count->add_subcommand("periodic", "(ka,kb)-parking counts");
  count_periodic_cmd->add_option("-a", count_opts.a)->required();
  count_periodic_cmd->add_option("-b", count_opts.b)->required();
  count_periodic_cmd->add_option("-k", count_opts.k)->required();
  add_count_common(count_periodic_cmd,
                   {"formula", "specsum", "scaled", "egf", "grammar", "bruteforce"});
  count_periodic_cmd->callback([&] { rc = run_count_periodic(count_opts); });

  // enumerate
  std::string enum_u;
  bool enum_json = false;
  auto* enumerate = app.add_subcommand("enumerate", "list parking functions lexicographically");
  enumerate->add_option("-u", enum_u, "threshold vector")->required();
  enumerate->add_flag("--json", enum_json);
  enumerate->callback([&] {
    auto all = enumerate_u_parking(parse_rat_seq(enum_u));
    if (enum_json) {
      nlohmann::json items = nlohmann::json::array();
      for (const PFSeq& c : all) items.push_back(c);
      std::cout << nlohmann::json{{"count", all.size()}, {"items", items}}.dump() << "\n";
    } else {
      for (const PFSeq& c : all) std::cout << join_ints(c) << "\n";
    }
    rc = 0;
  });

  // check
  std::string check_seq, check_u, check_x;
  int check_a = 1, check_b = 1;
  auto* check = app.add_subcommand("check", "membership predicates (exit 1 on false)");
  check->require_subcommand(1);
  auto* check_u_cmd = check->add_subcommand("u", "u-parking membership");
  check_u_cmd->add_option("-s", check_seq)->required();
  check_u_cmd->add_option("-u", check_u)->required();
  check_u_cmd->callback([&] {
    bool ok = is_u_parking(parse_int_seq(check_seq), parse_rat_seq(check_u));
    std::cout << (ok ? "true" : "false") << "\n";
    rc = ok ? 0 : 1;
  });
  auto* check_x_cmd = check->add_subcommand("x", "x-parking membership");
  check_x_cmd->add_option("-s", check_seq)->required();
  check_x_cmd->add_option("-x", check_x)->required();
  check_x_cmd->callback([&] {
    bool ok = is_x_parking(parse_int_seq(check_seq), parse_rat_seq(check_x));
    std::cout << (ok ? "true" : "false") << "\n";
    rc = ok ? 0 : 1;
  });
  auto* check_ab_cmd = check->add_subcommand("ab", "(a,b)-parking membership");
  check_ab_cmd->add_option("-s", check_seq)->required();
  check_ab_cmd->add_option("-a", check_a)->required();
  check_ab_cmd->add_option("-b", check_b)->required();
  check_ab_cmd->callback([&] {
    bool ok = is_ab_parking(parse_int_seq(check_seq), check_a, check_b);
    std::cout << (ok ? "true" : "false") << "\n";
    rc = ok ? 0 : 1;
  });

  // qpoly
  QpolyOpts q_opts;
  auto* qpoly = app.add_subcommand("qpoly", "generating polynomials for the ones statistic");
  qpoly->require_subcommand(1);
  auto add_q_common = [&](CLI::App* cmd) {
    cmd->add_flag("--dense", q_opts.dense, "also print the dense coefficient list");
    cmd->add_flag("--json", q_opts.json);
    cmd->add_flag("--check", q_opts.check, "cross-verify against brute force");
  };
  auto* q_classical_cmd = qpoly->add_subcommand("classical", "q*(q+n)^(n-1)");
  q_classical_cmd->add_option("-n", q_opts.n)->required();
  add_q_common(q_classical_cmd);
  q_classical_cmd->callback([&] {
    ThresholdVector u;
    for (int i = 1; i <= q_opts.n; ++i) u.push_back(Rational(i));
    rc = print_qpoly(q_classical(q_opts.n), q_opts, u);
  });
  auto* q_basic_cmd = qpoly->add_subcommand("basic", "(q+a-1)*(q+a-1+bn)^(n-1)");
  q_basic_cmd->add_option("-a", q_opts.a)->required();
  q_basic_cmd->add_option("-b", q_opts.b)->required();
  q_basic_cmd->add_option("-n", q_opts.n)->required();
  add_q_common(q_basic_cmd);
  q_basic_cmd->callback([&] {
    WeightVector x(q_opts.n, Rational(q_opts.b));
    if (!x.empty()) x[0] = q_opts.a;
    rc = print_qpoly(q_basic(q_opts.a, q_opts.b, q_opts.n), q_opts, prefix_sums(x));
  });
  auto* q_lemma52_cmd = qpoly->add_subcommand("lemma52", "q*(q+lk)^(l-1)");
  q_lemma52_cmd->add_option("-l", q_opts.l)->required();
  q_lemma52_cmd->add_option("-k", q_opts.k)->required();
  add_q_common(q_lemma52_cmd);
  q_lemma52_cmd->callback([&] {
    WeightVector x(q_opts.l, Rational(q_opts.k));
    if (!x.empty()) x[0] = 1;
    rc = print_qpoly(q_unit_step(q_opts.l, q_opts.k), q_opts, prefix_sums(x));
  });
  auto* q_thm24_cmd = qpoly->add_subcommand("thm24", "spec-composition q-sum, a = 1 (mod b)");
  q_thm24_cmd->add_option("-a", q_opts.a)->required();
  q_thm24_cmd->add_option("-b", q_opts.b)->required();
  q_thm24_cmd->add_option("-d", q_opts.d)->required();
  add_q_common(q_thm24_cmd);
  q_thm24_cmd->callback([&] {
    rc = print_qpoly(q_periodic(q_opts.a, q_opts.b, q_opts.d), q_opts,
                     ab_threshold_vector(q_opts.a, q_opts.b, q_opts.d * q_opts.b));
  });
  auto* q_finalcor_cmd = qpoly->add_subcommand("finalcor", "degenerate-slope q-sum");
  q_finalcor_cmd->add_option("-b", q_opts.b)->required();
  q_finalcor_cmd->add_option("-d", q_opts.d)->required();
  add_q_common(q_finalcor_cmd);
  q_finalcor_cmd->callback([&] {
    rc = print_qpoly(q_periodic_limit(q_opts.b, q_opts.d), q_opts,
                     block_threshold_vector(q_opts.b, q_opts.d * q_opts.b));
  });
  auto* q_brute_cmd = qpoly->add_subcommand("bruteforce", "enumerate and tally q^Z(c)");
  q_brute_cmd->add_option("-u", q_opts.u)->required();
  add_q_common(q_brute_cmd);
  q_brute_cmd->callback([&] {
    q_opts.check = false;  // it is its own oracle
    rc = print_qpoly(q_bruteforce(parse_rat_seq(q_opts.u)), q_opts, std::nullopt);
  });

  // derive
  DeriveOpts derive_opts;
  auto* derive_cmd = app.add_subcommand("derive", "apply the formal derivative n times");
  derive_cmd->add_option("-g,--grammar", derive_opts.grammar,
                         "builtin name: G | H | Hprime:k | H1:a:b | K:k | F");
  derive_cmd->add_option("--rules", derive_opts.rules_file, "load grammar from a rules file");
  derive_cmd->add_option("-s,--start", derive_opts.start, "start expression")->required();
  derive_cmd->add_option("-n", derive_opts.n, "derivative order")->required();
  derive_cmd->add_option("--subst", derive_opts.subst, "substitutions, e.g. A=1,S=1");
  derive_cmd->add_option("--hook", derive_opts.hook, "exponent hook, e.g. spec:b=2");
  derive_cmd->add_flag("--json", derive_opts.json);
  derive_cmd->callback([&] { rc = run_derive(derive_opts); });

  // spec
  int spec_k = 1, spec_b = 1, spec_m = 0;
  std::string spec_seq;
  auto* spec_cmd = app.add_subcommand("spec", "spec(k,b) compositions or value multiplicities");
  spec_cmd->add_option("-k", spec_k);
  spec_cmd->add_option("-b", spec_b);
  spec_cmd->add_option("--seq", spec_seq, "sequence for the multiplicity vector");
  spec_cmd->add_option("-m", spec_m, "max value for the multiplicity vector");
  spec_cmd->callback([&] {
    if (!spec_seq.empty()) {
      PFSeq c = parse_int_seq(spec_seq);
      int m = spec_m > 0 ? spec_m : *std::max_element(c.begin(), c.end());
      std::cout << join_ints(specification(c, m)) << "\n";
    } else {
      for (const auto& J : spec_compositions(spec_k, spec_b)) std::cout << join_ints(J) << "\n";
    }
    rc = 0;
  });

  // convert
  std::string conv_seq;
  int conv_a = 1, conv_b = 1;
  auto* convert = app.add_subcommand("convert", "representation conversions");
  convert->require_subcommand(1);
  auto* ab2u = convert->add_subcommand("ab2u", "(a,b)-form to u-form (+1 shift)");
  ab2u->add_option("-s", conv_seq)->required();
  ab2u->callback([&] {
    std::cout << join_ints(ab_to_u_pf(parse_int_seq(conv_seq))) << "\n";
    rc = 0;
  });
  auto* u2ab = convert->add_subcommand("u2ab", "u-form to (a,b)-form (-1 shift)");
  u2ab->add_option("-s", conv_seq)->required();
  u2ab->callback([&] {
    std::cout << join_ints(u_to_ab_pf(parse_int_seq(conv_seq))) << "\n";
    rc = 0;
  });
  auto* pf2dyck = convert->add_subcommand("pf2dyck", "labeled lattice path of a parking function");
  pf2dyck->add_option("-s", conv_seq)->required();
  pf2dyck->add_option("-a", conv_a)->required();
  pf2dyck->add_option("-b", conv_b)->required();
  pf2dyck->callback([&] {
    std::cout << dyck_path_of(parse_int_seq(conv_seq), conv_a, conv_b).str() << "\n";
    rc = 0;
  });
  auto* dyck2pf = convert->add_subcommand("dyck2pf", "read E-step heights back from a path");
  dyck2pf->add_option("-s", conv_seq)->required();
  dyck2pf->callback([&] {
    std::cout << join_ints(LatticePath::parse(conv_seq).heights()) << "\n";
    rc = 0;
  });

  // verify
  VerifyOpts verify_opts;
  std::string verify_suite;
  auto* verify = app.add_subcommand("verify", "randomized identity suites");
  verify->add_option("suite", verify_suite, "abel | cor3 | scaling | thm15 | thm24 | all")
      ->required();
  verify->add_option("-k,--k", verify_opts.k);
  verify->add_option("-n,--n", verify_opts.n);
  verify->add_option("-a", verify_opts.a);
  verify->add_option("-b", verify_opts.b);
  verify->add_option("-d", verify_opts.d);
  verify->add_option("--trials", verify_opts.trials);
  verify->add_option("--seed", verify_opts.seed, "default 12345");
  verify->add_flag("--quick", verify_opts.quick, "cap trials at 20");
  verify->callback([&] { rc = run_verify(verify_suite, verify_opts); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
