#include "parkgram/rational.hpp"

#include <utility>

namespace parkgram {

namespace mp = boost::multiprecision;

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) fail(ErrorKind::BadParameter, "rational with zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  BigInt g = mp::gcd(mp::abs(num_), den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::parse(std::string_view text) {
  auto parse_int = [](std::string_view s) -> BigInt {
    if (s.empty()) fail(ErrorKind::ParseError, "empty integer literal");
    size_t i = 0;
    bool neg = false;
    if (s[i] == '+' || s[i] == '-') {
      neg = s[i] == '-';
      ++i;
    }
    if (i == s.size()) fail(ErrorKind::ParseError, "sign without digits");
    BigInt value = 0;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9')
        fail(ErrorKind::ParseError, "bad digit in rational literal: '" + std::string(s) + "'");
      value = value * 10 + (s[i] - '0');
    }
    return neg ? BigInt(-value) : value;
  };

  // strip surrounding whitespace
  size_t b = text.find_first_not_of(" \t");
  size_t e = text.find_last_not_of(" \t");
  if (b == std::string_view::npos) fail(ErrorKind::ParseError, "empty rational literal");
  text = text.substr(b, e - b + 1);

  size_t slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  return {parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1))};
}

BigInt Rational::floor() const {
  BigInt q = num_ / den_;  // truncates toward zero
  if (num_ < 0 && num_ % den_ != 0) --q;
  return q;
}

Rational Rational::pow(long long e) const {
  if (e == 0) return 1;  // includes 0^0 = 1
  if (e < 0) {
    if (is_zero())
      fail(ErrorKind::ZeroToNegativePower, "0 raised to power " + std::to_string(e));
    return reciprocal().pow(-e);
  }
  Rational out;
  out.num_ = mp::pow(num_, static_cast<unsigned>(e));
  out.den_ = mp::pow(den_, static_cast<unsigned>(e));
  return out;  // canonical already: gcd(num,den)=1 is preserved by powers
}

Rational Rational::reciprocal() const {
  if (is_zero()) fail(ErrorKind::ZeroToNegativePower, "reciprocal of zero");
  Rational out;
  out.num_ = den_;
  out.den_ = num_;
  if (out.den_ < 0) {
    out.num_ = -out.num_;
    out.den_ = -out.den_;
  }
  return out;
}

std::string Rational::str() const {
  std::string s = num_.str();
  if (den_ != 1) s += "/" + den_.str();
  return s;
}

Rational Rational::operator-() const {
  Rational out = *this;
  out.num_ = -out.num_;
  return out;
}

Rational& Rational::operator+=(const Rational& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  num_ = num_ * o.den_ - o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) fail(ErrorKind::BadParameter, "division by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
  BigInt lhs = num_ * o.den_;
  BigInt rhs = o.num_ * den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace parkgram
