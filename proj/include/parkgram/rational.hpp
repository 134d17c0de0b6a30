#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <string>
#include <string_view>

#include "parkgram/errors.hpp"

namespace parkgram {

using BigInt = boost::multiprecision::cpp_int;

/// Exact fraction over arbitrary-precision integers, always in canonical form:
/// denominator > 0 and gcd(|num|, den) = 1. Every operation in this library is
/// exact; nothing here ever rounds.
class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  explicit Rational(BigInt n) : num_(std::move(n)), den_(1) {}
  Rational(BigInt num, BigInt den);

  /// Accepts "p", "p/q", with optional sign on either part.
  static Rational parse(std::string_view text);

  const BigInt& num() const noexcept { return num_; }
  const BigInt& den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_ == 0; }
  bool is_integer() const noexcept { return den_ == 1; }
  int sign() const noexcept { return num_ < 0 ? -1 : (num_ > 0 ? 1 : 0); }

  /// Largest integer <= this value.
  BigInt floor() const;

  /// Integer power; e < 0 inverts (ZeroToNegativePower on zero base) and
  /// 0^0 = 1, which is the convention every identity here relies on.
  Rational pow(long long e) const;

  Rational reciprocal() const;

  std::string str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  // Canonical form makes structural equality the right equality.
  bool operator==(const Rational& o) const = default;
  std::strong_ordering operator<=>(const Rational& o) const;

private:
  void normalize();

  BigInt num_;
  BigInt den_;
};

}  // namespace parkgram
