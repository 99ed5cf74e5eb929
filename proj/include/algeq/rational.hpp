#pragma once

#include <compare>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "algeq/finite_field.hpp"

namespace algeq {

using BigInt = boost::multiprecision::cpp_int;

BigInt to_bigint(u128 value);

/// Non-negative exact fraction in lowest terms; used for error bounds, whose
/// denominators are powers of primes up to 2^127 - 1.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(BigInt numerator, BigInt denominator);

  static Rational zero() { return {}; }
  static Rational one() { return Rational(1, 1); }
  /// Parses "0.001", "1e-9", "2.5E-3", "3/7".
  static Rational parse_decimal(const std::string& text);

  const BigInt& numerator() const noexcept { return num_; }
  const BigInt& denominator() const noexcept { return den_; }
  bool is_zero() const { return num_ == 0; }

  Rational operator*(const Rational& o) const;
  Rational pow(std::size_t k) const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// "num/den".
  std::string fraction() const;
  /// Round-half-up scientific notation with `digits` significant figures,
  /// e.g. "4.61e-8"; zero renders as "0".
  std::string scientific(int digits = 3) const;
  double to_double() const;

 private:
  BigInt num_;
  BigInt den_;
};

}  // namespace algeq
