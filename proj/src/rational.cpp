#include "algeq/rational.hpp"

#include <cctype>

namespace algeq {

BigInt to_bigint(u128 value) {
  BigInt out = static_cast<std::uint64_t>(value >> 64);
  out <<= 64;
  out += static_cast<std::uint64_t>(value);
  return out;
}

Rational::Rational(BigInt numerator, BigInt denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_ == 0) throw Error(ErrorKind::InvalidArgument, "rational with zero denominator");
  if (num_ < 0 || den_ < 0)
    throw Error(ErrorKind::InvalidArgument, "bounds are non-negative rationals");
  const BigInt g = boost::multiprecision::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
  if (num_ == 0) den_ = 1;
}

Rational Rational::parse_decimal(const std::string& text) {
  auto bad = [&] { return Error(ErrorKind::InvalidArgument, "not a decimal number: " + text); };
  if (const auto slash = text.find('/'); slash != std::string::npos) {
    const u128 n = parse_u128(text.substr(0, slash));
    const u128 d = parse_u128(text.substr(slash + 1));
    if (d == 0) throw bad();
    return Rational(to_bigint(n), to_bigint(d));
  }
  std::size_t i = 0;
  BigInt mantissa = 0;
  long long exponent = 0;
  bool any_digit = false;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    mantissa = mantissa * 10 + (text[i++] - '0');
    any_digit = true;
  }
  if (i < text.size() && text[i] == '.') {
    ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      mantissa = mantissa * 10 + (text[i++] - '0');
      --exponent;
      any_digit = true;
    }
  }
  if (!any_digit) throw bad();
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    bool negative = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) negative = text[i++] == '-';
    if (i == text.size()) throw bad();
    long long e = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      e = e * 10 + (text[i++] - '0');
      if (e > 100000) throw bad();
    }
    exponent += negative ? -e : e;
  }
  if (i != text.size()) throw bad();
  BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(std::llabs(exponent)));
  return exponent >= 0 ? Rational(mantissa * scale, 1) : Rational(mantissa, scale);
}

Rational Rational::operator*(const Rational& o) const {
  return Rational(num_ * o.num_, den_ * o.den_);
}

Rational Rational::pow(std::size_t k) const {
  return Rational(boost::multiprecision::pow(num_, static_cast<unsigned>(k)),
                  boost::multiprecision::pow(den_, static_cast<unsigned>(k)));
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const BigInt lhs = a.num_ * b.den_;
  const BigInt rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::fraction() const { return num_.str() + "/" + den_.str(); }

std::string Rational::scientific(int digits) const {
  if (num_ == 0) return "0";
  // Find e with 10^(digits-1) <= num/den * 10^(-e) * 10^(digits-1) < 10^digits,
  // i.e. the leading digit of num/den sits at 10^e.
  const BigInt ten = 10;
  long long e = static_cast<long long>(num_.str().size()) - static_cast<long long>(den_.str().size());
  auto scaled = [&](long long exp10) {
    // floor(num/den * 10^exp10) together with the remainder test for rounding
    BigInt n = num_, d = den_;
    if (exp10 >= 0)
      n *= boost::multiprecision::pow(ten, static_cast<unsigned>(exp10));
    else
      d *= boost::multiprecision::pow(ten, static_cast<unsigned>(-exp10));
    return std::pair<BigInt, BigInt>{n, d};
  };
  // Adjust e so that 1 <= num/den / 10^e < 10.
  for (;;) {
    auto [n, d] = scaled(-e);
    if (n < d) {
      --e;
    } else if (n >= d * 10) {
      ++e;
    } else {
      break;
    }
  }
  auto [n, d] = scaled(digits - 1 - e);
  BigInt q = n / d;
  const BigInt r = n % d;
  if (r * 2 >= d) q += 1;
  std::string s = q.str();
  if (static_cast<int>(s.size()) > digits) {  // rounding carried into a new digit
    ++e;
    s = s.substr(0, static_cast<std::size_t>(digits));
  }
  std::string out = s.substr(0, 1);
  if (digits > 1) out += "." + s.substr(1);
  out += "e" + std::to_string(e);
  return out;
}

double Rational::to_double() const {
  return std::stod(scientific(17));
}

}  // namespace algeq
