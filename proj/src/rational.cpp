#include "agtaut/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace agtaut {

namespace {

bool is_decimal_integer(std::string_view s) {
  if (s.empty()) {
    return false;
  }
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) {
    return false;
  }
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
      return false;
    }
  }
  return true;
}

BigInt parse_integer(std::string_view s) {
  if (!is_decimal_integer(s)) {
    throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  }
  if (s[0] == '+') {
    s.remove_prefix(1);
  }
  return BigInt(std::string(s), 10);
}

}  // namespace

Rational::Rational(long long n) : value_(BigInt(std::to_string(n), 10)) {}

Rational::Rational(unsigned long long n) : value_(BigInt(std::to_string(n), 10)) {}

Rational::Rational(BigInt const& num, BigInt const& den) {
  if (den == 0) {
    throw std::domain_error("rational with zero denominator");
  }
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text));
  }
  BigInt num = parse_integer(text.substr(0, slash));
  std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && den_text[0] == '-') {
    throw std::invalid_argument("denominator must be positive: '" + std::string(text) + "'");
  }
  BigInt den = parse_integer(den_text);
  if (den == 0) {
    throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  }
  return Rational(num, den);
}

BigInt Rational::to_integer() const {
  if (!is_integer()) {
    throw std::domain_error("not an integer: " + str());
  }
  return value_.get_num();
}

Rational Rational::abs() const {
  Rational r;
  r.value_ = ::abs(value_);
  return r;
}

Rational Rational::pow(long exponent) const {
  if (exponent < 0) {
    if (is_zero()) {
      throw std::domain_error("zero raised to a negative power");
    }
    return Rational(1) / pow(-exponent);
  }
  unsigned long e = static_cast<unsigned long>(exponent);
  return Rational(ipow(value_.get_num(), e), ipow(value_.get_den(), e));
}

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

Rational& Rational::operator+=(Rational const& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(Rational const& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(Rational const& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(Rational const& rhs) {
  if (rhs.is_zero()) {
    throw std::domain_error("division by zero");
  }
  value_ /= rhs.value_;
  return *this;
}

std::string Rational::str() const { return value_.get_str(10); }

std::ostream& operator<<(std::ostream& os, Rational const& r) { return os << r.str(); }

BigInt ipow(BigInt const& base, unsigned long exponent) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

}  // namespace agtaut
