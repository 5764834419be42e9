#pragma once

// Exact rational scalars backed by GMP.
//
// Every coefficient in the library (Bernoulli numbers, projection
// constants, subgroup indices) is a Rational.  Values are kept in lowest
// terms with a positive denominator; there is no floating point anywhere.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace agtaut {

using BigInt = mpz_class;

class Rational {
 public:
  Rational() = default;
  Rational(int n) : value_(n) {}                   // NOLINT(runtime/explicit)
  Rational(unsigned n) : value_(n) {}              // NOLINT(runtime/explicit)
  Rational(long n) : value_(n) {}                  // NOLINT(runtime/explicit)
  Rational(long long n);                           // NOLINT(runtime/explicit)
  Rational(unsigned long n) : value_(n) {}         // NOLINT(runtime/explicit)
  Rational(unsigned long long n);                  // NOLINT(runtime/explicit)
  Rational(BigInt const& n) : value_(n) {}         // NOLINT(runtime/explicit)
  Rational(BigInt const& num, BigInt const& den);

  // Accepts "p", "-p", "p/q".  Throws std::invalid_argument on malformed
  // input or a zero denominator.
  static Rational parse(std::string_view text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  // Throws std::domain_error if the value is not an integer.
  BigInt to_integer() const;

  Rational abs() const;
  // Integer power; negative exponents invert (zero base throws).
  Rational pow(long exponent) const;

  Rational operator-() const;
  Rational& operator+=(Rational const& rhs);
  Rational& operator-=(Rational const& rhs);
  Rational& operator*=(Rational const& rhs);
  Rational& operator/=(Rational const& rhs);

  friend Rational operator+(Rational lhs, Rational const& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, Rational const& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, Rational const& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, Rational const& rhs) { return lhs /= rhs; }

  friend bool operator==(Rational const& a, Rational const& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(Rational const& a, Rational const& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  // "p/q", or "p" when the denominator is 1.
  std::string str() const;

  mpq_class const& raw() const { return value_; }

 private:
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, Rational const& r);

// p^e for a non-negative integer exponent.
BigInt ipow(BigInt const& base, unsigned long exponent);

}  // namespace agtaut
