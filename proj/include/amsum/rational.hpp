#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace amsum {

/// Arbitrary-precision signed integer.
using BigInt = mpz_class;

/// Exact arbitrary-precision fraction.
///
/// Canonical form is maintained after every operation: the denominator is
/// positive, gcd(|numerator|, denominator) == 1 and zero is stored as 0/1.
/// Equality is therefore a plain component comparison.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long n) : q_(n) {}  // NOLINT: implicit by design, integers embed
  Rational(const BigInt& n) : q_(n) {}
  Rational(const BigInt& num, const BigInt& den);
  Rational(long num, long den);

  BigInt numerator() const { return q_.get_num(); }
  BigInt denominator() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rational operator-() const;
  Rational operator+(const Rational& rhs) const;
  Rational operator-(const Rational& rhs) const;
  Rational operator*(const Rational& rhs) const;
  Rational operator/(const Rational& rhs) const;

  Rational& operator+=(const Rational& rhs) { return *this = *this + rhs; }
  Rational& operator-=(const Rational& rhs) { return *this = *this - rhs; }
  Rational& operator*=(const Rational& rhs) { return *this = *this * rhs; }
  Rational& operator/=(const Rational& rhs) { return *this = *this / rhs; }

  /// Integer power; negative exponents invert (zero base -> domain error).
  Rational pow(long e) const;

  bool operator==(const Rational& rhs) const { return q_ == rhs.q_; }
  bool operator!=(const Rational& rhs) const { return q_ != rhs.q_; }
  bool operator<(const Rational& rhs) const { return q_ < rhs.q_; }
  bool operator<=(const Rational& rhs) const { return q_ <= rhs.q_; }
  bool operator>(const Rational& rhs) const { return q_ > rhs.q_; }
  bool operator>=(const Rational& rhs) const { return q_ >= rhs.q_; }

  /// Renders as "p/q", or just "p" when the denominator is 1.
  std::string to_string() const;

  /// Parses "p" or "p/q" with optional leading sign. Throws
  /// std::invalid_argument on malformed input, std::domain_error on q = 0.
  static Rational parse(std::string_view text);

  double to_double() const { return q_.get_d(); }

 private:
  mpq_class q_;  // invariant: canonical
};

Rational abs(const Rational& r);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace amsum
