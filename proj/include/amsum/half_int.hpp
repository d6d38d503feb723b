#pragma once

#include <string>
#include <string_view>

#include "amsum/rational.hpp"

namespace amsum {

/// Exact half-integer, stored as twice its value. Angular momenta and their
/// projections live here; storing 2j removes fractional bookkeeping from the
/// momentum algebra.
class HalfInt {
 public:
  constexpr HalfInt() : twice_(0) {}
  constexpr HalfInt(long whole) : twice_(2 * whole) {}  // NOLINT: implicit

  static constexpr HalfInt from_twice(long twice) {
    HalfInt h;
    h.twice_ = twice;
    return h;
  }

  constexpr long twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }

  /// Value as a plain integer; only defined when is_integer().
  long whole() const;

  Rational to_rational() const { return Rational(twice_, 2); }
  double to_double() const { return 0.5 * static_cast<double>(twice_); }

  constexpr HalfInt operator-() const { return from_twice(-twice_); }
  constexpr HalfInt operator+(HalfInt rhs) const { return from_twice(twice_ + rhs.twice_); }
  constexpr HalfInt operator-(HalfInt rhs) const { return from_twice(twice_ - rhs.twice_); }

  constexpr bool operator==(HalfInt rhs) const { return twice_ == rhs.twice_; }
  constexpr bool operator!=(HalfInt rhs) const { return twice_ != rhs.twice_; }
  constexpr bool operator<(HalfInt rhs) const { return twice_ < rhs.twice_; }
  constexpr bool operator<=(HalfInt rhs) const { return twice_ <= rhs.twice_; }
  constexpr bool operator>(HalfInt rhs) const { return twice_ > rhs.twice_; }
  constexpr bool operator>=(HalfInt rhs) const { return twice_ >= rhs.twice_; }

  /// Renders as "k" for integers, "t/2" otherwise.
  std::string to_string() const;

  /// Parses "k" or "k/2" (optional sign). Throws std::invalid_argument.
  static HalfInt parse(std::string_view text);

 private:
  long twice_;
};

constexpr HalfInt abs(HalfInt h) { return h < HalfInt(0) ? -h : h; }
constexpr HalfInt min(HalfInt a, HalfInt b) { return a < b ? a : b; }
constexpr HalfInt max(HalfInt a, HalfInt b) { return a < b ? b : a; }

/// Exact product of two half-integers (a quarter-integer in general).
Rational operator*(HalfInt a, HalfInt b);

/// j(j+1), the eigenvalue of a squared angular-momentum operator.
Rational jjp1(HalfInt j);

/// (-1)^x for integral x; throws std::domain_error on a genuine half-integer.
int parity(HalfInt x);

/// j is usable as an angular momentum.
constexpr bool valid_momentum(HalfInt j) { return j.twice() >= 0; }

/// (j, m) is a momentum with one of its projections: |m| <= j, j - m integral.
constexpr bool valid_pair(HalfInt j, HalfInt m) {
  return valid_momentum(j) && abs(m) <= j && (j - m).is_integer();
}

std::ostream& operator<<(std::ostream& os, HalfInt h);

}  // namespace amsum
