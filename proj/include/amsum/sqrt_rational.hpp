#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "amsum/rational.hpp"

namespace amsum {

/// Exact value of the form sign * sqrt(radicand) with a nonnegative rational
/// radicand. Closed under multiplication; squaring is exactly rational. This
/// is the scalar carrying 3jm/6j/Clebsch-Gordan values. Sums of
/// incommensurable radicals are deliberately unsupported so equality stays
/// decidable.
class SqrtRational {
 public:
  /// Zero.
  SqrtRational() : sign_(0), radicand_(0) {}

  static SqrtRational from_sign_radicand(int sign, const Rational& radicand);

  /// Embeds a rational value v as sign(v) * sqrt(v^2).
  static SqrtRational of_rational(const Rational& v);

  int sign() const { return sign_; }
  const Rational& radicand() const { return radicand_; }
  bool is_zero() const { return sign_ == 0; }

  /// Exactly rational: (sign * sqrt(r))^2 == r.
  Rational square() const { return radicand_; }

  SqrtRational operator-() const { return from_sign_radicand(-sign_, radicand_); }
  SqrtRational operator*(const SqrtRational& rhs) const;
  SqrtRational& operator*=(const SqrtRational& rhs) { return *this = *this * rhs; }

  bool operator==(const SqrtRational& rhs) const {
    return sign_ == rhs.sign_ && radicand_ == rhs.radicand_;
  }
  bool operator!=(const SqrtRational& rhs) const { return !(*this == rhs); }
  bool operator<(const SqrtRational& rhs) const;

  /// The represented value when the radicand is a perfect rational square.
  std::optional<Rational> as_exact_rational() const;

  /// "0"; "p/q" when the radicand is a perfect square; "+sqrt(p/q)" or
  /// "-sqrt(p/q)" otherwise.
  std::string to_string() const;

  /// Accepts the to_string() forms plus unsigned "sqrt(p/q)".
  static SqrtRational parse(std::string_view text);

  double to_double() const;

 private:
  int sign_;           // -1, 0, +1; 0 iff radicand is 0
  Rational radicand_;  // >= 0, canonical
};

/// Principal square root; r must be nonnegative.
SqrtRational sqrt_of_rational(const Rational& r);

SqrtRational operator*(const Rational& lhs, const SqrtRational& rhs);
SqrtRational operator*(const SqrtRational& lhs, const Rational& rhs);

std::ostream& operator<<(std::ostream& os, const SqrtRational& v);

}  // namespace amsum
