#include "amsum/sqrt_rational.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace amsum {

namespace {

std::optional<BigInt> exact_isqrt(const BigInt& n) {
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
  BigInt root;
  mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
  return root;
}

}  // namespace

SqrtRational SqrtRational::from_sign_radicand(int sign, const Rational& radicand) {
  if (radicand.sign() < 0) throw std::domain_error("SqrtRational: negative radicand");
  SqrtRational v;
  v.sign_ = radicand.is_zero() ? 0 : sign;
  v.radicand_ = v.sign_ == 0 ? Rational(0) : radicand;
  return v;
}

SqrtRational SqrtRational::of_rational(const Rational& v) {
  return from_sign_radicand(v.sign(), v * v);
}

SqrtRational SqrtRational::operator*(const SqrtRational& rhs) const {
  return from_sign_radicand(sign_ * rhs.sign_, radicand_ * rhs.radicand_);
}

bool SqrtRational::operator<(const SqrtRational& rhs) const {
  if (sign_ != rhs.sign_) return sign_ < rhs.sign_;
  if (sign_ >= 0) return radicand_ < rhs.radicand_;
  return rhs.radicand_ < radicand_;  // both negative: larger radicand is smaller
}

std::optional<Rational> SqrtRational::as_exact_rational() const {
  if (sign_ == 0) return Rational(0);
  auto num = exact_isqrt(radicand_.numerator());
  auto den = exact_isqrt(radicand_.denominator());
  if (!num || !den) return std::nullopt;
  Rational magnitude(*num, *den);
  return sign_ < 0 ? -magnitude : magnitude;
}

std::string SqrtRational::to_string() const {
  if (sign_ == 0) return "0";
  if (auto exact = as_exact_rational()) return exact->to_string();
  return std::string(sign_ < 0 ? "-" : "+") + "sqrt(" + radicand_.to_string() + ")";
}

SqrtRational SqrtRational::parse(std::string_view text) {
  int sign = 1;
  std::string_view body = text;
  if (!body.empty() && (body[0] == '+' || body[0] == '-')) {
    if (body[0] == '-') sign = -1;
    body.remove_prefix(1);
  }
  if (body.rfind("sqrt(", 0) == 0) {
    if (body.back() != ')') throw std::invalid_argument("SqrtRational: malformed '" + std::string(text) + "'");
    Rational radicand = Rational::parse(body.substr(5, body.size() - 6));
    return from_sign_radicand(sign, radicand);
  }
  Rational value = Rational::parse(body);
  return of_rational(sign < 0 ? -value : value);
}

double SqrtRational::to_double() const {
  return sign_ * std::sqrt(radicand_.to_double());
}

SqrtRational sqrt_of_rational(const Rational& r) {
  return SqrtRational::from_sign_radicand(1, r);
}

SqrtRational operator*(const Rational& lhs, const SqrtRational& rhs) {
  return SqrtRational::of_rational(lhs) * rhs;
}

SqrtRational operator*(const SqrtRational& lhs, const Rational& rhs) {
  return lhs * SqrtRational::of_rational(rhs);
}

std::ostream& operator<<(std::ostream& os, const SqrtRational& v) { return os << v.to_string(); }

}  // namespace amsum
