#include "amsum/rational.hpp"

#include <cctype>
#include <ostream>

namespace amsum {

namespace {

void require_nonzero_den(const BigInt& den) {
  if (sgn(den) == 0) throw std::domain_error("Rational: zero denominator");
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
  require_nonzero_den(den);
  mpq_set_num(q_.get_mpq_t(), num.get_mpz_t());
  mpq_set_den(q_.get_mpq_t(), den.get_mpz_t());
  mpq_canonicalize(q_.get_mpq_t());
}

Rational::Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

Rational Rational::operator-() const {
  Rational r;
  r.q_ = -q_;
  return r;
}

Rational Rational::operator+(const Rational& rhs) const {
  Rational r;
  r.q_ = q_ + rhs.q_;
  return r;
}

Rational Rational::operator-(const Rational& rhs) const {
  Rational r;
  r.q_ = q_ - rhs.q_;
  return r;
}

Rational Rational::operator*(const Rational& rhs) const {
  Rational r;
  r.q_ = q_ * rhs.q_;
  return r;
}

Rational Rational::operator/(const Rational& rhs) const {
  if (rhs.is_zero()) throw std::domain_error("Rational: division by zero");
  Rational r;
  r.q_ = q_ / rhs.q_;
  return r;
}

Rational Rational::pow(long e) const {
  if (e < 0) {
    if (is_zero()) throw std::domain_error("Rational: negative power of zero");
    return Rational(1) / pow(-e);
  }
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(e));
  Rational r;
  // num/den is already canonical when the base is canonical
  mpq_set_num(r.q_.get_mpq_t(), num.get_mpz_t());
  mpq_set_den(r.q_.get_mpq_t(), den.get_mpz_t());
  return r;
}

std::string Rational::to_string() const { return q_.get_str(); }

Rational Rational::parse(std::string_view text) {
  // strict grammar: [+-]digits[/digits]
  std::size_t i = 0;
  auto digits_from = [&](std::size_t start) {
    std::size_t k = start;
    while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
    return k;
  };
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
  std::size_t num_end = digits_from(i);
  if (num_end == i) throw std::invalid_argument("Rational: expected digits in '" + std::string(text) + "'");
  std::size_t den_begin = num_end;
  if (den_begin < text.size() && text[den_begin] == '/') {
    ++den_begin;
    std::size_t den_end = digits_from(den_begin);
    if (den_end == den_begin || den_end != text.size())
      throw std::invalid_argument("Rational: malformed '" + std::string(text) + "'");
  } else if (num_end != text.size()) {
    throw std::invalid_argument("Rational: malformed '" + std::string(text) + "'");
  }
  mpq_class q;
  if (q.set_str(std::string(text[0] == '+' ? text.substr(1) : text), 10) != 0)
    throw std::invalid_argument("Rational: malformed '" + std::string(text) + "'");
  if (sgn(mpq_class(q.get_den())) == 0) throw std::domain_error("Rational: zero denominator");
  mpq_canonicalize(q.get_mpq_t());
  Rational r;
  r.q_ = q;
  return r;
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace amsum
