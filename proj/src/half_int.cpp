#include "amsum/half_int.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace amsum {

long HalfInt::whole() const {
  if (!is_integer()) throw std::domain_error("HalfInt: " + to_string() + " is not an integer");
  return twice_ / 2;
}

std::string HalfInt::to_string() const {
  if (is_integer()) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

HalfInt HalfInt::parse(std::string_view text) {
  std::size_t i = 0;
  bool neg = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    neg = text[i] == '-';
    ++i;
  }
  std::size_t start = i;
  long value = 0;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    value = 10 * value + (text[i] - '0');
    ++i;
  }
  if (i == start) throw std::invalid_argument("HalfInt: expected digits in '" + std::string(text) + "'");
  bool halves = false;
  if (i < text.size()) {
    if (text.substr(i) != "/2")
      throw std::invalid_argument("HalfInt: malformed '" + std::string(text) + "' (use \"k\" or \"k/2\")");
    halves = true;
  }
  long twice = halves ? value : 2 * value;
  return from_twice(neg ? -twice : twice);
}

Rational operator*(HalfInt a, HalfInt b) { return Rational(a.twice() * b.twice(), 4); }

Rational jjp1(HalfInt j) { return Rational(j.twice() * (j.twice() + 2), 4); }

int parity(HalfInt x) {
  if (!x.is_integer()) throw std::domain_error("parity: (-1)^x undefined for half-integer x");
  return x.twice() % 4 == 0 ? 1 : -1;
}

std::ostream& operator<<(std::ostream& os, HalfInt h) { return os << h.to_string(); }

}  // namespace amsum
