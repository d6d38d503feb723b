#include "amsum/combinatorics.hpp"

#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace amsum {

namespace {

constexpr long kDefaultCacheBound = 128;

long read_cache_bound() {
  const char* env = std::getenv("AMSUM_FACT_CACHE");
  if (env == nullptr) return kDefaultCacheBound;
  char* end = nullptr;
  long bound = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || bound < 0) return kDefaultCacheBound;
  return bound;
}

struct FactorialTable {
  long bound;
  std::vector<BigInt> values;

  FactorialTable() : bound(read_cache_bound()) {
    values.reserve(static_cast<std::size_t>(bound) + 1);
    BigInt acc = 1;
    values.push_back(acc);
    for (long i = 1; i <= bound; ++i) {
      acc *= i;
      values.push_back(acc);
    }
  }
};

const FactorialTable& table() {
  static const FactorialTable t;  // immutable once constructed
  return t;
}

}  // namespace

BigInt factorial(long n) {
  if (n < 0) throw std::domain_error("factorial: negative argument " + std::to_string(n));
  const FactorialTable& t = table();
  if (n <= t.bound) return t.values[static_cast<std::size_t>(n)];
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

long factorial_cache_bound() { return table().bound; }

BigInt binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  BigInt b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return b;
}

BigInt extended_binomial(long g, long p) {
  if (p < 0) return 0;
  if (g >= 0) return binomial(g, p);
  BigInt b = binomial(p - g - 1, p);
  return p % 2 == 0 ? b : -b;
}

Rational pochhammer(const Rational& y, long p) {
  if (p < 0) throw std::domain_error("pochhammer: negative length");
  Rational acc(1);
  Rational term = y;
  for (long i = 0; i < p; ++i) {
    acc *= term;
    term += Rational(1);
  }
  return acc;
}

}  // namespace amsum
