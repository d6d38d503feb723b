#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "amsum/combinatorics.hpp"
#include "amsum/half_int.hpp"
#include "amsum/rational.hpp"
#include "amsum/sqrt_rational.hpp"

using namespace amsum;

namespace {

std::mt19937 rng(20240515);

Rational random_rational() {
  std::uniform_int_distribution<long> num(-200, 200);
  std::uniform_int_distribution<long> den(1, 60);
  return Rational(num(rng), den(rng));
}

}  // namespace

TEST_CASE("rational canonical form") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-3, -9) == Rational(1, 3));
  CHECK(Rational(3, -9) == Rational(-1, 3));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(6, 3).is_integer());
  CHECK(Rational(6, 3).numerator() == 2);
  CHECK(Rational(6, 3).denominator() == 1);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational arithmetic and ordering") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 3) - Rational(1, 2) == Rational(-1, 6));
  CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
  CHECK(Rational(2, 3) / Rational(4, 3) == Rational(1, 2));
  CHECK(Rational(-5, 7) < Rational(1, 9));
  CHECK(abs(Rational(-5, 7)) == Rational(5, 7));
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational powers") {
  CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
  CHECK(Rational(2, 3).pow(0) == Rational(1));
  CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
  CHECK(Rational(-2).pow(3) == Rational(-8));
  CHECK_THROWS_AS(Rational(0).pow(-1), std::domain_error);
}

TEST_CASE("rational field axioms hold exactly") {
  for (int trial = 0; trial < 500; ++trial) {
    Rational a = random_rational();
    Rational b = random_rational();
    CHECK((a + b) - b == a);
    CHECK(a + b == b + a);
    if (!b.is_zero()) CHECK((a * b) / b == a);
  }
}

TEST_CASE("rational text round trip") {
  CHECK(Rational(3, 2).to_string() == "3/2");
  CHECK(Rational(-3, 2).to_string() == "-3/2");
  CHECK(Rational(7).to_string() == "7");
  CHECK(Rational::parse("13/2") == Rational(13, 2));
  CHECK(Rational::parse("-4/6") == Rational(-2, 3));
  CHECK(Rational::parse("+5") == Rational(5));
  CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);
  CHECK_THROWS_AS(Rational::parse("a/b"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  for (int trial = 0; trial < 200; ++trial) {
    Rational r = random_rational();
    CHECK(Rational::parse(r.to_string()) == r);
  }
}

TEST_CASE("factorial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  CHECK(factorial(20) == BigInt("2432902008176640000"));
  CHECK(factorial(150) == factorial(149) * 150);  // beyond any cache bound
  CHECK_THROWS_AS(factorial(-1), std::domain_error);
}

TEST_CASE("extended binomial three-case definition") {
  CHECK(extended_binomial(5, 2) == 10);
  CHECK(extended_binomial(-2, 3) == -4);
  CHECK(extended_binomial(7, -1) == 0);
  CHECK(extended_binomial(3, 5) == 0);  // 0 <= g < p
  CHECK(extended_binomial(4, 4) == 1);
  CHECK(extended_binomial(-1, 0) == 1);
  CHECK(extended_binomial(-3, 2) == 6);
  for (long g = 0; g <= 12; ++g)
    for (long p = 0; p <= g; ++p) CHECK(extended_binomial(g, p) == extended_binomial(g, g - p));
}

TEST_CASE("pochhammer") {
  CHECK(pochhammer(Rational(3), 0) == Rational(1));
  CHECK(pochhammer(Rational(2), 3) == Rational(24));
  CHECK(pochhammer(Rational(-1, 2), 2) == Rational(-1, 4));
  for (int trial = 0; trial < 100; ++trial) {
    Rational y = random_rational();
    long p = static_cast<long>(trial % 7);
    CHECK(pochhammer(y, p + 1) == pochhammer(y, p) * (y + Rational(p)));
  }
}

TEST_CASE("sqrt rational basics") {
  SqrtRational root = sqrt_of_rational(Rational(4, 9));
  CHECK(root.square() == Rational(4, 9));
  CHECK(root.sign() == 1);
  CHECK(sqrt_of_rational(Rational(0)).is_zero());
  CHECK(sqrt_of_rational(Rational(0)).sign() == 0);
  CHECK_THROWS_AS(sqrt_of_rational(Rational(-1)), std::domain_error);

  // (+sqrt(1/3)) * (-sqrt(3)) is exactly -1
  SqrtRational product = sqrt_of_rational(Rational(1, 3)) * -sqrt_of_rational(Rational(3));
  CHECK(product == SqrtRational::of_rational(Rational(-1)));
  CHECK(product.square() == Rational(1));
  CHECK(product.as_exact_rational().value() == Rational(-1));
}

TEST_CASE("sqrt rational ordering") {
  SqrtRational minus_two = SqrtRational::of_rational(Rational(-2));
  SqrtRational minus_one = SqrtRational::of_rational(Rational(-1));
  SqrtRational zero;
  SqrtRational one = SqrtRational::of_rational(Rational(1));
  CHECK(minus_two < minus_one);
  CHECK(minus_one < zero);
  CHECK(zero < one);
  CHECK(one < sqrt_of_rational(Rational(2)));
}

TEST_CASE("sqrt rational rendering and parsing") {
  CHECK(sqrt_of_rational(Rational(2, 15)).to_string() == "+sqrt(2/15)");
  CHECK((-sqrt_of_rational(Rational(1, 3))).to_string() == "-sqrt(1/3)");
  CHECK(sqrt_of_rational(Rational(1, 36)).to_string() == "1/6");  // perfect square simplifies
  CHECK(SqrtRational().to_string() == "0");
  CHECK(SqrtRational::parse("-sqrt(1/3)") == -sqrt_of_rational(Rational(1, 3)));
  CHECK(SqrtRational::parse("sqrt(2)") == sqrt_of_rational(Rational(2)));
  CHECK(SqrtRational::parse("11/2") == SqrtRational::of_rational(Rational(11, 2)));
  CHECK(SqrtRational::parse("0") == SqrtRational());
  CHECK_THROWS_AS(SqrtRational::parse("sqrt(1/3"), std::invalid_argument);

  for (int trial = 0; trial < 300; ++trial) {
    Rational r = abs(random_rational());
    SqrtRational v = trial % 2 == 0 ? sqrt_of_rational(r) : -sqrt_of_rational(r);
    CHECK(SqrtRational::parse(v.to_string()) == v);
  }
}

TEST_CASE("sqrt of a value round-trips through square") {
  for (int trial = 0; trial < 300; ++trial) {
    Rational r = abs(random_rational());
    CHECK(sqrt_of_rational(r).square() == r);
  }
}

TEST_CASE("half integer basics") {
  CHECK(HalfInt(2).twice() == 4);
  CHECK(HalfInt::from_twice(3).to_string() == "3/2");
  CHECK(HalfInt::from_twice(-3).to_string() == "-3/2");
  CHECK(HalfInt(2).to_string() == "2");
  CHECK(HalfInt::from_twice(4).whole() == 2);
  CHECK_THROWS_AS(HalfInt::from_twice(3).whole(), std::domain_error);
  CHECK(HalfInt::parse("3/2") == HalfInt::from_twice(3));
  CHECK(HalfInt::parse("-1/2") == HalfInt::from_twice(-1));
  CHECK(HalfInt::parse("4") == HalfInt(4));
  CHECK_THROWS_AS(HalfInt::parse("3/4"), std::invalid_argument);
  CHECK_THROWS_AS(HalfInt::parse("x"), std::invalid_argument);
  CHECK(HalfInt::from_twice(3).to_rational() == Rational(3, 2));
}

TEST_CASE("half integer momentum helpers") {
  CHECK(jjp1(HalfInt(1)) == Rational(2));
  CHECK(jjp1(HalfInt::from_twice(1)) == Rational(3, 4));
  CHECK(HalfInt::from_twice(1) * HalfInt::from_twice(-1) == Rational(-1, 4));
  CHECK(parity(HalfInt(2)) == 1);
  CHECK(parity(HalfInt(-3)) == -1);
  CHECK_THROWS_AS(parity(HalfInt::from_twice(1)), std::domain_error);
  CHECK(valid_pair(HalfInt(1), HalfInt(-1)));
  CHECK_FALSE(valid_pair(HalfInt(1), HalfInt(2)));
  CHECK_FALSE(valid_pair(HalfInt(1), HalfInt::from_twice(1)));
  CHECK_FALSE(valid_pair(HalfInt(-1), HalfInt(0)));
}
