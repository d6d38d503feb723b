#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <future>
#include <vector>

#include "amsum/combinatorics.hpp"
#include "amsum/verify.hpp"
#include "amsum/wigner.hpp"

using namespace amsum;

namespace {

const HalfInt kHalf = HalfInt::from_twice(1);

SqrtRational rational_value(long num, long den) {
  return SqrtRational::of_rational(Rational(num, den));
}

}  // namespace

TEST_CASE("triangle rule") {
  CHECK(triangle_ok(HalfInt(1), HalfInt(1), HalfInt(2)));
  CHECK_FALSE(triangle_ok(HalfInt(1), HalfInt(1), HalfInt(3)));
  CHECK(triangle_ok(kHalf, kHalf, HalfInt(1)));
  CHECK_FALSE(triangle_ok(kHalf, kHalf, kHalf));  // non-integer perimeter
  CHECK_FALSE(triangle_ok(HalfInt(-1), HalfInt(1), HalfInt(1)));
}

TEST_CASE("3jm frozen values") {
  CHECK(wigner_3jm(HalfInt(0), HalfInt(0), HalfInt(0), HalfInt(0), HalfInt(0), HalfInt(0)) ==
        rational_value(1, 1));
  CHECK(wigner_3jm(kHalf, kHalf, HalfInt(1), kHalf, kHalf, HalfInt(-1)) ==
        -sqrt_of_rational(Rational(1, 3)));
  CHECK(wigner_3jm(HalfInt(1), HalfInt(1), HalfInt(2), HalfInt(0), HalfInt(0), HalfInt(0)) ==
        sqrt_of_rational(Rational(2, 15)));
  CHECK(wigner_3jm(HalfInt(1), HalfInt(1), HalfInt(1), HalfInt(0), HalfInt(0), HalfInt(0))
            .is_zero());
}

TEST_CASE("3jm with large momenta stays exact") {
  CHECK(wigner_3jm(HalfInt(20), HalfInt(20), HalfInt(20), HalfInt(0), HalfInt(0), HalfInt(0)) ==
        sqrt_of_rational(Rational(BigInt("110938033492"), BigInt("126902256463843"))));
}

TEST_CASE("3jm selection rules give exact zero") {
  // m1 + m2 + m3 != 0
  CHECK(wigner_3jm(HalfInt(1), HalfInt(1), HalfInt(1), HalfInt(1), HalfInt(0), HalfInt(0))
            .is_zero());
  // triangle violated
  CHECK(wigner_3jm(HalfInt(1), HalfInt(1), HalfInt(3), HalfInt(0), HalfInt(0), HalfInt(0))
            .is_zero());
  // projection out of range selects zero rather than erroring
  CHECK(wigner_3jm(HalfInt(2), HalfInt(2), HalfInt(0), HalfInt(2), HalfInt(2), HalfInt(-4))
            .is_zero());
}

TEST_CASE("3jm malformed pairs are domain errors") {
  CHECK_THROWS_AS(
      wigner_3jm(kHalf, HalfInt(1), HalfInt(1), HalfInt(0), HalfInt(0), HalfInt(0)),
      std::domain_error);
  CHECK_THROWS_AS(
      wigner_3jm(HalfInt(-1), HalfInt(1), HalfInt(1), HalfInt(0), HalfInt(0), HalfInt(0)),
      std::domain_error);
}

TEST_CASE("clebsch-gordan frozen values") {
  CHECK(clebsch_gordan(kHalf, kHalf, kHalf, kHalf, HalfInt(1), HalfInt(1)) == rational_value(1, 1));
  CHECK(clebsch_gordan(kHalf, kHalf, kHalf, -kHalf, HalfInt(0), HalfInt(0)) ==
        sqrt_of_rational(Rational(1, 2)));
  CHECK(clebsch_gordan(HalfInt(1), HalfInt(0), HalfInt(1), HalfInt(0), HalfInt(2), HalfInt(0)) ==
        sqrt_of_rational(Rational(2, 3)));
  // antisymmetric singlet component
  CHECK(clebsch_gordan(kHalf, -kHalf, kHalf, kHalf, HalfInt(0), HalfInt(0)) ==
        -sqrt_of_rational(Rational(1, 2)));
}

TEST_CASE("6j frozen values") {
  CHECK(wigner_6j(HalfInt(1), HalfInt(1), HalfInt(1), HalfInt(1), HalfInt(1), HalfInt(1)) ==
        rational_value(1, 6));
  // zero-argument reduction {a b c; 0 c b} = (-1)^(a+b+c) / sqrt((2b+1)(2c+1))
  CHECK(wigner_6j(HalfInt(1), HalfInt(1), HalfInt(2), HalfInt(0), HalfInt(2), HalfInt(1)) ==
        sqrt_of_rational(Rational(1, 15)));
  CHECK(wigner_6j(HalfInt(1), HalfInt(2), HalfInt(3), HalfInt(4), HalfInt(5), HalfInt(7))
            .is_zero());  // triad (j4 j5 j3) fails
  CHECK_THROWS_AS(
      wigner_6j(HalfInt(-1), HalfInt(1), HalfInt(1), HalfInt(1), HalfInt(1), HalfInt(1)),
      std::domain_error);
}

TEST_CASE("diagonal 3j closed forms: frozen examples") {
  CHECK(threej_diag_special(HalfInt(1), 1, HalfInt(1)) == sqrt_of_rational(Rational(1, 6)));
  // the i=2 row evaluated at a=1, x=0 equals the Racah value sqrt(2/15)
  CHECK(threej_diag_special(HalfInt(1), 2, HalfInt(0)) == sqrt_of_rational(Rational(2, 15)));
  // orthogonality over j in {0, 1} pins 3j(1/2 1/2 1; 1/2 -1/2 0)^2 to 1/6
  CHECK(threej_diag_special(kHalf, 1, kHalf) == sqrt_of_rational(Rational(1, 6)));
  CHECK(threej_diag_general(HalfInt(1), 0, HalfInt(0)) == -sqrt_of_rational(Rational(1, 3)));
  CHECK(threej_diag_general(HalfInt(1), 1, HalfInt(1)) == threej_diag_special(HalfInt(1), 1, HalfInt(1)));
  CHECK(threej_diag_general(HalfInt(2), 3, HalfInt(1)) ==
        wigner_3jm(HalfInt(2), HalfInt(2), HalfInt(3), HalfInt(1), HalfInt(-1), HalfInt(0)));
}

TEST_CASE("diagonal 3j closed forms: domain errors") {
  CHECK_THROWS_AS(threej_diag_special(HalfInt(1), 4, HalfInt(0)), std::domain_error);
  CHECK_THROWS_AS(threej_diag_special(HalfInt(1), 0, HalfInt(0)), std::domain_error);
  CHECK_THROWS_AS(threej_diag_special(kHalf, 2, kHalf), std::domain_error);  // i > 2a
  CHECK_THROWS_AS(threej_diag_general(HalfInt(1), 3, HalfInt(0)), std::domain_error);
  CHECK_THROWS_AS(threej_diag_general(HalfInt(1), -1, HalfInt(0)), std::domain_error);
  CHECK_THROWS_AS(threej_diag_general(HalfInt(1), 1, HalfInt(2)), std::domain_error);
}

TEST_CASE("unit-argument 6j closed forms: frozen examples") {
  CHECK(sixj_unit_special(HalfInt(1), HalfInt(1), HalfInt(2), 1) == rational_value(1, 6));
  CHECK(sixj_unit_special(HalfInt(1), HalfInt(1), HalfInt(0), 1) == rational_value(-1, 3));
  CHECK(sixj_unit_special(HalfInt(2), HalfInt(2), HalfInt(2), 2) ==
        wigner_6j(HalfInt(2), HalfInt(2), HalfInt(2), HalfInt(2), HalfInt(2), HalfInt(2)));
  CHECK_THROWS_AS(sixj_unit_special(HalfInt(1), HalfInt(1), HalfInt(2), 4), std::domain_error);
  CHECK_THROWS_AS(sixj_unit_special(kHalf, kHalf, HalfInt(1), 2), std::domain_error);
  CHECK_THROWS_AS(sixj_unit_special(HalfInt(1), HalfInt(4), HalfInt(1), 1), std::domain_error);
}

TEST_CASE("3jm symmetries: even/odd permutations and m-negation") {
  CheckResult result = check_wigner_symmetries(HalfInt(3));
  CHECK(result.cases > 0);
  CHECK_MESSAGE(result.passed(), (result.failures.empty() ? std::string() : result.failures.front()));
}

TEST_CASE("3jm orthogonality over the full grid") {
  CheckResult result = check_wigner_orthogonality(HalfInt::from_twice(7));
  CHECK(result.cases > 0);
  CHECK_MESSAGE(result.passed(), (result.failures.empty() ? std::string() : result.failures.front()));
}

TEST_CASE("Regge-type identity") {
  CheckResult result = check_wigner_regge(8);
  CHECK(result.cases > 0);
  CHECK_MESSAGE(result.passed(), (result.failures.empty() ? std::string() : result.failures.front()));
}

TEST_CASE("diagonal closed forms match the Racah route") {
  CheckResult result = check_threej_diag_oracles(HalfInt(4));
  CHECK(result.cases > 0);
  CHECK_MESSAGE(result.passed(), (result.failures.empty() ? std::string() : result.failures.front()));
}

TEST_CASE("unit-argument 6j closed forms match the Racah route") {
  CheckResult result = check_sixj_unit_oracles(HalfInt(4));
  CHECK(result.cases > 0);
  CHECK_MESSAGE(result.passed(), (result.failures.empty() ? std::string() : result.failures.front()));
}

TEST_CASE("concurrent evaluation is deterministic") {
  auto work = [] {
    SqrtRational value = wigner_3jm(HalfInt(4), HalfInt(3), HalfInt(2), HalfInt(1), HalfInt(-2),
                                    HalfInt(1));
    BigInt fact = factorial(200);  // exercises both the table and the direct path
    return std::pair(value, fact);
  };
  std::vector<std::future<std::pair<SqrtRational, BigInt>>> futures;
  for (int i = 0; i < 8; ++i) futures.push_back(std::async(std::launch::async, work));
  auto [value0, fact0] = work();
  for (auto& future : futures) {
    auto [value, fact] = future.get();
    CHECK(value == value0);
    CHECK(fact == fact0);
  }
}
