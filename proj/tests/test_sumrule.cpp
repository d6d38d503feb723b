#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "amsum/sumrule.hpp"
#include "amsum/verify.hpp"

using namespace amsum;

namespace {

const HalfInt kHalf = HalfInt::from_twice(1);

}  // namespace

TEST_CASE("ladder block: stretched state has no room to move") {
  TridiagonalBlock block = build_tridiagonal(kHalf, kHalf, kHalf, kHalf);
  CHECK(block.dimension() == 1);
  CHECK(block.origin_index == 0);
  CHECK(block.diag == std::vector<Rational>{Rational(2)});
  CHECK(block.offdiag_sq.empty());
}

TEST_CASE("ladder block: two-state subspace") {
  TridiagonalBlock block = build_tridiagonal(kHalf, kHalf, kHalf, -kHalf);
  CHECK(block.dimension() == 2);
  CHECK(block.origin_index == 1);  // states ordered (-1/2, 1/2), (1/2, -1/2)
  CHECK(block.diag == std::vector<Rational>{Rational(1), Rational(1)});
  CHECK(block.offdiag_sq == std::vector<Rational>{Rational(1)});
}

TEST_CASE("ladder block: three-state subspace") {
  TridiagonalBlock block = build_tridiagonal(HalfInt(1), HalfInt(0), HalfInt(1), HalfInt(0));
  CHECK(block.dimension() == 3);
  CHECK(block.origin_index == 1);
  CHECK(block.diag == std::vector<Rational>{Rational(2), Rational(4), Rational(2)});
  CHECK(block.offdiag_sq == std::vector<Rational>{Rational(4), Rational(4)});
}

TEST_CASE("ladder block rejects malformed pairs") {
  CHECK_THROWS_AS(build_tridiagonal(HalfInt(1), HalfInt(2), HalfInt(1), HalfInt(0)),
                  std::domain_error);
  CHECK_THROWS_AS(build_tridiagonal(HalfInt(1), kHalf, HalfInt(1), HalfInt(0)),
                  std::domain_error);
}

TEST_CASE("operator walk: frozen values") {
  CHECK(sumrule_operator({0, HalfInt(2), HalfInt(1), HalfInt(3), HalfInt(-2)}) == Rational(1));
  CHECK(sumrule_operator({1, kHalf, kHalf, kHalf, kHalf}) == Rational(2));
  CHECK(sumrule_operator({2, HalfInt(1), HalfInt(0), HalfInt(1), HalfInt(0)}) == Rational(24));
  CHECK(sumrule_operator({3, kHalf, kHalf, kHalf, kHalf}) == Rational(8));
  CHECK_THROWS_AS(sumrule_operator({-1, kHalf, kHalf, kHalf, kHalf}), std::domain_error);
}

TEST_CASE("bruteforce summation: frozen values") {
  CHECK(sumrule_bruteforce({1, HalfInt(1), HalfInt(0), HalfInt(1), HalfInt(0)}) == Rational(4));
  CHECK(sumrule_bruteforce({2, kHalf, kHalf, kHalf, -kHalf}) == Rational(2));
  CHECK(sumrule_bruteforce({1, kHalf, kHalf, kHalf, kHalf}) == Rational(2));
}

TEST_CASE("operator words") {
  using enum LadderFactor;
  CHECK(contributes_to_diagonal({}));
  CHECK(contributes_to_diagonal({kA, kA}));
  CHECK(contributes_to_diagonal({kB1, kB2}));
  CHECK_FALSE(contributes_to_diagonal({kB1, kA}));
  CHECK_FALSE(contributes_to_diagonal({kB1, kB1, kB2}));

  HalfInt one(1), zero(0);
  CHECK(word_contribution({kA}, one, zero, one, zero) == Rational(4));
  CHECK(word_contribution({kB1, kB2}, one, zero, one, zero) == Rational(4));
  CHECK(word_contribution({kB2, kB1}, one, zero, one, zero) == Rational(4));
  CHECK(word_contribution({kB1, kA}, one, zero, one, zero) == Rational(0));
  // stepping off the ladder annihilates the state
  HalfInt half = HalfInt::from_twice(1);
  CHECK(word_contribution({kB2, kB1}, half, half, half, half) == Rational(0));
}

TEST_CASE("word enumeration: frozen values and capacity") {
  CHECK(sumrule_permutation({1, HalfInt(1), HalfInt(0), HalfInt(1), HalfInt(0)}) == Rational(4));
  CHECK(sumrule_permutation({2, kHalf, kHalf, kHalf, -kHalf}) == Rational(2));
  SumRuleQuery q{3, HalfInt(1), HalfInt(1), HalfInt(1), HalfInt(-1)};
  CHECK(sumrule_permutation(q) == sumrule_operator(q));
  CHECK_THROWS_AS(sumrule_permutation({7, kHalf, kHalf, kHalf, kHalf}), std::length_error);
  CHECK(sumrule_permutation({7, kHalf, kHalf, kHalf, kHalf}, 8) == Rational(128));
}

TEST_CASE("closed forms k = 1..3: frozen values") {
  CHECK(sumrule_closed(1, kHalf, kHalf, kHalf, kHalf) == Rational(2));
  CHECK(sumrule_closed(2, HalfInt(1), HalfInt(0), HalfInt(1), HalfInt(0)) == Rational(24));
  CHECK(sumrule_closed(3, kHalf, kHalf, kHalf, kHalf) == Rational(8));
  CHECK_THROWS_AS(sumrule_closed(4, kHalf, kHalf, kHalf, kHalf), std::domain_error);
  CHECK_THROWS_AS(sumrule_closed(0, kHalf, kHalf, kHalf, kHalf), std::domain_error);
}

TEST_CASE("zero-projection closed forms: frozen values") {
  CHECK(sumrule_zero_projection(1, HalfInt(1), HalfInt(1), HalfInt(0)) == Rational(4));
  CHECK(sumrule_zero_projection(1, HalfInt(1), HalfInt(1), HalfInt(1)) == Rational(2));
  CHECK(sumrule_zero_projection(2, kHalf, kHalf, -kHalf) == Rational(2));
  CHECK_THROWS_AS(sumrule_zero_projection(4, HalfInt(1), HalfInt(1), HalfInt(0)),
                  std::domain_error);
  CHECK_THROWS_AS(sumrule_zero_projection(1, HalfInt(1), HalfInt(2), HalfInt::from_twice(3)),
                  std::domain_error);
}

TEST_CASE("operator walk scales to large k") {
  SumRuleQuery q{50, HalfInt::from_twice(5), HalfInt::from_twice(1), HalfInt(2), HalfInt(0)};
  Rational walk = sumrule_operator(q);
  CHECK(walk == sumrule_bruteforce(q));
  CHECK(jjp1(abs(q.j1 - q.j2)).pow(50) <= walk);
  CHECK(walk <= jjp1(q.j1 + q.j2).pow(50));
}

TEST_CASE("experimental full-column accessor") {
  TridiagonalBlock block = build_tridiagonal(HalfInt(1), HalfInt(0), HalfInt(1), HalfInt(0));
  std::vector<Rational> column = block.apply_power(2);
  CHECK(column.size() == block.dimension());
  CHECK(column[block.origin_index] == block.diagonal_power_entry(2));
  CHECK(block.apply_power(0)[block.origin_index] == Rational(1));
  CHECK_THROWS_AS(block.apply_power(-1), std::domain_error);
}

TEST_CASE("three methods and the closed forms agree") {
  CheckResult result = check_sumrule_closed_forms(HalfInt::from_twice(5));
  CHECK(result.cases > 0);
  CHECK_MESSAGE(result.passed(), (result.failures.empty() ? std::string() : result.failures.front()));
}

TEST_CASE("general k cross-method equality") {
  CheckResult result = check_sumrule_general(HalfInt::from_twice(4), 5, 4);
  CHECK(result.cases > 0);
  CHECK_MESSAGE(result.passed(), (result.failures.empty() ? std::string() : result.failures.front()));
}

TEST_CASE("k = 0 orthogonality") {
  CheckResult result = check_sumrule_orthogonality(HalfInt(3));
  CHECK(result.cases > 0);
  CHECK_MESSAGE(result.passed(), (result.failures.empty() ? std::string() : result.failures.front()));
}

TEST_CASE("zero-projection forms against bruteforce") {
  CheckResult result = check_sumrule_zero_projection(HalfInt(3));
  CHECK(result.cases > 0);
  CHECK_MESSAGE(result.passed(), (result.failures.empty() ? std::string() : result.failures.front()));
}

TEST_CASE("stretched states") {
  CheckResult result = check_sumrule_stretched(HalfInt(4), 6);
  CHECK(result.cases > 0);
  CHECK_MESSAGE(result.passed(), (result.failures.empty() ? std::string() : result.failures.front()));
}

TEST_CASE("convexity bounds") {
  CheckResult result = check_sumrule_bounds(HalfInt(2), 5);
  CHECK(result.cases > 0);
  CHECK_MESSAGE(result.passed(), (result.failures.empty() ? std::string() : result.failures.front()));
}

TEST_CASE("exchange and m-negation symmetry") {
  CheckResult result = check_sumrule_symmetry(HalfInt(2), 4);
  CHECK(result.cases > 0);
  CHECK_MESSAGE(result.passed(), (result.failures.empty() ? std::string() : result.failures.front()));
}
