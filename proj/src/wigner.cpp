#include "amsum/wigner.hpp"

#include <algorithm>
#include <stdexcept>

#include "amsum/combinatorics.hpp"

namespace amsum {

namespace {

long whole(HalfInt x) { return x.whole(); }

/// Triangle weight Delta^2(a, b, c) = (a+b-c)!(a-b+c)!(-a+b+c)!/(a+b+c+1)!
Rational triangle_weight(HalfInt a, HalfInt b, HalfInt c) {
  BigInt num = factorial(whole(a + b - c)) * factorial(whole(a - b + c)) *
               factorial(whole(-a + b + c));
  BigInt den = factorial(whole(a + b + c) + 1);
  return Rational(num, den);
}

/// sign * poly / sqrt(rad) as a canonical SqrtRational.
SqrtRational scaled_inverse_sqrt(int sign, const Rational& poly, const Rational& rad) {
  return SqrtRational::from_sign_radicand(sign * poly.sign(), poly * poly / rad);
}

/// sign * poly * sqrt(rad) as a canonical SqrtRational.
SqrtRational scaled_sqrt(int sign, const Rational& poly, const Rational& rad) {
  return SqrtRational::from_sign_radicand(sign * poly.sign(), poly * poly * rad);
}

/// A (j, m) pair is structurally meaningful: j >= 0 and j - m integral.
/// Projections out of range (|m| > j) are not malformed, they select zero.
bool meaningful_pair(HalfInt j, HalfInt m) {
  return valid_momentum(j) && (j - m).is_integer();
}

}  // namespace

bool triangle_ok(HalfInt j1, HalfInt j2, HalfInt j3) {
  if (!valid_momentum(j1) || !valid_momentum(j2) || !valid_momentum(j3)) return false;
  if (!(j1 + j2 + j3).is_integer()) return false;
  return abs(j1 - j2) <= j3 && j3 <= j1 + j2;
}

void ThreeJArgs::validate() const {
  if (!meaningful_pair(j1, m1) || !meaningful_pair(j2, m2) || !meaningful_pair(j3, m3))
    throw std::domain_error("3jm: malformed (j, m) pair");
}

bool ThreeJArgs::selection_rules_ok() const {
  return valid_pair(j1, m1) && valid_pair(j2, m2) && valid_pair(j3, m3) &&
         (m1 + m2 + m3).twice() == 0 && triangle_ok(j1, j2, j3);
}

void SixJArgs::validate() const {
  for (HalfInt j : {j1, j2, j3, j4, j5, j6})
    if (!valid_momentum(j)) throw std::domain_error("6j: negative momentum");
}

bool SixJArgs::triads_ok() const {
  return triangle_ok(j1, j2, j3) && triangle_ok(j1, j5, j6) && triangle_ok(j4, j2, j6) &&
         triangle_ok(j4, j5, j3);
}

SqrtRational wigner_3jm(const ThreeJArgs& a) {
  a.validate();
  if (!a.selection_rules_ok()) return SqrtRational();

  // With the selection rules satisfied, every quantity below is an integer.
  const long j1m1 = whole(a.j1 - a.m1);
  const long j2pm2 = whole(a.j2 + a.m2);
  const long j12_3 = whole(a.j1 + a.j2 - a.j3);
  const long j3_2m1 = whole(a.j3 - a.j2 + a.m1);
  const long j3_1m2 = whole(a.j3 - a.j1 - a.m2);

  const long t_min = std::max({0L, -j3_2m1, -j3_1m2});
  const long t_max = std::min({j12_3, j1m1, j2pm2});

  Rational sum(0);
  for (long t = t_min; t <= t_max; ++t) {
    BigInt den = factorial(t) * factorial(j12_3 - t) * factorial(j1m1 - t) *
                 factorial(j2pm2 - t) * factorial(j3_2m1 + t) * factorial(j3_1m2 + t);
    sum += Rational(BigInt(t % 2 == 0 ? 1 : -1), den);
  }
  if (sum.is_zero()) return SqrtRational();

  BigInt pairs = factorial(whole(a.j1 + a.m1)) * factorial(j1m1) * factorial(j2pm2) *
                 factorial(whole(a.j2 - a.m2)) * factorial(whole(a.j3 + a.m3)) *
                 factorial(whole(a.j3 - a.m3));
  Rational radicand = sum * sum * triangle_weight(a.j1, a.j2, a.j3) * Rational(pairs);
  int sign = parity(a.j1 - a.j2 - a.m3) * sum.sign();
  return SqrtRational::from_sign_radicand(sign, radicand);
}

SqrtRational wigner_3jm(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt m1, HalfInt m2, HalfInt m3) {
  return wigner_3jm(ThreeJArgs{j1, j2, j3, m1, m2, m3});
}

SqrtRational clebsch_gordan(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt j, HalfInt m) {
  SqrtRational symbol = wigner_3jm(j1, j2, j, m1, m2, -m);
  if (symbol.is_zero()) return symbol;
  SqrtRational weight = sqrt_of_rational(Rational(j.twice() + 1));
  SqrtRational value = weight * symbol;
  return parity(j1 - j2 + m) < 0 ? -value : value;
}

SqrtRational wigner_6j(const SixJArgs& a) {
  a.validate();
  if (!a.triads_ok()) return SqrtRational();

  const long s123 = whole(a.j1 + a.j2 + a.j3);
  const long s156 = whole(a.j1 + a.j5 + a.j6);
  const long s426 = whole(a.j4 + a.j2 + a.j6);
  const long s453 = whole(a.j4 + a.j5 + a.j3);
  const long q1245 = whole(a.j1 + a.j2 + a.j4 + a.j5);
  const long q2356 = whole(a.j2 + a.j3 + a.j5 + a.j6);
  const long q3164 = whole(a.j3 + a.j1 + a.j6 + a.j4);

  const long t_min = std::max({s123, s156, s426, s453});
  const long t_max = std::min({q1245, q2356, q3164});

  Rational sum(0);
  for (long t = t_min; t <= t_max; ++t) {
    BigInt den = factorial(t - s123) * factorial(t - s156) * factorial(t - s426) *
                 factorial(t - s453) * factorial(q1245 - t) * factorial(q2356 - t) *
                 factorial(q3164 - t);
    Rational term(factorial(t + 1), den);
    sum += t % 2 == 0 ? term : -term;
  }
  if (sum.is_zero()) return SqrtRational();

  Rational weights = triangle_weight(a.j1, a.j2, a.j3) * triangle_weight(a.j1, a.j5, a.j6) *
                     triangle_weight(a.j4, a.j2, a.j6) * triangle_weight(a.j4, a.j5, a.j3);
  return SqrtRational::from_sign_radicand(sum.sign(), sum * sum * weights);
}

SqrtRational wigner_6j(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt j4, HalfInt j5, HalfInt j6) {
  return wigner_6j(SixJArgs{j1, j2, j3, j4, j5, j6});
}

SqrtRational threej_diag_special(HalfInt a, int i, HalfInt x) {
  if (i < 1 || i > 3) throw std::domain_error("threej_diag_special: i must be 1, 2 or 3");
  if (!valid_pair(a, x)) throw std::domain_error("threej_diag_special: |x| <= a with a-x integral required");
  if (a.twice() < i) throw std::domain_error("threej_diag_special: i <= 2a required");

  const long ta = a.twice();
  const Rational A = jjp1(a);
  const Rational X = x.to_rational();
  const int base = parity(a - x);

  switch (i) {
    case 1:
      return scaled_inverse_sqrt(base, X, A * Rational(ta + 1));
    case 2: {
      Rational poly = A - Rational(3) * X * X;
      Rational rad = A * Rational(ta - 1) * Rational(ta + 1) * Rational(ta + 3);
      return scaled_inverse_sqrt(-base, poly, rad);
    }
    default: {
      Rational poly = X * (Rational(3) * A - Rational(5) * X * X - Rational(1));
      // (a-1)a(a+1)(a+2) = (2a-2)(2a)(2a+2)(2a+4)/16
      Rational quartic(BigInt(ta - 2) * BigInt(ta) * BigInt(ta + 2) * BigInt(ta + 4), BigInt(16));
      Rational rad = quartic * Rational(ta - 1) * Rational(ta + 1) * Rational(ta + 3);
      return scaled_inverse_sqrt(-base, poly, rad);
    }
  }
}

SqrtRational threej_diag_general(HalfInt a, int i, HalfInt x) {
  if (!valid_pair(a, x)) throw std::domain_error("threej_diag_general: |x| <= a with a-x integral required");
  if (i < 0 || a.twice() < i) throw std::domain_error("threej_diag_general: 0 <= i <= 2a required");

  const Rational down = (-a + x).to_rational();
  const Rational up = (-a - x).to_rational();
  Rational sum(0);
  for (int n = 0; n <= i; ++n) {
    Rational term = Rational(binomial(i, n) * binomial(i, n)) * pochhammer(down, n) *
                    pochhammer(up, i - n);
    sum += (i - n) % 2 == 0 ? term : -term;
  }
  if (sum.is_zero()) return SqrtRational();

  Rational rad(factorial(a.twice() - i), factorial(a.twice() + i + 1));
  int sign = parity(a - x) * sum.sign();
  return SqrtRational::from_sign_radicand(sign, sum * sum * rad);
}

SqrtRational sixj_unit_special(HalfInt a, HalfInt c, HalfInt l, int i) {
  if (i < 1 || i > 3) throw std::domain_error("sixj_unit_special: i must be 1, 2 or 3");
  if (!triangle_ok(a, c, l)) throw std::domain_error("sixj_unit_special: (a, c, l) must be a triangle");
  if (a.twice() < i || c.twice() < i)
    throw std::domain_error("sixj_unit_special: 2a >= i and 2c >= i required");

  const long ta = a.twice();
  const long tc = c.twice();
  const Rational A = jjp1(a);
  const Rational C = jjp1(c);
  const Rational L = jjp1(l);
  const int base = parity(a + c + l);

  switch (i) {
    case 1: {
      Rational poly = (L - A - C) / Rational(2);
      Rational rad = A * Rational(ta + 1) * C * Rational(tc + 1);
      return scaled_inverse_sqrt(base, poly, rad);
    }
    case 2: {
      Rational y = A + C - L;
      Rational j = Rational(3) * y * (y - Rational(1)) - Rational(4) * A * C;
      Rational rad(factorial(ta - 2) * factorial(tc - 2), factorial(ta + 3) * factorial(tc + 3));
      return scaled_sqrt(base, Rational(2) * j, rad);
    }
    default: {
      Rational y = A + C - L;
      Rational g = Rational(5) * y.pow(3) - Rational(20) * y * y -
                   Rational(4) * y * (Rational(3) * A * C - A - C - Rational(3)) +
                   Rational(20) * A * C;
      Rational rad(factorial(ta - 3) * factorial(tc - 3), factorial(ta + 4) * factorial(tc + 4));
      return scaled_sqrt(-base, Rational(4) * g, rad);
    }
  }
}

}  // namespace amsum
