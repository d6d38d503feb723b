#pragma once

#include "amsum/half_int.hpp"
#include "amsum/sqrt_rational.hpp"

namespace amsum {

/// True iff |j1-j2| <= j3 <= j1+j2 and j1+j2+j3 is an integer.
bool triangle_ok(HalfInt j1, HalfInt j2, HalfInt j3);

/// Arguments of a 3jm symbol. A pair with negative j or non-integral j - m
/// is malformed (domain error); a projection merely out of range (|m| > j)
/// is a selection-rule zero, so full-range sums can rely on vanishing terms.
/// The symbol vanishes unless |m_i| <= j_i, m1+m2+m3 = 0 and (j1,j2,j3) is a
/// triangle with integer perimeter.
struct ThreeJArgs {
  HalfInt j1, j2, j3;
  HalfInt m1, m2, m3;

  /// Throws std::domain_error on a malformed (j, m) pair.
  void validate() const;

  bool selection_rules_ok() const;
};

/// Arguments of a 6j symbol in the usual 2x3 bracket arrangement
/// {j1 j2 j3; j4 j5 j6}. The value vanishes unless all four triads
/// (j1,j2,j3), (j1,j5,j6), (j4,j2,j6), (j4,j5,j3) are triangles.
struct SixJArgs {
  HalfInt j1, j2, j3;
  HalfInt j4, j5, j6;

  void validate() const;
  bool triads_ok() const;
};

/// Exact Wigner 3jm symbol (Racah single-sum form, all arithmetic exact).
/// Returns exact zero whenever a selection rule fails.
SqrtRational wigner_3jm(const ThreeJArgs& args);
SqrtRational wigner_3jm(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt m1, HalfInt m2, HalfInt m3);

/// Exact Clebsch-Gordan coefficient <j m | j1 m1 j2 m2> in the
/// Condon-Shortley convention,
///   <j m|j1 m1 j2 m2> = (-1)^(j1-j2+m) sqrt(2j+1) 3j(j1 j2 j; m1 m2 -m).
SqrtRational clebsch_gordan(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt j, HalfInt m);

/// Exact Wigner 6j symbol (Racah single-sum form).
SqrtRational wigner_6j(const SixJArgs& args);
SqrtRational wigner_6j(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt j4, HalfInt j5, HalfInt j6);

/// Closed form of 3j(a a i; x -x 0) for i in {1, 2, 3}:
///   i=1: (-1)^(a-x)   x                    / sqrt(a(a+1)(2a+1))
///   i=2: (-1)^(a-x+1) (a(a+1)-3x^2)        / sqrt(a(a+1)(2a-1)(2a+1)(2a+3))
///   i=3: (-1)^(a-x+1) x(3a(a+1)-5x^2-1)    / sqrt((a-1)a(a+1)(a+2)(2a-1)(2a+1)(2a+3))
/// Requires |x| <= a with a-x integral and i <= 2a.
SqrtRational threej_diag_special(HalfInt a, int i, HalfInt x);

/// General closed form of 3j(a a i; x -x 0) for any 0 <= i <= 2a:
///   (-1)^(a-x) sqrt((2a-i)!/(2a+i+1)!)
///     * sum_n (-1)^(i-n) C(i,n)^2 (-a+x)_n (-a-x)_(i-n)
/// with (y)_p the rising factorial.
SqrtRational threej_diag_general(HalfInt a, int i, HalfInt x);

/// Closed form of the 6j symbol {a c l; c a i} for i in {1, 2, 3}. Requires
/// triangle(a, c, l) and 2a >= i, 2c >= i (the formulas' factorial domains).
SqrtRational sixj_unit_special(HalfInt a, HalfInt c, HalfInt l, int i);

}  // namespace amsum
