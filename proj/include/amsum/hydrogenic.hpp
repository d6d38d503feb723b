#pragma once

#include "amsum/half_int.hpp"
#include "amsum/rational.hpp"
#include "amsum/sqrt_rational.hpp"

namespace amsum {

/// Bound state |n l> of a one-electron ion; 0 <= l <= n-1.
struct SphericalOrbital {
  int n = 1;
  int l = 0;

  SphericalOrbital(int n_, int l_);
};

/// Bound state |n n1 n2 m> in parabolic coordinates, n = n1 + n2 + |m| + 1.
/// The electric quantum number q = n1 - n2 satisfies |q| <= n-1-|m| with
/// q and n-1-|m| of equal parity.
struct ParabolicOrbital {
  int n = 1;
  int n1 = 0;
  int n2 = 0;
  int m = 0;  // signed magnetic quantum number

  ParabolicOrbital(int n_, int n1_, int n2_, int m_);

  /// Builds from (n, q, m); throws when no (n1, n2) realizes q.
  static ParabolicOrbital from_electric(int n, int q, int m);

  int q() const { return n1 - n2; }
  int abs_m() const { return m < 0 ? -m : m; }
};

/// Nuclear charge; exact and positive so every Z-scaling stays rational.
struct Charge {
  Rational z;

  explicit Charge(Rational z_);
  explicit Charge(long z_) : Charge(Rational(z_)) {}
};

/// Evaluation route for quantities that have both a three-term recurrence
/// and an explicit finite-sum form.
enum class Method { kRecurrence, kExplicit };

/// Exact <n l| r^p |n l> for p >= 0; the recurrence and explicit routes
/// agree exactly on the whole domain.
Rational expval_spherical(const SphericalOrbital& orb, const Charge& z, int p,
                          Method method = Method::kRecurrence);

/// Exact <n l| r^(-p-2) |n l> for 0 <= p <= 2l, as a terminating
/// hypergeometric-type finite sum, algebraically reduced so l = 0 (with
/// p = 0) is well defined:
///   2^(p+1) Z^(p+2) / n^(p+3) * (2l-p)!/(2l+1)!
///     * sum_s [(-p)_s (p+1)_s (l+1-n)_s] / [(s!)^2 (2l+2)_s].
Rational expval_spherical_negative(const SphericalOrbital& orb, const Charge& z, int p);

/// Recovers <r^p> for 0 <= p <= 2l-2 through the inverse-power route:
///   <r^p> = (2l+p+2)!/(2l-p-1)! (n/2Z)^(2p+3) <r^(-p-3)>.
/// Exactly equal to expval_spherical on its whole domain.
Rational marxer_reflect(const SphericalOrbital& orb, const Charge& z, int p);

/// Moment of the first parabolic coordinate in reduced form: the coefficient
/// c_k with <xi^k> = c_k sqrt(Z/pi) / n. Factoring out the lone irrational
/// keeps the moment algebra rational; the composition into <r^p> cancels the
/// pi exactly. Seeds: c_0 = 1, c_1 = n (2 n1 + m + 1) / Z.
struct XiMomentCoefficient {
  Rational c;
};

/// c_k for the state (n, n1, m >= 0); recurrence and explicit finite-sum
/// routes agree exactly.
XiMomentCoefficient xi_moment(int n, int n1, int m, const Charge& z, int k,
                              Method method = Method::kRecurrence);

/// Exact <r^p> in parabolic coordinates for p >= 0, composed from xi and eta
/// moments (eta moments are xi moments with n1 -> n2). States with m < 0 use
/// |m| throughout: the moments depend on |m| only.
Rational expval_parabolic(const ParabolicOrbital& orb, const Charge& z, int p);

/// Exact overlap <n q m | n l m> between the parabolic and spherical bases:
///   (-1)^((1+m-q-n)/2) sqrt(2l+1) 3j((n-1)/2 (n-1)/2 l; (m-q)/2 (m+q)/2 -m).
/// Squared overlaps over l sum to 1.
SqrtRational cg_spherical_parabolic(int n, int q, int m, int l);

/// Exact <r^p> in parabolic coordinates via the spherical basis:
///   sum_l |<n q m|n l m>|^2 <n l| r^p |n l>.
/// Must equal expval_parabolic exactly; this is the central identity the
/// sum rules establish.
Rational expval_parabolic_via_basis_change(const ParabolicOrbital& orb, const Charge& z, int p);

/// <L^(2k)> in a parabolic state for k in {1, 2}, evaluated through the
/// zero-projection sum rule at a = (n-1+|m|)/2, c = (n-1-|m|)/2, x = -q/2.
Rational l2k_parabolic(const ParabolicOrbital& orb, int k);

/// <L^2> closed forms: (m+1)(n-1) + 2 n1 n2 and (n^2 + m^2 - q^2 - 1)/2.
/// Both equal l2k_parabolic(orb, 1).
Rational l2_closed_n1n2(const ParabolicOrbital& orb);
Rational l2_closed_nqm(const ParabolicOrbital& orb);

/// <L^4> closed-form polynomial in (n, m, q),
///   (1/8) {3 + 3m^4 + 10q^2 + 2m^2 [n^2 - 3(1+q^2)]
///          + 3 [n^4 + q^4 - 2m^2 (1+q^2)]}.
/// Known to disagree with the sum-rule value (8 vs 2 at n=2, q=1, m=0);
/// retained for cross-checking only.
Rational l4_parabolic_polynomial(const ParabolicOrbital& orb);

/// Variant of l4_parabolic_polynomial with the trailing 2m^2(1+q^2) replaced
/// by 2n^2(1+q^2); matches the sum rule in every tested case.
Rational l4_parabolic_polynomial_fixed(const ParabolicOrbital& orb);

/// Degree-k polynomial forms of <r^k>, k in {1..4}, spherical coordinates.
Rational table_polynomial_spherical(int k, const SphericalOrbital& orb, const Charge& z);

/// Degree-k polynomial forms of <r^k>, k in {1..4}, parabolic coordinates.
/// The k = 4 prefactor is n^4/(64 Z^4); the 1/Z^3 variant in circulation
/// fails dimensional analysis and the basis-change cross-check.
Rational table_polynomial_parabolic(int k, const ParabolicOrbital& orb, const Charge& z);

/// Quasi-classical joint probability of (l, m) within an (n, q, m) manifold,
///   2 l / (pi sqrt((l^2 - lmin^2)(lmax^2 - l^2))),
/// valid for m <= l << n. For m = 0 this reduces to the l-independent
/// estimate 2 / (pi sqrt((n-1)^2 - q^2)), which is what is returned there.
/// l at or outside the open interval (lmin, lmax) is a domain error.
double quasiclassical_probability(int n, int m, int q, int l);

}  // namespace amsum
