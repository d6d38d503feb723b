#include "amsum/hydrogenic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "amsum/combinatorics.hpp"
#include "amsum/sumrule.hpp"
#include "amsum/wigner.hpp"

namespace amsum {

namespace {

Rational pow2(int e) { return Rational(2).pow(e); }

/// c_k coefficients for r = 0..count-1 in one sweep of the recurrence.
std::vector<Rational> xi_coefficients(int n, int n1, int m, const Charge& z, int count) {
  std::vector<Rational> c;
  c.reserve(static_cast<std::size_t>(count));
  const Rational noz = Rational(n) / z.z;
  for (int k = 0; k < count; ++k) {
    if (k == 0) {
      c.push_back(Rational(1));
    } else if (k == 1) {
      c.push_back(noz * Rational(2 * n1 + m + 1));
    } else {
      Rational first = noz * Rational(2 * k - 1, k) * Rational(2 * n1 + m + 1) * c[k - 1];
      Rational second = noz * noz *
                        Rational(static_cast<long>(k - 1) * (m - k + 1) * (m + k - 1), k) *
                        c[k - 2];
      c.push_back(first - second);
    }
  }
  return c;
}

}  // namespace

SphericalOrbital::SphericalOrbital(int n_, int l_) : n(n_), l(l_) {
  if (n < 1) throw std::domain_error("SphericalOrbital: n must be a positive integer");
  if (l < 0 || l > n - 1) throw std::domain_error("SphericalOrbital: 0 <= l <= n-1 violated");
}

ParabolicOrbital::ParabolicOrbital(int n_, int n1_, int n2_, int m_)
    : n(n_), n1(n1_), n2(n2_), m(m_) {
  if (n < 1) throw std::domain_error("ParabolicOrbital: n must be a positive integer");
  if (n1 < 0 || n2 < 0) throw std::domain_error("ParabolicOrbital: n1, n2 must be nonnegative");
  if (n != n1 + n2 + abs_m() + 1)
    throw std::domain_error("ParabolicOrbital: n = n1 + n2 + |m| + 1 violated");
}

ParabolicOrbital ParabolicOrbital::from_electric(int n, int q, int m) {
  const int am = m < 0 ? -m : m;
  const int span = n - 1 - am;
  if (span < 0) throw std::domain_error("ParabolicOrbital: |m| <= n-1 violated");
  if (q < -span || q > span)
    throw std::domain_error("ParabolicOrbital: |q| <= n-1-|m| violated");
  if ((span - q) % 2 != 0)
    throw std::domain_error("ParabolicOrbital: q and n-1-|m| must have equal parity");
  return ParabolicOrbital(n, (span + q) / 2, (span - q) / 2, m);
}

Charge::Charge(Rational z_) : z(std::move(z_)) {
  if (z.sign() <= 0) throw std::domain_error("Charge: Z must be positive");
}

Rational expval_spherical(const SphericalOrbital& orb, const Charge& z, int p, Method method) {
  if (p < 0) throw std::domain_error("expval_spherical: p must be nonnegative");
  const long n = orb.n;
  const long l = orb.l;
  const Rational ll1(l * (l + 1));
  const Rational n2(n * n);

  if (method == Method::kRecurrence) {
    Rational prev(1);  // <r^0>
    if (p == 0) return prev;
    Rational cur = (Rational(3) * n2 - ll1) / (Rational(2) * z.z);
    for (int k = 2; k <= p; ++k) {
      Rational next = Rational(2 * k + 1) * n2 / (z.z * Rational(k + 1)) * cur -
                      Rational(k) * n2 / (Rational(4) * z.z * z.z * Rational(k + 1)) *
                          (Rational(4) * ll1 + Rational(1) - Rational(k * k)) * prev;
      prev = cur;
      cur = next;
    }
    return cur;
  }

  // Explicit double sum over the squared Laguerre expansion.
  Rational prefactor = z.z * Rational(factorial(n - l - 1), BigInt(n) * n * factorial(n + l)) *
                       (Rational(n) / (Rational(2) * z.z)).pow(p + 1);
  Rational sum(0);
  for (long s = 0; s <= 2 * (n - l - 1); ++s) {
    BigInt inner = 0;
    for (long j = 0; j <= s; ++j)
      inner += binomial(s, j) * binomial(n + l, 2 * l + 1 + j) * binomial(n + l, 2 * l + 1 + s - j);
    Rational term(factorial(2 * l + p + s + 2) * inner, factorial(s));
    sum += s % 2 == 0 ? term : -term;
  }
  return prefactor * sum;
}

Rational expval_spherical_negative(const SphericalOrbital& orb, const Charge& z, int p) {
  if (p < 0 || p > 2 * orb.l)
    throw std::domain_error("expval_spherical_negative: 0 <= p <= 2l required");
  const long n = orb.n;
  const long l = orb.l;

  Rational series(0);
  for (long s = 0; s <= p; ++s) {
    Rational num = pochhammer(Rational(-p), s) * pochhammer(Rational(p + 1), s) *
                   pochhammer(Rational(l + 1 - n), s);
    Rational den = Rational(factorial(s) * factorial(s)) * pochhammer(Rational(2 * l + 2), s);
    series += num / den;
  }
  Rational prefactor = pow2(p + 1) * z.z.pow(p + 2) / Rational(n).pow(p + 3);
  return prefactor * Rational(factorial(2 * l - p), factorial(2 * l + 1)) * series;
}

Rational marxer_reflect(const SphericalOrbital& orb, const Charge& z, int p) {
  if (p < 0 || p > 2 * orb.l - 2)
    throw std::domain_error("marxer_reflect: 0 <= p <= 2l-2 required");
  const long l = orb.l;
  Rational scale(factorial(2 * l + p + 2), factorial(2 * l - p - 1));
  Rational stretch = (Rational(orb.n) / (Rational(2) * z.z)).pow(2 * p + 3);
  return scale * stretch * expval_spherical_negative(orb, z, p + 1);
}

XiMomentCoefficient xi_moment(int n, int n1, int m, const Charge& z, int k, Method method) {
  if (k < 0) throw std::domain_error("xi_moment: k must be nonnegative");
  if (m < 0) throw std::domain_error("xi_moment: m must be nonnegative");
  if (n1 < 0 || n1 + m + 1 > n)
    throw std::domain_error("xi_moment: (n, n1, m) is not a parabolic state");

  if (method == Method::kRecurrence) return {xi_coefficients(n, n1, m, z, k + 1).back()};

  // Explicit finite sum; the extended binomial kills every i < n1 - k term.
  Rational scale = Rational(factorial(n1) * factorial(m + k), factorial(n1 + m)) *
                   (Rational(n) / z.z).pow(k);
  BigInt sum = 0;
  for (long i = std::max(0, n1 - k); i <= n1; ++i) {
    BigInt edge = extended_binomial(n1 - i - k - 1, n1 - i);
    sum += edge * edge * binomial(m + k + i, i);
  }
  return {scale * Rational(sum)};
}

Rational expval_parabolic(const ParabolicOrbital& orb, const Charge& z, int p) {
  if (p < 0) throw std::domain_error("expval_parabolic: p must be nonnegative");
  const int m = orb.abs_m();
  std::vector<Rational> xi = xi_coefficients(orb.n, orb.n1, m, z, p + 2);
  std::vector<Rational> eta = xi_coefficients(orb.n, orb.n2, m, z, p + 2);

  // (pi / 2^(p+1)) sum_r C(p+1, r) <xi^r> <eta^(p+1-r)>; the pi cancels
  // against the two sqrt(Z/pi)/n factors, leaving Z / (2^(p+1) n^2).
  Rational sum(0);
  for (int r = 0; r <= p + 1; ++r)
    sum += Rational(binomial(p + 1, r)) * xi[r] * eta[p + 1 - r];
  return z.z / (pow2(p + 1) * Rational(static_cast<long>(orb.n) * orb.n)) * sum;
}

SqrtRational cg_spherical_parabolic(int n, int q, int m, int l) {
  ParabolicOrbital::from_electric(n, q, m);  // validates (n, q, m)
  if (l < 0 || l > n - 1)
    throw std::domain_error("cg_spherical_parabolic: 0 <= l <= n-1 required");

  HalfInt half_shell = HalfInt::from_twice(n - 1);
  SqrtRational symbol = wigner_3jm(half_shell, half_shell, HalfInt(l),
                                   HalfInt::from_twice(m - q), HalfInt::from_twice(m + q),
                                   HalfInt(-m));
  if (symbol.is_zero()) return symbol;
  SqrtRational value = sqrt_of_rational(Rational(2 * l + 1)) * symbol;
  return parity(HalfInt::from_twice(1 + m - q - n)) < 0 ? -value : value;
}

Rational expval_parabolic_via_basis_change(const ParabolicOrbital& orb, const Charge& z, int p) {
  if (p < 0) throw std::domain_error("expval_parabolic_via_basis_change: p must be nonnegative");
  Rational total(0);
  for (int l = orb.abs_m(); l <= orb.n - 1; ++l) {
    Rational weight = cg_spherical_parabolic(orb.n, orb.q(), orb.m, l).square();
    if (weight.is_zero()) continue;
    total += weight * expval_spherical(SphericalOrbital(orb.n, l), z, p);
  }
  return total;
}

Rational l2k_parabolic(const ParabolicOrbital& orb, int k) {
  if (k < 1 || k > 2) throw std::domain_error("l2k_parabolic: k must be 1 or 2");
  HalfInt a = HalfInt::from_twice(orb.n - 1 + orb.abs_m());
  HalfInt c = HalfInt::from_twice(orb.n - 1 - orb.abs_m());
  HalfInt x = HalfInt::from_twice(-orb.q());
  Rational value = sumrule_zero_projection(k, a, c, x);
  if (k == 1 && (value != l2_closed_n1n2(orb) || value != l2_closed_nqm(orb)))
    throw std::logic_error("l2k_parabolic: sum rule disagrees with the <L^2> closed forms");
  return value;
}

Rational l2_closed_n1n2(const ParabolicOrbital& orb) {
  return Rational((orb.abs_m() + 1) * static_cast<long>(orb.n - 1) + 2L * orb.n1 * orb.n2);
}

Rational l2_closed_nqm(const ParabolicOrbital& orb) {
  long n = orb.n, m = orb.abs_m(), q = orb.q();
  return Rational(n * n + m * m - q * q - 1, 2);
}

Rational l4_parabolic_polynomial(const ParabolicOrbital& orb) {
  Rational n2(static_cast<long>(orb.n) * orb.n);
  Rational m2(static_cast<long>(orb.abs_m()) * orb.abs_m());
  Rational q2(static_cast<long>(orb.q()) * orb.q());
  Rational body = Rational(3) + Rational(3) * m2 * m2 + Rational(10) * q2 +
                  Rational(2) * m2 * (n2 - Rational(3) * (Rational(1) + q2)) +
                  Rational(3) * (n2 * n2 + q2 * q2 - Rational(2) * m2 * (Rational(1) + q2));
  return body / Rational(8);
}

Rational l4_parabolic_polynomial_fixed(const ParabolicOrbital& orb) {
  Rational n2(static_cast<long>(orb.n) * orb.n);
  Rational m2(static_cast<long>(orb.abs_m()) * orb.abs_m());
  Rational q2(static_cast<long>(orb.q()) * orb.q());
  Rational body = Rational(3) + Rational(3) * m2 * m2 + Rational(10) * q2 +
                  Rational(2) * m2 * (n2 - Rational(3) * (Rational(1) + q2)) +
                  Rational(3) * (n2 * n2 + q2 * q2 - Rational(2) * n2 * (Rational(1) + q2));
  return body / Rational(8);
}

Rational table_polynomial_spherical(int k, const SphericalOrbital& orb, const Charge& z) {
  const Rational n2(static_cast<long>(orb.n) * orb.n);
  const Rational ll1(static_cast<long>(orb.l) * (orb.l + 1));
  switch (k) {
    case 1:
      return (Rational(3) * n2 - ll1) / (Rational(2) * z.z);
    case 2:
      return n2 / (Rational(2) * z.z.pow(2)) * (Rational(5) * n2 + Rational(1) - Rational(3) * ll1);
    case 3: {
      Rational body = Rational(3) * ll1 * (ll1 - Rational(2)) +
                      Rational(5) * n2 * (Rational(5) - Rational(6) * ll1) +
                      Rational(35) * n2 * n2;
      return n2 / (Rational(8) * z.z.pow(3)) * body;
    }
    case 4: {
      Rational body = Rational(12) - Rational(5) * ll1 * (Rational(10) - Rational(3) * ll1) +
                      Rational(35) * n2 * (Rational(3) - Rational(2) * ll1) +
                      Rational(63) * n2 * n2;
      return n2 * n2 / (Rational(8) * z.z.pow(4)) * body;
    }
    default:
      throw std::domain_error("table_polynomial_spherical: k must be in 1..4");
  }
}

Rational table_polynomial_parabolic(int k, const ParabolicOrbital& orb, const Charge& z) {
  const Rational n(orb.n);
  const Rational n2 = n * n;
  const Rational m2(static_cast<long>(orb.abs_m()) * orb.abs_m());
  const Rational q2(static_cast<long>(orb.q()) * orb.q());
  switch (k) {
    case 1:
      return (Rational(3) * n2 - (n2 - Rational(1) + m2 - q2) / Rational(2)) /
             (Rational(2) * z.z);
    case 2: {
      Rational body = n * (Rational(2) * n + Rational(3)) +
                      Rational(3, 2) * ((n - Rational(1)).pow(2) + q2 - m2) + Rational(1);
      return n2 / (Rational(2) * z.z.pow(2)) * body;
    }
    case 3: {
      Rational body = Rational(33) + Rational(9) * m2 * m2 + Rational(169) * n2 * n2 -
                      Rational(6) * m2 * (Rational(7) + Rational(19) * n2 + Rational(3) * q2) +
                      Rational(2) * n2 * (Rational(139) + Rational(51) * q2) +
                      Rational(9) * (Rational(6) + q2) * q2;
      return n2 / (Rational(64) * z.z.pow(3)) * body;
    }
    case 4: {
      Rational body = Rational(341) + Rational(45) * m2 * m2 + Rational(269) * n2 * n2 -
                      Rational(10) * m2 * (Rational(29) + Rational(25) * n2 + Rational(9) * q2) +
                      Rational(10) * n2 * (Rational(83) + Rational(19) * q2) +
                      Rational(350) * q2 + Rational(45) * q2 * q2;
      return n2 * n2 / (Rational(64) * z.z.pow(4)) * body;
    }
    default:
      throw std::domain_error("table_polynomial_parabolic: k must be in 1..4");
  }
}

double quasiclassical_probability(int n, int m, int q, int l) {
  if (m < 0) throw std::domain_error("quasiclassical_probability: m must be nonnegative");
  ParabolicOrbital::from_electric(n, q, m);  // validates parity and ranges
  if (l < 0) throw std::domain_error("quasiclassical_probability: l must be nonnegative");

  const double shell = static_cast<double>(n - 1);
  const double s = shell * shell + static_cast<double>(m) * m - static_cast<double>(q) * q;
  const double disc = std::sqrt(s * s - 4.0 * shell * shell * m * m);
  const double lmin_sq = 0.5 * (s - disc);
  const double lmax_sq = 0.5 * (s + disc);
  const double lsq = static_cast<double>(l) * l;
  if (lsq <= lmin_sq || lsq >= lmax_sq)
    throw std::domain_error("quasiclassical_probability: l outside the open (lmin, lmax) interval");

  if (m == 0) return 2.0 / (M_PI * std::sqrt(shell * shell - static_cast<double>(q) * q));
  return 2.0 * l / (M_PI * std::sqrt((lsq - lmin_sq) * (lmax_sq - lsq)));
}

}  // namespace amsum
