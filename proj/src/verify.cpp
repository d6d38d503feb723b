#include "amsum/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "amsum/hydrogenic.hpp"
#include "amsum/sumrule.hpp"
#include "amsum/wigner.hpp"

namespace amsum {

namespace {

std::string sumrule_cmd(long k, HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2) {
  std::ostringstream os;
  os << "amsum sumrule " << k << " " << j1 << " " << m1 << " " << j2 << " " << m2
     << " --method all";
  return os.str();
}

std::string threej_cmd(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt m1, HalfInt m2, HalfInt m3) {
  std::ostringstream os;
  os << "amsum 3j " << j1 << " " << j2 << " " << j3 << " " << m1 << " " << m2 << " " << m3;
  return os.str();
}

std::string sixj_cmd(HalfInt a, HalfInt b, HalfInt c, HalfInt d, HalfInt e, HalfInt f) {
  std::ostringstream os;
  os << "amsum 6j " << a << " " << b << " " << c << " " << d << " " << e << " " << f;
  return os.str();
}

std::string spherical_cmd(int n, int l, const Rational& z, int p, const char* extra = "") {
  std::ostringstream os;
  os << "amsum expval spherical " << n << " " << l << " --Z " << z << " --p " << p << extra;
  return os.str();
}

std::string parabolic_cmd(const ParabolicOrbital& orb, const Rational& z, int p,
                          const char* extra = "") {
  std::ostringstream os;
  os << "amsum expval parabolic --n " << orb.n << " --n1 " << orb.n1 << " --n2 " << orb.n2
     << " --m " << orb.m << " --Z " << z << " --p " << p << extra;
  return os.str();
}

const std::vector<Rational>& charge_grid() {
  static const std::vector<Rational> zs = {Rational(1), Rational(2), Rational(13, 2)};
  return zs;
}

/// All parabolic states of shell n (signed m unless told otherwise).
std::vector<ParabolicOrbital> shell_states(int n, bool signed_m = true) {
  std::vector<ParabolicOrbital> states;
  for (int m = signed_m ? -(n - 1) : 0; m <= n - 1; ++m) {
    int am = m < 0 ? -m : m;
    for (int n1 = 0; n1 + am + 1 <= n; ++n1) states.emplace_back(n, n1, n - 1 - am - n1, m);
  }
  return states;
}

template <typename Body>
void for_each_query(HalfInt max_j, Body&& body) {
  const long top = max_j.twice();
  for (long tj1 = 0; tj1 <= top; ++tj1)
    for (long tj2 = 0; tj2 <= top; ++tj2)
      for (long tm1 = -tj1; tm1 <= tj1; tm1 += 2)
        for (long tm2 = -tj2; tm2 <= tj2; tm2 += 2)
          body(HalfInt::from_twice(tj1), HalfInt::from_twice(tm1), HalfInt::from_twice(tj2),
               HalfInt::from_twice(tm2));
}

}  // namespace

bool SuiteReport::passed() const {
  for (const auto& c : checks)
    if (!c.passed()) return false;
  return true;
}

long SuiteReport::total_cases() const {
  long total = 0;
  for (const auto& c : checks) total += c.cases;
  return total;
}

long SuiteReport::total_failures() const {
  long total = 0;
  for (const auto& c : checks) total += static_cast<long>(c.failures.size());
  return total;
}

long SuiteReport::total_warnings() const {
  long total = 0;
  for (const auto& c : checks) total += static_cast<long>(c.warnings.size());
  return total;
}

// ---------------------------------------------------------------- wigner

CheckResult check_wigner_symmetries(HalfInt max_j) {
  CheckResult result("3jm column permutations and m-negation");
  const long top = max_j.twice();
  for (long tj1 = 0; tj1 <= top; ++tj1)
    for (long tj2 = 0; tj2 <= top; ++tj2)
      for (long tj3 = 0; tj3 <= top; ++tj3)
        for (long tm1 = -tj1; tm1 <= tj1; tm1 += 2)
          for (long tm2 = -tj2; tm2 <= tj2; tm2 += 2) {
            const long tm3 = -tm1 - tm2;
            if ((tj3 - tm3) % 2 != 0) continue;  // not expressible, parity mismatch
            HalfInt j1 = HalfInt::from_twice(tj1), j2 = HalfInt::from_twice(tj2),
                    j3 = HalfInt::from_twice(tj3), m1 = HalfInt::from_twice(tm1),
                    m2 = HalfInt::from_twice(tm2), m3 = HalfInt::from_twice(tm3);
            SqrtRational base = wigner_3jm(j1, j2, j3, m1, m2, m3);
            SqrtRational cyc1 = wigner_3jm(j2, j3, j1, m2, m3, m1);
            SqrtRational cyc2 = wigner_3jm(j3, j1, j2, m3, m1, m2);
            SqrtRational swap = wigner_3jm(j2, j1, j3, m2, m1, m3);
            SqrtRational flip = wigner_3jm(j1, j2, j3, -m1, -m2, -m3);
            ++result.cases;

            bool ok;
            if (base.is_zero()) {
              ok = cyc1.is_zero() && cyc2.is_zero() && swap.is_zero() && flip.is_zero();
            } else {
              SqrtRational odd = parity(j1 + j2 + j3) < 0 ? -base : base;
              ok = cyc1 == base && cyc2 == base && swap == odd && flip == odd;
            }
            if (!ok) result.failures.push_back(threej_cmd(j1, j2, j3, m1, m2, m3));
          }
  return result;
}

CheckResult check_wigner_orthogonality(HalfInt max_j) {
  CheckResult result("3jm orthogonality sum over the full (j, m) grid");
  const long top = max_j.twice();
  for (long tj1 = 0; tj1 <= top; ++tj1)
    for (long tj2 = 0; tj2 <= top; ++tj2)
      for (long tm1 = -tj1; tm1 <= tj1; tm1 += 2)
        for (long tm2 = -tj2; tm2 <= tj2; tm2 += 2) {
          HalfInt j1 = HalfInt::from_twice(tj1), j2 = HalfInt::from_twice(tj2),
                  m1 = HalfInt::from_twice(tm1), m2 = HalfInt::from_twice(tm2);
          Rational total(0);
          for (long tj = std::abs(tj1 - tj2); tj <= tj1 + tj2; tj += 2)
            for (long tm = -tj; tm <= tj; tm += 2)
              total += Rational(tj + 1) * wigner_3jm(j1, j2, HalfInt::from_twice(tj), m1, m2,
                                                     HalfInt::from_twice(-tm))
                                              .square();
          ++result.cases;
          if (total != Rational(1)) result.failures.push_back(sumrule_cmd(0, j1, m1, j2, m2));
        }
  return result;
}

CheckResult check_wigner_regge(int max_n) {
  CheckResult result("Regge-type identity relating the two 3jm forms");
  for (int n = 1; n <= max_n; ++n)
    for (int m = -(n - 1); m <= n - 1; ++m) {
      int am = m < 0 ? -m : m;
      for (int q = -(n - 1 - am); q <= n - 1 - am; q += 2)
        for (int l = 0; l <= n - 1; ++l) {
          HalfInt shell = HalfInt::from_twice(n - 1);
          SqrtRational left = wigner_3jm(shell, shell, HalfInt(l), HalfInt::from_twice(m - q),
                                         HalfInt::from_twice(m + q), HalfInt(-m));
          SqrtRational right =
              wigner_3jm(HalfInt::from_twice(n - 1 + m), HalfInt::from_twice(n - 1 - m),
                         HalfInt(l), HalfInt::from_twice(-q), HalfInt::from_twice(q), HalfInt(0));
          ++result.cases;
          if (!(left == right))
            result.failures.push_back(threej_cmd(shell, shell, HalfInt(l),
                                                 HalfInt::from_twice(m - q),
                                                 HalfInt::from_twice(m + q), HalfInt(-m)));
        }
    }
  return result;
}

CheckResult check_threej_diag_oracles(HalfInt max_a) {
  CheckResult result("diagonal 3j closed forms vs Racah evaluation");
  for (long ta = 0; ta <= max_a.twice(); ++ta) {
    HalfInt a = HalfInt::from_twice(ta);
    for (int i = 0; i <= static_cast<int>(ta); ++i)
      for (long tx = -ta; tx <= ta; tx += 2) {
        HalfInt x = HalfInt::from_twice(tx);
        SqrtRational racah = wigner_3jm(a, a, HalfInt(i), x, -x, HalfInt(0));
        ++result.cases;
        bool ok = threej_diag_general(a, i, x) == racah;
        if (ok && i >= 1 && i <= 3) ok = threej_diag_special(a, i, x) == racah;
        if (!ok) result.failures.push_back(threej_cmd(a, a, HalfInt(i), x, -x, HalfInt(0)));
      }
  }
  return result;
}

CheckResult check_sixj_unit_oracles(HalfInt max_ac) {
  CheckResult result("unit-argument 6j closed forms vs Racah evaluation");
  for (long ta = 1; ta <= max_ac.twice(); ++ta)
    for (long tc = 1; tc <= max_ac.twice(); ++tc) {
      if ((ta + tc) % 2 != 0) continue;  // no integral l closes the triangle
      for (int i = 1; i <= 3; ++i) {
        if (ta < i || tc < i) continue;
        for (long tl = std::abs(ta - tc); tl <= ta + tc; tl += 2) {
          HalfInt a = HalfInt::from_twice(ta), c = HalfInt::from_twice(tc),
                  l = HalfInt::from_twice(tl);
          ++result.cases;
          if (!(sixj_unit_special(a, c, l, i) == wigner_6j(a, c, l, c, a, HalfInt(i))))
            result.failures.push_back(sixj_cmd(a, c, l, c, a, HalfInt(i)));
        }
      }
    }
  return result;
}

// -------------------------------------------------------------- sum rules

CheckResult check_sumrule_closed_forms(HalfInt max_j) {
  CheckResult result("closed forms = bruteforce = operator walk, k in 1..3");
  for_each_query(max_j, [&](HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2) {
    for (long k = 1; k <= 3; ++k) {
      SumRuleQuery q{k, j1, m1, j2, m2};
      Rational closed = sumrule_closed(k, j1, m1, j2, m2);
      ++result.cases;
      if (closed != sumrule_operator(q) || closed != sumrule_bruteforce(q))
        result.failures.push_back(sumrule_cmd(k, j1, m1, j2, m2));
    }
  });
  return result;
}

CheckResult check_sumrule_general(HalfInt max_j, long max_k, long permutation_max_k) {
  CheckResult result("operator walk = bruteforce (= word enumeration) for general k");
  for_each_query(max_j, [&](HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2) {
    for (long k = 0; k <= max_k; ++k) {
      SumRuleQuery q{k, j1, m1, j2, m2};
      Rational op = sumrule_operator(q);
      ++result.cases;
      bool ok = op == sumrule_bruteforce(q);
      if (ok && k <= permutation_max_k) ok = op == sumrule_permutation(q, permutation_max_k);
      if (!ok) result.failures.push_back(sumrule_cmd(k, j1, m1, j2, m2));
    }
  });
  return result;
}

CheckResult check_sumrule_orthogonality(HalfInt max_j) {
  CheckResult result("k = 0 sum rule is exactly 1");
  for_each_query(max_j, [&](HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2) {
    SumRuleQuery q{0, j1, m1, j2, m2};
    ++result.cases;
    if (sumrule_operator(q) != Rational(1) || sumrule_bruteforce(q) != Rational(1))
      result.failures.push_back(sumrule_cmd(0, j1, m1, j2, m2));
  });
  return result;
}

CheckResult check_sumrule_zero_projection(HalfInt max_ac) {
  CheckResult result("zero-projection closed forms vs bruteforce and specialization");
  const long top = max_ac.twice();
  for (long ta = 0; ta <= top; ++ta)
    for (long tc = ta % 2; tc <= top; tc += 2)  // a - x and c - x must both be integral
      for (long tx = -std::min(ta, tc); tx <= std::min(ta, tc); tx += 2)
        for (long k = 1; k <= 3; ++k) {
          HalfInt a = HalfInt::from_twice(ta), c = HalfInt::from_twice(tc),
                  x = HalfInt::from_twice(tx);
          Rational zero_form = sumrule_zero_projection(k, a, c, x);
          ++result.cases;
          if (zero_form != sumrule_bruteforce({k, a, -x, c, x}) ||
              zero_form != sumrule_closed(k, a, -x, c, x))
            result.failures.push_back(sumrule_cmd(k, a, -x, c, x));
        }
  return result;
}

CheckResult check_sumrule_stretched(HalfInt max_j, long max_k) {
  CheckResult result("stretched states give [(j1+j2)(j1+j2+1)]^k");
  const long top = max_j.twice();
  for (long tj1 = 0; tj1 <= top; ++tj1)
    for (long tj2 = 0; tj2 <= top; ++tj2)
      for (long k = 0; k <= max_k; ++k) {
        HalfInt j1 = HalfInt::from_twice(tj1), j2 = HalfInt::from_twice(tj2);
        ++result.cases;
        if (sumrule_operator({k, j1, j1, j2, j2}) != jjp1(j1 + j2).pow(k))
          result.failures.push_back(sumrule_cmd(k, j1, j1, j2, j2));
      }
  return result;
}

CheckResult check_sumrule_bounds(HalfInt max_j, long max_k) {
  CheckResult result("S_k bounded by the extreme [j(j+1)]^k values");
  for_each_query(max_j, [&](HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2) {
    for (long k = 1; k <= max_k; ++k) {
      Rational value = sumrule_operator({k, j1, m1, j2, m2});
      ++result.cases;
      if (value < jjp1(abs(j1 - j2)).pow(k) || jjp1(j1 + j2).pow(k) < value)
        result.failures.push_back(sumrule_cmd(k, j1, m1, j2, m2));
    }
  });
  return result;
}

CheckResult check_sumrule_symmetry(HalfInt max_j, long max_k) {
  CheckResult result("S_k symmetric under system exchange and m negation");
  for_each_query(max_j, [&](HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2) {
    for (long k = 1; k <= max_k; ++k) {
      Rational value = sumrule_operator({k, j1, m1, j2, m2});
      ++result.cases;
      if (value != sumrule_operator({k, j2, m2, j1, m1}) ||
          value != sumrule_operator({k, j1, -m1, j2, -m2}))
        result.failures.push_back(sumrule_cmd(k, j1, m1, j2, m2));
    }
  });
  return result;
}

// ------------------------------------------------------------- hydrogenic

CheckResult check_spherical_methods(int max_n, int max_p) {
  CheckResult result("spherical moments: recurrence = explicit double sum");
  for (const Rational& z : charge_grid())
    for (int n = 1; n <= max_n; ++n)
      for (int l = 0; l <= n - 1; ++l)
        for (int p = 0; p <= max_p; ++p) {
          SphericalOrbital orb(n, l);
          Charge charge(z);
          ++result.cases;
          if (expval_spherical(orb, charge, p, Method::kRecurrence) !=
              expval_spherical(orb, charge, p, Method::kExplicit))
            result.failures.push_back(spherical_cmd(n, l, z, p, " --method both"));
        }
  return result;
}

CheckResult check_spherical_table(int max_n) {
  CheckResult result("spherical <r^k> polynomial rows, k in 1..4");
  for (const Rational& z : {Rational(1), Rational(2)})
    for (int n = 1; n <= max_n; ++n)
      for (int l = 0; l <= n - 1; ++l)
        for (int k = 1; k <= 4; ++k) {
          SphericalOrbital orb(n, l);
          Charge charge(z);
          ++result.cases;
          if (table_polynomial_spherical(k, orb, charge) != expval_spherical(orb, charge, k))
            result.failures.push_back(spherical_cmd(n, l, z, k));
        }
  return result;
}

CheckResult check_negative_powers(int max_n) {
  CheckResult result("<r^-2> = 2 Z^2 / (n^3 (2l+1)) from the terminating series");
  for (const Rational& z : charge_grid())
    for (int n = 1; n <= max_n; ++n)
      for (int l = 0; l <= n - 1; ++l) {
        Rational expected = Rational(2) * z.pow(2) /
                            (Rational(static_cast<long>(n) * n * n) * Rational(2 * l + 1));
        ++result.cases;
        if (expval_spherical_negative(SphericalOrbital(n, l), Charge(z), 0) != expected)
          result.failures.push_back(spherical_cmd(n, l, z, 0, " --negative"));
      }
  return result;
}

CheckResult check_marxer_reflection(int max_n) {
  CheckResult result("reflection through inverse powers reproduces <r^p>");
  for (const Rational& z : charge_grid())
    for (int n = 1; n <= max_n; ++n)
      for (int l = 0; l <= n - 1; ++l)
        for (int p = 0; p <= 2 * l - 2; ++p) {
          SphericalOrbital orb(n, l);
          Charge charge(z);
          ++result.cases;
          if (marxer_reflect(orb, charge, p) != expval_spherical(orb, charge, p))
            result.failures.push_back(spherical_cmd(n, l, z, p, " --method both"));
        }
  return result;
}

CheckResult check_xi_methods(int max_n, int max_k) {
  CheckResult result("xi moments: recurrence = explicit finite sum");
  for (const Rational& z : charge_grid())
    for (int n = 1; n <= max_n; ++n)
      for (int m = 0; m <= n - 1; ++m)
        for (int n1 = 0; n1 + m + 1 <= n; ++n1)
          for (int k = 0; k <= max_k; ++k) {
            Charge charge(z);
            ++result.cases;
            if (!(xi_moment(n, n1, m, charge, k, Method::kRecurrence).c ==
                  xi_moment(n, n1, m, charge, k, Method::kExplicit).c)) {
              std::ostringstream os;
              os << "xi moment mismatch: n=" << n << " n1=" << n1 << " m=" << m << " Z=" << z
                 << " k=" << k;
              result.failures.push_back(os.str());
            }
          }
  return result;
}

CheckResult check_parabolic_normalization(int max_n) {
  CheckResult result("parabolic <r^0> = 1 for every state");
  for (const Rational& z : charge_grid())
    for (int n = 1; n <= max_n; ++n)
      for (const ParabolicOrbital& orb : shell_states(n)) {
        ++result.cases;
        if (expval_parabolic(orb, Charge(z), 0) != Rational(1))
          result.failures.push_back(parabolic_cmd(orb, z, 0));
      }
  return result;
}

CheckResult check_central_identity(int max_n, int max_p) {
  CheckResult result("parabolic moments = basis change over spherical moments");
  for (const Rational& z : {Rational(1), Rational(2)})
    for (int n = 1; n <= max_n; ++n)
      for (const ParabolicOrbital& orb : shell_states(n))
        for (int p = 0; p <= max_p; ++p) {
          Charge charge(z);
          ++result.cases;
          if (expval_parabolic(orb, charge, p) !=
              expval_parabolic_via_basis_change(orb, charge, p))
            result.failures.push_back(parabolic_cmd(orb, z, p, " --method both"));
        }
  return result;
}

CheckResult check_parabolic_table(int max_n) {
  CheckResult result("parabolic <r^k> polynomial rows, k in 1..4");
  const Rational z(2);  // away from Z = 1 so prefactor powers matter
  bool variant_reported = false;
  for (int n = 1; n <= max_n; ++n)
    for (const ParabolicOrbital& orb : shell_states(n))
      for (int k = 1; k <= 4; ++k) {
        Charge charge(z);
        Rational computed = expval_parabolic(orb, charge, k);
        Rational row = table_polynomial_parabolic(k, orb, charge);
        ++result.cases;
        if (row != computed) result.failures.push_back(parabolic_cmd(orb, z, k));
        if (k == 4 && !variant_reported) {
          variant_reported = true;
          Rational zcubed_variant = row * z;  // same polynomial, 1/Z^3 prefactor
          std::ostringstream os;
          os << "r^4 parabolic row with a 1/Z^3 prefactor gives " << zcubed_variant
             << " instead of " << computed << " at Z=" << z << ", n=" << orb.n
             << ", q=" << orb.q() << ", m=" << orb.m
             << "; only the 1/Z^4 prefactor is dimensionally consistent and matches";
          result.warnings.push_back(os.str());
        }
      }
  return result;
}

CheckResult check_cg_completeness(int max_n) {
  CheckResult result("squared parabolic-spherical overlaps sum to 1");
  for (int n = 1; n <= max_n; ++n)
    for (const ParabolicOrbital& orb : shell_states(n)) {
      Rational total(0);
      for (int l = orb.abs_m(); l <= n - 1; ++l)
        total += cg_spherical_parabolic(n, orb.q(), orb.m, l).square();
      ++result.cases;
      if (total != Rational(1)) {
        std::ostringstream os;
        os << "overlap completeness: n=" << n << " q=" << orb.q() << " m=" << orb.m;
        result.failures.push_back(os.str());
      }
    }
  return result;
}

CheckResult check_l2_chain(int max_n) {
  CheckResult result("<L^2>: sum rule = both closed forms = overlap sum");
  for (int n = 1; n <= max_n; ++n)
    for (const ParabolicOrbital& orb : shell_states(n)) {
      Rational from_rule = l2k_parabolic(orb, 1);
      Rational from_overlaps(0);
      for (int l = orb.abs_m(); l <= n - 1; ++l)
        from_overlaps += cg_spherical_parabolic(n, orb.q(), orb.m, l).square() *
                         Rational(static_cast<long>(l) * (l + 1));
      ++result.cases;
      if (from_rule != l2_closed_n1n2(orb) || from_rule != l2_closed_nqm(orb) ||
          from_rule != from_overlaps) {
        std::ostringstream os;
        os << "L^2 chain: n=" << n << " q=" << orb.q() << " m=" << orb.m;
        result.failures.push_back(os.str());
      }
    }
  return result;
}

CheckResult check_l4_sumrule(int max_n) {
  CheckResult result("<L^4>: sum rule = overlap sum; polynomial variants reported");
  bool discrepancy_reported = false;
  bool fixed_matches = true;
  for (int n = 1; n <= max_n; ++n)
    for (const ParabolicOrbital& orb : shell_states(n)) {
      Rational from_rule = l2k_parabolic(orb, 2);
      Rational from_overlaps(0);
      for (int l = orb.abs_m(); l <= n - 1; ++l) {
        Rational ll1(static_cast<long>(l) * (l + 1));
        from_overlaps += cg_spherical_parabolic(n, orb.q(), orb.m, l).square() * ll1 * ll1;
      }
      ++result.cases;
      if (from_rule != from_overlaps) {
        std::ostringstream os;
        os << "L^4 sum rule: n=" << n << " q=" << orb.q() << " m=" << orb.m;
        result.failures.push_back(os.str());
      }
      if (l4_parabolic_polynomial_fixed(orb) != from_rule) fixed_matches = false;
      if (!discrepancy_reported && n == 2 && orb.q() == 1 && orb.m == 0) {
        discrepancy_reported = true;
        std::ostringstream os;
        os << "<L^4> closed-form polynomial gives " << l4_parabolic_polynomial(orb)
           << " at n=2, q=1, m=0 while the sum rule and the overlap sum give " << from_rule
           << "; replacing its trailing 2m^2(1+q^2) term by 2n^2(1+q^2) reconciles it";
        result.warnings.push_back(os.str());
      }
    }
  if (!fixed_matches)
    result.warnings.push_back(
        "corrected <L^4> polynomial variant did NOT match the sum rule everywhere");
  return result;
}

CheckResult check_z_scaling(int max_n) {
  CheckResult result("<r^p> scales as Z^-p in both coordinate systems");
  const Rational z(13, 2);
  for (int n = 1; n <= max_n; ++n) {
    for (int l = 0; l <= n - 1; ++l)
      for (int p = 0; p <= 4; ++p) {
        SphericalOrbital orb(n, l);
        ++result.cases;
        if (expval_spherical(orb, Charge(z), p) !=
            expval_spherical(orb, Charge(Rational(1)), p) / z.pow(p))
          result.failures.push_back(spherical_cmd(n, l, z, p));
      }
    for (const ParabolicOrbital& orb : shell_states(n, false))
      for (int p = 0; p <= 4; ++p) {
        ++result.cases;
        if (expval_parabolic(orb, Charge(z), p) !=
            expval_parabolic(orb, Charge(Rational(1)), p) / z.pow(p))
          result.failures.push_back(parabolic_cmd(orb, z, p));
      }
  }
  return result;
}

CheckResult check_quasiclassical(int n, double tolerance, bool strict_pointwise) {
  CheckResult result("quasi-classical m = 0 estimate vs exact overlaps (soft)");
  const int parity_base = (n - 1) % 2;
  long pointwise_ok = 0, pointwise_all = 0;
  long paired_ok = 0, paired_all = 0;
  double worst_pointwise = 0, worst_paired = 0;

  const int q_first = parity_base == 0 ? 2 : 1;
  for (int q = q_first; q <= q_first + 4; q += 2) {
    const double lmax = std::sqrt(static_cast<double>(n - 1) * (n - 1) - q * q);
    const int lo = static_cast<int>(lmax / 3.0) + 1;
    const int hi = static_cast<int>(2.0 * lmax / 3.0);
    const double asym = quasiclassical_probability(n, 0, q, lo);
    double prev_exact = -1;
    for (int l = lo; l <= hi; ++l) {
      double exact = cg_spherical_parabolic(n, q, 0, l).square().to_double();
      double rel = std::abs(asym - exact) / exact;
      ++pointwise_all;
      ++result.cases;
      if (rel <= tolerance) ++pointwise_ok;
      worst_pointwise = std::max(worst_pointwise, rel);
      if (prev_exact >= 0) {
        // Exact values alternate around the classical density between
        // adjacent l; the pair average is the meaningful smooth comparison.
        double pair = 0.5 * (prev_exact + exact);
        double pair_rel = std::abs(asym - pair) / pair;
        ++paired_all;
        if (pair_rel <= tolerance) ++paired_ok;
        worst_paired = std::max(worst_paired, pair_rel);
      }
      prev_exact = exact;
    }
  }

  std::ostringstream os;
  os.precision(3);
  os << "n=" << n << ", m=0, middle-third l: pointwise within " << tolerance * 100
     << "%: " << pointwise_ok << "/" << pointwise_all << " (worst rel. dev. " << worst_pointwise
     << "); adjacent-pair averages within tolerance: " << paired_ok << "/" << paired_all
     << " (worst " << worst_paired << ")";
  if (strict_pointwise && pointwise_ok < pointwise_all)
    result.failures.push_back(os.str());
  else
    result.warnings.push_back(os.str());
  return result;
}

// ------------------------------------------------------------------ suites

SuiteReport verify_wigner(const WignerVerifyOptions& options) {
  SuiteReport report{"wigner", {}};
  report.checks.push_back(check_wigner_symmetries(options.symmetry_max_j));
  report.checks.push_back(check_wigner_orthogonality(options.orthogonality_max_j));
  report.checks.push_back(check_wigner_regge(options.regge_max_n));
  report.checks.push_back(check_threej_diag_oracles(options.oracle_max_a));
  report.checks.push_back(check_sixj_unit_oracles(options.oracle_max_a));
  return report;
}

SuiteReport verify_sumrules(const SumRuleVerifyOptions& options) {
  SuiteReport report{"sumrules", {}};
  report.checks.push_back(check_sumrule_closed_forms(options.closed_max_j));
  report.checks.push_back(check_sumrule_general(options.general_max_j, options.general_max_k,
                                                options.permutation_max_k));
  report.checks.push_back(check_sumrule_orthogonality(options.closed_max_j));
  report.checks.push_back(check_sumrule_zero_projection(options.zero_projection_max));
  report.checks.push_back(check_sumrule_stretched(options.closed_max_j, options.stretched_max_k));
  report.checks.push_back(check_sumrule_bounds(options.general_max_j, options.general_max_k));
  report.checks.push_back(check_sumrule_symmetry(options.general_max_j, options.general_max_k));
  return report;
}

SuiteReport verify_hydrogenic(const HydrogenicVerifyOptions& options) {
  SuiteReport report{"hydrogenic", {}};
  report.checks.push_back(check_spherical_methods(options.deep_max_n, options.spherical_max_p));
  report.checks.push_back(check_spherical_table(options.max_n));
  report.checks.push_back(check_negative_powers(options.max_n));
  report.checks.push_back(check_marxer_reflection(options.max_n));
  report.checks.push_back(check_xi_methods(options.deep_max_n, options.xi_max_k));
  report.checks.push_back(check_parabolic_normalization(options.deep_max_n));
  report.checks.push_back(check_central_identity(options.max_n, options.central_max_p));
  report.checks.push_back(check_parabolic_table(options.max_n));
  report.checks.push_back(check_cg_completeness(options.deep_max_n));
  report.checks.push_back(check_l2_chain(options.deep_max_n));
  report.checks.push_back(check_l4_sumrule(options.deep_max_n));
  report.checks.push_back(check_z_scaling(options.max_n));
  report.checks.push_back(check_quasiclassical(options.quasiclassical_n));
  return report;
}

}  // namespace amsum
