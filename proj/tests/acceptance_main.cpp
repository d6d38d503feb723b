// Acceptance suite: runs every shipping criterion on its full grid and
// prints one PASS/FAIL line per criterion. All equalities are exact
// (zero tolerance) except the final quasi-classical diagnostic, which is a
// soft 25% comparison reported without affecting the exit status.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "amsum/verify.hpp"

using namespace amsum;

namespace {

struct Criterion {
  int id;
  std::string label;
  bool soft = false;
  double budget_seconds = 0;  // 0 = no runtime requirement
};

int failures = 0;

void report(const Criterion& criterion, const std::vector<CheckResult>& results,
            double seconds) {
  long cases = 0;
  bool pass = true;
  for (const CheckResult& r : results) {
    cases += r.cases;
    pass = pass && r.passed();
  }
  bool in_budget = criterion.budget_seconds <= 0 || seconds < criterion.budget_seconds;

  const char* verdict = "PASS";
  if (!pass || !in_budget) verdict = criterion.soft ? "SOFT-FAIL" : "FAIL";
  if (!criterion.soft && (!pass || !in_budget)) ++failures;

  std::printf("[%2d] %s %s (%ld cases, %.1f s)\n", criterion.id, verdict,
              criterion.label.c_str(), cases, seconds);
  for (const CheckResult& r : results) {
    std::size_t shown = 0;
    for (const std::string& failure : r.failures) {
      if (shown++ == 5) {
        std::printf("     ... %zu more failures\n", r.failures.size() - 5);
        break;
      }
      std::printf("     FAIL %s\n", failure.c_str());
    }
    for (const std::string& warning : r.warnings) std::printf("     WARN %s\n", warning.c_str());
  }
  if (!in_budget)
    std::printf("     runtime %.1f s exceeded the %.0f s budget\n", seconds,
                criterion.budget_seconds);
  std::fflush(stdout);
}

template <typename Body>
void run(const Criterion& criterion, Body&& body) {
  auto start = std::chrono::steady_clock::now();
  std::vector<CheckResult> results = body();
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report(criterion, results, seconds);
}

}  // namespace

int main() {
  run({1, "sum-rule closed forms k=1..3 exact over (j1,j2) <= 4, every projection", false, 60},
      [] { return std::vector<CheckResult>{check_sumrule_closed_forms(HalfInt(4))}; });

  run({2, "general-k cross-validation: k <= 6 operator=bruteforce, k <= 5 word enumeration,"
          " (j1,j2) <= 5/2", false, 120},
      [] {
        return std::vector<CheckResult>{check_sumrule_general(HalfInt::from_twice(5), 6, 5)};
      });

  run({3, "k = 0 orthogonality returns exactly 1 over the closed-form grid"}, [] {
    return std::vector<CheckResult>{check_sumrule_orthogonality(HalfInt(4)),
                                    check_wigner_orthogonality(HalfInt::from_twice(7))};
  });

  run({4, "zero-projection closed forms k=1..3 match bruteforce for a, c <= 4, all x"}, [] {
    return std::vector<CheckResult>{check_sumrule_zero_projection(HalfInt(4))};
  });

  run({5, "closed-form 3j/6j special values match the Racah evaluations for a, c <= 4"}, [] {
    return std::vector<CheckResult>{check_threej_diag_oracles(HalfInt(4)),
                                    check_sixj_unit_oracles(HalfInt(4))};
  });

  run({6, "spherical moments: recurrence = explicit for n <= 10, p <= 8, Z in {1, 2, 13/2};"
          " polynomial rows exact for n <= 8"},
      [] {
        return std::vector<CheckResult>{check_spherical_methods(10, 8), check_spherical_table(8)};
      });

  run({7, "negative powers: <r^-2> oracle for n <= 8; reflection identity exact for p <= 2l-2"},
      [] {
        return std::vector<CheckResult>{check_negative_powers(8), check_marxer_reflection(8)};
      });

  run({8, "parabolic moments: recurrence = explicit for n <= 10, k <= 8; <r^0> = 1 for n <= 10"},
      [] {
        return std::vector<CheckResult>{check_xi_methods(10, 8), check_parabolic_normalization(10)};
      });

  run({9, "central identity: composition = basis change for n <= 8, p <= 4; parabolic rows"
          " k=1..3 and the 1/Z^4-corrected k=4 row exact, 1/Z^3 variant warned"},
      [] {
        return std::vector<CheckResult>{check_central_identity(8, 4), check_parabolic_table(8)};
      });

  run({10, "<L^2> four-way equality chain and <L^4> sum rule vs overlap sum for n <= 10,"
           " with the closed-form <L^4> discrepancy warned at n=2, q=1, m=0"},
      [] { return std::vector<CheckResult>{check_l2_chain(10), check_l4_sumrule(10)}; });

  run({11, "quasi-classical m=0 estimate within 25% of exact overlaps, middle-third l at n=40"
           " (soft: reported, non-fatal)",
       true},
      [] {
        return std::vector<CheckResult>{check_quasiclassical(40, 0.25, /*strict_pointwise=*/true)};
      });

  std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
