// amsum: exact Wigner 3jm / 6j / Clebsch-Gordan coefficients, the
// [j(j+1)]^k-weighted sum rules, and hydrogenic <r^p> expectation values in
// spherical and parabolic coordinates, with exact-fraction output and a
// batch verification mode. Exit codes: 0 success, 1 verification mismatch,
// 2 usage or domain error.

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <iostream>
#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "amsum/hydrogenic.hpp"
#include "amsum/output_record.hpp"
#include "amsum/sumrule.hpp"
#include "amsum/verify.hpp"
#include "amsum/wigner.hpp"

namespace {

using namespace amsum;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

bool g_json = false;

void emit(const OutputRecord& record) {
  std::cout << (g_json ? record.to_json() : record.to_text()) << "\n";
}

OutputRecord wigner_record(const std::string& op, const std::vector<std::string>& names,
                           const std::vector<std::string>& tokens, const SqrtRational& value) {
  OutputRecord record;
  record.op = op;
  for (std::size_t i = 0; i < names.size(); ++i)
    record.args.emplace_back(names[i], HalfInt::parse(tokens[i]).to_string());
  record.value = value.to_string();
  return record;
}

int run_3j(const std::vector<std::string>& tokens) {
  HalfInt v[6];
  for (int i = 0; i < 6; ++i) v[i] = HalfInt::parse(tokens[static_cast<std::size_t>(i)]);
  SqrtRational value = wigner_3jm(v[0], v[1], v[2], v[3], v[4], v[5]);
  emit(wigner_record("3j", {"j1", "j2", "j3", "m1", "m2", "m3"}, tokens, value));
  return kExitOk;
}

int run_6j(const std::vector<std::string>& tokens) {
  HalfInt v[6];
  for (int i = 0; i < 6; ++i) v[i] = HalfInt::parse(tokens[static_cast<std::size_t>(i)]);
  SqrtRational value = wigner_6j(v[0], v[1], v[2], v[3], v[4], v[5]);
  emit(wigner_record("6j", {"j1", "j2", "j3", "j4", "j5", "j6"}, tokens, value));
  return kExitOk;
}

int run_cg(const std::vector<std::string>& tokens) {
  HalfInt v[6];
  for (int i = 0; i < 6; ++i) v[i] = HalfInt::parse(tokens[static_cast<std::size_t>(i)]);
  SqrtRational value = clebsch_gordan(v[0], v[1], v[2], v[3], v[4], v[5]);
  emit(wigner_record("cg", {"j1", "m1", "j2", "m2", "j", "m"}, tokens, value));
  return kExitOk;
}

int run_sumrule(long k, const std::vector<std::string>& tokens, const std::string& method) {
  SumRuleQuery q{k, HalfInt::parse(tokens[0]), HalfInt::parse(tokens[1]),
                 HalfInt::parse(tokens[2]), HalfInt::parse(tokens[3])};
  q.validate();

  OutputRecord record;
  record.op = "sumrule";
  record.args = {{"k", std::to_string(k)},
                 {"j1", q.j1.to_string()},
                 {"m1", q.m1.to_string()},
                 {"j2", q.j2.to_string()},
                 {"m2", q.m2.to_string()},
                 {"method", method}};

  auto evaluate = [&](const std::string& name) -> Rational {
    if (name == "operator") return sumrule_operator(q);
    if (name == "bruteforce") return sumrule_bruteforce(q);
    if (name == "permutation") return sumrule_permutation(q);
    return sumrule_closed(k, q.j1, q.m1, q.j2, q.m2);
  };

  if (method != "all") {
    record.value = evaluate(method).to_string();
    emit(record);
    return kExitOk;
  }

  std::vector<std::string> names = {"operator", "bruteforce"};
  if (k <= kPermutationWordCap) names.push_back("permutation");
  if (k >= 1 && k <= 3) names.push_back("closed");
  bool consistent = true;
  Rational reference;
  for (std::size_t i = 0; i < names.size(); ++i) {
    Rational value = evaluate(names[i]);
    if (i == 0)
      reference = value;
    else
      consistent = consistent && value == reference;
    record.methods.emplace_back(names[i], value.to_string());
  }
  record.value = reference.to_string();
  record.verdict = consistent ? "ok" : "mismatch";
  emit(record);
  return consistent ? kExitOk : kExitMismatch;
}

int run_expval_spherical(int n, int l, const std::string& z_text, int p, bool negative,
                         const std::string& method) {
  SphericalOrbital orb(n, l);
  Charge z(Rational::parse(z_text));
  OutputRecord record;
  record.op = "expval";
  record.args = {{"coords", "spherical"}, {"n", std::to_string(n)}, {"l", std::to_string(l)},
                 {"Z", z.z.to_string()},  {"p", std::to_string(p)}};

  if (negative) {
    record.args.emplace_back("power", "-(p+2)");
    record.value = expval_spherical_negative(orb, z, p).to_string();
    emit(record);
    return kExitOk;
  }

  record.args.emplace_back("method", method);
  if (method != "both") {
    Method route = method == "explicit" ? Method::kExplicit : Method::kRecurrence;
    record.value = expval_spherical(orb, z, p, route).to_string();
    emit(record);
    return kExitOk;
  }
  Rational rec = expval_spherical(orb, z, p, Method::kRecurrence);
  Rational exp = expval_spherical(orb, z, p, Method::kExplicit);
  record.methods = {{"recurrence", rec.to_string()}, {"explicit", exp.to_string()}};
  record.value = rec.to_string();
  record.verdict = rec == exp ? "ok" : "mismatch";
  emit(record);
  return rec == exp ? kExitOk : kExitMismatch;
}

int run_expval_parabolic(const ParabolicOrbital& orb, const std::string& z_text, int p,
                         const std::string& method) {
  Charge z(Rational::parse(z_text));
  OutputRecord record;
  record.op = "expval";
  record.args = {{"coords", "parabolic"},       {"n", std::to_string(orb.n)},
                 {"n1", std::to_string(orb.n1)}, {"n2", std::to_string(orb.n2)},
                 {"m", std::to_string(orb.m)},   {"q", std::to_string(orb.q())},
                 {"Z", z.z.to_string()},         {"p", std::to_string(p)},
                 {"method", method}};

  if (method != "both") {
    Rational value = method == "basis" ? expval_parabolic_via_basis_change(orb, z, p)
                                       : expval_parabolic(orb, z, p);
    record.value = value.to_string();
    emit(record);
    return kExitOk;
  }
  Rational composed = expval_parabolic(orb, z, p);
  Rational basis = expval_parabolic_via_basis_change(orb, z, p);
  record.methods = {{"composition", composed.to_string()}, {"basis", basis.to_string()}};
  record.value = composed.to_string();
  record.verdict = composed == basis ? "ok" : "mismatch";
  emit(record);
  return composed == basis ? kExitOk : kExitMismatch;
}

void print_report(std::ostream& os, const SuiteReport& report) {
  constexpr std::size_t kMaxShown = 5;
  os << "suite " << report.suite << "\n";
  for (const CheckResult& check : report.checks) {
    os << "  " << check.name << ": " << check.cases << " cases, " << check.failures.size()
       << " failures\n";
    std::size_t shown = 0;
    for (const std::string& failure : check.failures) {
      if (shown++ == kMaxShown) {
        os << "    ... " << check.failures.size() - kMaxShown << " more\n";
        break;
      }
      os << "    FAIL: " << failure << "\n";
    }
    for (const std::string& warning : check.warnings) os << "    WARN: " << warning << "\n";
  }
  os << "suite " << report.suite << ": " << (report.passed() ? "PASS" : "FAIL") << " ("
     << report.checks.size() << " checks, " << report.total_cases() << " cases, "
     << report.total_warnings() << " warnings)\n";
}

void print_report_json(std::ostream& os, const SuiteReport& report) {
  for (const CheckResult& check : report.checks) {
    nlohmann::json line;
    line["op"] = "verify";
    line["args"] = {{"suite", report.suite}, {"check", check.name}};
    line["value"] = check.passed() ? "pass" : "fail";
    line["cases"] = check.cases;
    line["failures"] = check.failures;
    line["warnings"] = check.warnings;
    os << line.dump() << "\n";
  }
}

int run_verify(const std::string& suite, std::optional<std::string> max_j_text,
               std::optional<int> max_n, std::optional<long> max_k,
               const std::string& out_path) {
  WignerVerifyOptions wigner_options;
  SumRuleVerifyOptions sumrule_options;
  HydrogenicVerifyOptions hydrogenic_options;
  if (max_j_text) {
    HalfInt j = HalfInt::parse(*max_j_text);
    if (j < HalfInt(0)) throw CLI::ValidationError("--max-j must be nonnegative");
    wigner_options.symmetry_max_j = j;
    wigner_options.orthogonality_max_j = j;
    wigner_options.oracle_max_a = j;
    sumrule_options.closed_max_j = j;
    sumrule_options.general_max_j = j;
    sumrule_options.zero_projection_max = j;
  }
  if (max_n) {
    if (*max_n < 1) throw CLI::ValidationError("--max-n must be positive");
    wigner_options.regge_max_n = *max_n;
    hydrogenic_options.max_n = *max_n;
    hydrogenic_options.deep_max_n = *max_n;
  }
  if (max_k) {
    if (*max_k < 0) throw CLI::ValidationError("--max-k must be nonnegative");
    sumrule_options.general_max_k = *max_k;
    sumrule_options.permutation_max_k = std::min(*max_k, sumrule_options.permutation_max_k);
    sumrule_options.stretched_max_k = *max_k;
  }

  std::vector<SuiteReport> reports;
  if (suite == "wigner" || suite == "all") reports.push_back(verify_wigner(wigner_options));
  if (suite == "sumrules" || suite == "all") reports.push_back(verify_sumrules(sumrule_options));
  if (suite == "hydrogenic" || suite == "all")
    reports.push_back(verify_hydrogenic(hydrogenic_options));

  bool all_passed = true;
  std::ostringstream text;
  for (const SuiteReport& report : reports) {
    all_passed = all_passed && report.passed();
    if (g_json)
      print_report_json(std::cout, report);
    else
      print_report(std::cout, report);
    print_report(text, report);
  }
  if (!g_json) std::cout << "overall: " << (all_passed ? "PASS" : "FAIL") << "\n";
  text << "overall: " << (all_passed ? "PASS" : "FAIL") << "\n";

  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open report file: " + out_path);
    out << text.str();
  }
  return all_passed ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact angular-momentum sum rules and hydrogenic expectation values"};
  app.require_subcommand(1);
  app.add_flag("--json", g_json, "emit newline-delimited JSON objects");
  app.set_help_all_flag("--help-all", "print help for every subcommand");

  std::function<int()> action;

  // momenta and projections are exact half-integers: "k" or "k/2"
  static const std::string kHalfIntHint = "HALFINT";

  auto* threej = app.add_subcommand("3j", "Wigner 3jm symbol");
  threej->fallthrough();
  auto threej_tokens = std::make_shared<std::vector<std::string>>();
  threej->add_option("args", *threej_tokens, "j1 j2 j3 m1 m2 m3")
      ->required()
      ->expected(6)
      ->type_name(kHalfIntHint);
  threej->callback([threej_tokens, &action] { action = [threej_tokens] { return run_3j(*threej_tokens); }; });

  auto* sixj = app.add_subcommand("6j", "Wigner 6j symbol");
  sixj->fallthrough();
  auto sixj_tokens = std::make_shared<std::vector<std::string>>();
  sixj->add_option("args", *sixj_tokens, "j1 j2 j3 j4 j5 j6")
      ->required()
      ->expected(6)
      ->type_name(kHalfIntHint);
  sixj->callback([sixj_tokens, &action] { action = [sixj_tokens] { return run_6j(*sixj_tokens); }; });

  auto* cg = app.add_subcommand("cg", "Clebsch-Gordan coefficient <j m|j1 m1 j2 m2>");
  cg->fallthrough();
  auto cg_tokens = std::make_shared<std::vector<std::string>>();
  cg->add_option("args", *cg_tokens, "j1 m1 j2 m2 j m")
      ->required()
      ->expected(6)
      ->type_name(kHalfIntHint);
  cg->callback([cg_tokens, &action] { action = [cg_tokens] { return run_cg(*cg_tokens); }; });

  auto* sumrule = app.add_subcommand("sumrule", "S_k = sum (2j+1) [j(j+1)]^k 3j(...)^2");
  sumrule->fallthrough();
  auto sumrule_k = std::make_shared<long>(0);
  auto sumrule_tokens = std::make_shared<std::vector<std::string>>();
  auto sumrule_method = std::make_shared<std::string>("operator");
  sumrule->add_option("k", *sumrule_k, "power of j(j+1)")->required();
  sumrule->add_option("args", *sumrule_tokens, "j1 m1 j2 m2")
      ->required()
      ->expected(4)
      ->type_name(kHalfIntHint);
  sumrule->add_option("--method", *sumrule_method, "evaluation route")
      ->check(CLI::IsMember({"operator", "closed", "bruteforce", "permutation", "all"}))
      ->capture_default_str();
  sumrule->callback([sumrule_k, sumrule_tokens, sumrule_method, &action] {
    action = [sumrule_k, sumrule_tokens, sumrule_method] {
      if (*sumrule_method == "closed" && (*sumrule_k < 1 || *sumrule_k > 3))
        throw CLI::ValidationError("--method closed requires k in {1, 2, 3}");
      return run_sumrule(*sumrule_k, *sumrule_tokens, *sumrule_method);
    };
  });

  auto* expval = app.add_subcommand("expval", "hydrogenic <r^p> expectation values");
  expval->require_subcommand(1);
  expval->fallthrough();

  auto* spherical = expval->add_subcommand("spherical", "<n l| r^p |n l>");
  spherical->fallthrough();
  auto sph_n = std::make_shared<int>(1);
  auto sph_l = std::make_shared<int>(0);
  auto sph_z = std::make_shared<std::string>("1");
  auto sph_p = std::make_shared<int>(1);
  auto sph_negative = std::make_shared<bool>(false);
  auto sph_method = std::make_shared<std::string>("recurrence");
  spherical->add_option("n", *sph_n, "principal quantum number")->required();
  spherical->add_option("l", *sph_l, "orbital quantum number")->required();
  spherical->add_option("--Z", *sph_z, "nuclear charge (exact rational)")->capture_default_str();
  spherical->add_option("--p", *sph_p, "power of r")->capture_default_str();
  spherical->add_flag("--negative", *sph_negative, "compute <r^(-p-2)> instead of <r^p>");
  spherical->add_option("--method", *sph_method, "evaluation route")
      ->check(CLI::IsMember({"recurrence", "explicit", "both"}))
      ->capture_default_str();
  spherical->callback([sph_n, sph_l, sph_z, sph_p, sph_negative, sph_method, &action] {
    action = [sph_n, sph_l, sph_z, sph_p, sph_negative, sph_method] {
      return run_expval_spherical(*sph_n, *sph_l, *sph_z, *sph_p, *sph_negative, *sph_method);
    };
  });

  auto* parabolic = expval->add_subcommand("parabolic", "<n q m| r^p |n q m>");
  parabolic->fallthrough();
  auto par_n = std::make_shared<int>(1);
  auto par_n1 = std::make_shared<std::optional<int>>();
  auto par_n2 = std::make_shared<std::optional<int>>();
  auto par_q = std::make_shared<std::optional<int>>();
  auto par_m = std::make_shared<int>(0);
  auto par_z = std::make_shared<std::string>("1");
  auto par_p = std::make_shared<int>(1);
  auto par_method = std::make_shared<std::string>("composition");
  parabolic->add_option("--n", *par_n, "principal quantum number")->required();
  parabolic->add_option("--n1", *par_n1, "first parabolic quantum number");
  parabolic->add_option("--n2", *par_n2, "second parabolic quantum number");
  parabolic->add_option("--q", *par_q, "electric quantum number n1 - n2");
  parabolic->add_option("--m", *par_m, "magnetic quantum number (signed)")->capture_default_str();
  parabolic->add_option("--Z", *par_z, "nuclear charge (exact rational)")->capture_default_str();
  parabolic->add_option("--p", *par_p, "power of r")->capture_default_str();
  parabolic->add_option("--method", *par_method, "evaluation route")
      ->check(CLI::IsMember({"composition", "basis", "both"}))
      ->capture_default_str();
  parabolic->callback([par_n, par_n1, par_n2, par_q, par_m, par_z, par_p, par_method, &action] {
    action = [par_n, par_n1, par_n2, par_q, par_m, par_z, par_p, par_method] {
      ParabolicOrbital orb = [&] {
        if (par_q->has_value()) {
          if (par_n1->has_value() || par_n2->has_value())
            throw CLI::ValidationError("give either --q or --n1/--n2, not both");
          return ParabolicOrbital::from_electric(*par_n, **par_q, *par_m);
        }
        if (!par_n1->has_value() || !par_n2->has_value())
          throw CLI::ValidationError("give --n1 and --n2 together, or --q");
        return ParabolicOrbital(*par_n, **par_n1, **par_n2, *par_m);
      }();
      return run_expval_parabolic(orb, *par_z, *par_p, *par_method);
    };
  });

  auto* verify = app.add_subcommand("verify", "run the identity suites");
  verify->fallthrough();
  auto verify_suite = std::make_shared<std::string>("all");
  auto verify_max_j = std::make_shared<std::string>();
  auto verify_max_n = std::make_shared<int>(-1);
  auto verify_max_k = std::make_shared<long>(-1);
  auto verify_out = std::make_shared<std::string>();
  verify->add_option("--suite", *verify_suite, "which suite to run")
      ->check(CLI::IsMember({"sumrules", "wigner", "hydrogenic", "all"}))
      ->capture_default_str();
  verify->add_option("--max-j", *verify_max_j, "cap on every momentum grid")
      ->type_name(kHalfIntHint);
  verify->add_option("--max-n", *verify_max_n, "cap on principal quantum numbers");
  verify->add_option("--max-k", *verify_max_k, "cap on sum-rule powers");
  verify->add_option("--out", *verify_out, "also write the text report to this path");
  verify->callback([verify_suite, verify_max_j, verify_max_n, verify_max_k, verify_out, &action] {
    action = [verify_suite, verify_max_j, verify_max_n, verify_max_k, verify_out] {
      std::optional<std::string> j =
          verify_max_j->empty() ? std::nullopt : std::make_optional(*verify_max_j);
      std::optional<int> n = *verify_max_n < 0 ? std::nullopt : std::make_optional(*verify_max_n);
      std::optional<long> k =
          *verify_max_k < 0 ? std::nullopt : std::make_optional(*verify_max_k);
      return run_verify(*verify_suite, j, n, k, *verify_out);
    };
  });

  try {
    app.parse(argc, argv);
    return action ? action() : kExitOk;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitUsage;
  }
}
