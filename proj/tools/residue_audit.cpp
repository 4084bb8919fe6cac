// residue-audit: exact verification of generalized-residue computations for
// Dirac-type operators, with an independent numeric cross-check.
//
// Exit codes: 0 everything consistent, 1 honest mismatch against the
// reference tables, 2 usage error, 3 internal inconsistency (the quadrature
// contradicts the exact engine).

#include "CLI11.hpp"
#include "ra/dsl.hpp"
#include "ra/report.hpp"

#include <complex>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

namespace {

struct Options {
  int dim = 0;  // 0 = both
  int l = 0;    // 0 = all
  std::string case_name;
  std::string expr;   // symbol expression for eval
  std::string table;  // JSON override for the reference tables
  bool json = false;
  bool latex = false;
  uint64_t seed = 1;
  int trials = 20;
  double tol = 1e-6;
  int contour_samples = 4096;
};

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--dim", o.dim, "restrict to one dimension (4 or 6)")
      ->check(CLI::IsMember({4, 6}));
  cmd->add_option("--seed", o.seed, "RNG seed for the numeric cross-check");
  cmd->add_option("--tol", o.tol, "numeric agreement tolerance (relative)");
  cmd->add_option("--contour-samples", o.contour_samples,
                  "trapezoid nodes on the outer contour");
  cmd->add_flag("--json", o.json, "emit the report as JSON");
  cmd->add_flag("--latex", o.latex, "emit the report as a LaTeX table");
}

ra::OracleConfig oracle_config(const Options& o) {
  ra::OracleConfig cfg;
  cfg.seed = o.seed;
  cfg.trials = o.trials;
  cfg.contour_samples = o.contour_samples;
  cfg.tol = o.tol;
  return cfg;
}

ra::ReferenceTables load_expected(const Options& o) {
  auto exp = ra::ReferenceTables::standard();
  if (!o.table.empty()) exp.apply_overrides(o.table);
  return exp;
}

std::vector<ra::Setting> settings_of(const Options& o) {
  if (o.dim == 4) return {ra::Setting::Dim4};
  if (o.dim == 6) return {ra::Setting::Dim6};
  return {ra::Setting::Dim4, ra::Setting::Dim6};
}

int emit(const std::vector<ra::ReportEntry>& rows, const Options& o) {
  if (o.json)
    std::cout << ra::report_to_json(rows);
  else if (o.latex)
    std::cout << ra::report_to_latex(rows);
  else
    std::cout << ra::report_to_text(rows);
  return ra::report_exit_code(rows, o.tol);
}

int run_verify(const Options& o) {
  auto exp = load_expected(o);
  auto cfg = oracle_config(o);
  std::vector<ra::ReportEntry> rows;
  for (auto st : settings_of(o)) {
    auto b = ra::verify_boundary(st, exp, &cfg);
    rows.insert(rows.end(), b.begin(), b.end());
  }
  return emit(rows, o);
}

int run_interior(const Options& o) {
  auto exp = load_expected(o);
  auto cfg = oracle_config(o);
  std::vector<ra::ReportEntry> rows;
  for (auto st : settings_of(o)) {
    auto i = ra::verify_interior(st, exp, &cfg);
    rows.insert(rows.end(), i.begin(), i.end());
    auto c = ra::closed_report(st, exp);
    rows.insert(rows.end(), c.begin(), c.end());
  }
  return emit(rows, o);
}

int run_trace(const Options& o) {
  auto cfg = oracle_config(o);
  auto rows = ra::identity_report();
  auto cps = ra::checkpoint_report(&cfg);
  rows.insert(rows.end(), cps.begin(), cps.end());
  return emit(rows, o);
}

int run_eval(const Options& o) {
  if (!o.expr.empty()) {
    int n = o.dim == 0 ? 4 : o.dim;
    int l = o.l == 0 ? 2 : o.l;
    try {
      std::cout << ra::symbol_to_string(ra::parse_symbol(o.expr, n, l)) << "\n";
    } catch (const ra::SymbolError& e) {
      std::cerr << "bad expression: " << e.what() << "\n";
      return 2;
    }
    return 0;
  }
  if (o.dim == 0 || o.l == 0) {
    std::cerr << "eval needs --dim and --l (or --expr)\n";
    return 2;
  }
  auto st = ra::setting_from_dim(o.dim);
  ra::Poly v;
  std::string what = o.case_name.empty() ? "total" : o.case_name;
  if (what == "total") {
    v = ra::boundary_total(st, o.l);
  } else if (what == "interior") {
    v = ra::interior_term(st, o.l);
  } else if (auto c = ra::case_from_name(what)) {
    v = ra::boundary_case(st, o.l, *c);
  } else {
    std::cerr << "unknown case '" << what
              << "' (aI, aII, aIII, b, c, total, interior)\n";
    return 2;
  }
  std::cout << "dim" << o.dim << " l=" << o.l << " " << what << ":\n"
            << ra::poly_to_string(v) << "\n";
  return 0;
}

int run_oracle(const Options& o) {
  auto cfg = oracle_config(o);
  std::mt19937_64 rng(cfg.seed);
  double worst = 0.0;
  std::string worst_at;
  int checked = 0;
  for (auto st : settings_of(o)) {
    const int n = ra::setting_dim(st);
    for (int l = 1; l <= n; ++l) {
      if (o.l != 0 && l != o.l) continue;
      for (int t = 0; t < cfg.trials; ++t) {
        auto asg = ra::random_assignment(n, l, rng);
        auto vals = ra::assignment_atom_values(asg);
        auto check = [&](const std::string& item, std::complex<double> num,
                         std::complex<double> exact) {
          double scale = std::max(1.0, std::abs(exact));
          double rel = std::abs(num - exact) / scale;
          ++checked;
          if (rel > worst) {
            worst = rel;
            worst_at = "dim" + std::to_string(n) + " l=" + std::to_string(l) +
                       " " + item;
          }
        };
        for (const auto& cs : ra::enumerate_cases(st)) {
          std::string name = ra::case_name(cs.id);
          if (!o.case_name.empty() && name != o.case_name) continue;
          check(name, ra::oracle_boundary_case(st, l, cs.id, asg, cfg),
                ra::poly_eval_numeric(ra::boundary_case(st, l, cs.id), vals));
        }
        if (o.case_name.empty() || o.case_name == "interior")
          check("interior", ra::oracle_interior(st, l, asg),
                ra::poly_eval_numeric(ra::interior_term(st, l), vals));
      }
    }
  }
  std::printf("%d oracle evaluations, worst relative deviation %.3e (%s)\n",
              checked, worst, worst_at.c_str());
  if (worst > o.tol) {
    std::cout << "quadrature contradicts the exact engine\n";
    return 3;
  }
  std::cout << "quadrature agrees with the exact engine\n";
  return 0;
}

int run_report(const Options& o) {
  auto exp = load_expected(o);
  auto cfg = oracle_config(o);
  return emit(ra::full_report(exp, &cfg), o);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "residue-audit: exact verifier for generalized residue computations"};
  app.require_subcommand(1);
  Options o;

  auto* verify =
      app.add_subcommand("verify", "boundary tables vs the reference");
  add_common(verify, o);
  verify->add_option("--expected-table", o.table,
                     "JSON file overriding reference entries")
      ->check(CLI::ExistingFile);

  auto* interior =
      app.add_subcommand("interior", "interior and closed-manifold terms");
  add_common(interior, o);
  interior
      ->add_option("--expected-table", o.table,
                   "JSON file overriding reference entries")
      ->check(CLI::ExistingFile);

  auto* trace = app.add_subcommand(
      "trace", "Clifford trace identities and intermediate checkpoints");
  add_common(trace, o);

  auto* eval =
      app.add_subcommand("eval", "print one exact engine value");
  add_common(eval, o);
  eval->add_option("--l", o.l, "number of Clifford factors");
  eval->add_option("--case", o.case_name,
                   "aI, aII, aIII, b, c, total or interior");
  eval->add_option("--expr", o.expr,
                   "symbol expression, e.g. 'res(tr(pip(c(xi)/|xi|^2)))'");

  auto* oracle = app.add_subcommand(
      "oracle", "numeric cross-check of the exact engine");
  add_common(oracle, o);
  oracle->add_option("--l", o.l, "restrict to one l");
  oracle->add_option("--case", o.case_name, "restrict to one case");
  oracle->add_option("--trials", o.trials, "random assignments per term");

  auto* report = app.add_subcommand("report", "everything, with adjudication");
  add_common(report, o);
  report
      ->add_option("--expected-table", o.table,
                   "JSON file overriding reference entries")
      ->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (verify->parsed()) return run_verify(o);
    if (interior->parsed()) return run_interior(o);
    if (trace->parsed()) return run_trace(o);
    if (eval->parsed()) return run_eval(o);
    if (oracle->parsed()) return run_oracle(o);
    if (report->parsed()) return run_report(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
