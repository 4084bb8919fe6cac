// Acceptance gate: one criterion per invocation (--only k) or all in
// sequence. Each criterion prints a single PASS/FAIL line; failures also
// print the discrepancy detail. The process exits nonzero when any executed
// criterion fails.

#include "ra/dsl.hpp"
#include "ra/report.hpp"

#include <cmath>
#include <complex>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace ra;
using cplx = std::complex<double>;

namespace {

double rel_err(cplx a, cplx b) {
  return std::abs(a - b) / std::max(1.0, std::abs(b));
}

// ---------------------------------------------------------------- 1
bool criterion_blades_vs_gammas() {
  for (int n : {4, 6}) {
    auto g = gamma_rep(n);
    const int N = 1 << (n / 2);
    const uint32_t words = 1u << n;
    // matrix image of every basis word, indices in increasing order
    std::vector<EMat> rep(words, EMat::ident(N));
    for (uint32_t w = 1; w < words; ++w) {
      EMat m = EMat::ident(N);
      for (int k = 0; k < n; ++k)
        if (w & (1u << k)) m = emat_mul(m, g[k]);
      rep[w] = m;
    }
    if (rep[0].trace() != ExactScalar(N)) {
      std::cout << "  trace normalization broken for n=" << n << "\n";
      return false;
    }
    for (uint32_t S = 0; S < words; ++S)
      for (uint32_t T = 0; T < words; ++T) {
        auto p = CliffordElem::basis(n, S) * CliffordElem::basis(n, T);
        // product of two words is a signed word
        uint32_t U = S ^ T;
        ExactScalar c = p.b.at(U).t.begin()->second;
        if (!(emat_mul(rep[S], rep[T]) == rep[U].scaled(c))) {
          std::cout << "  word product mismatch n=" << n << " S=" << S
                    << " T=" << T << "\n";
          return false;
        }
      }
  }
  return true;
}

// ---------------------------------------------------------------- 2
bool criterion_trace_formulas() {
  bool ok = true;
  for (const auto& t : trace_identity_checks()) {
    if (t.engine == t.expected) continue;
    ok = false;
    std::cout << "  exact mismatch in " << t.id << " (n=" << t.n << "): "
              << t.note << "\n";
  }
  // l = 8 numeric cross-check against the gamma-matrix oracle
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int trial = 0; trial < 100; ++trial) {
    int n = trial % 2 ? 4 : 6;
    std::vector<std::vector<ExactScalar>> vecs(8);
    std::vector<std::vector<Poly>> pvecs(8);
    for (int j = 0; j < 8; ++j)
      for (int k = 0; k < n; ++k) {
        int v = d(rng);
        vecs[j].push_back(ExactScalar(v));
        pvecs[j].push_back(Poly::constant(ExactScalar(v)));
      }
    Poly w = wick_trace(n, pvecs);
    cplx eng = w.is_zero() ? cplx(0) : w.t.begin()->second.to_complex();
    cplx orc = matrix_trace_oracle(n, vecs).to_complex();
    if (rel_err(eng, orc) > 1e-9) {
      std::cout << "  l=8 wick trace deviates from the matrix oracle (trial "
                << trial << ")\n";
      ok = false;
      break;
    }
  }
  return ok;
}

// shared table comparison
bool compare_rows(const std::vector<ReportEntry>& rows) {
  bool ok = true;
  for (const auto& e : rows)
    if (!e.exact_match) {
      ok = false;
      std::cout << "  mismatch: " << e.setting << " l=" << e.l << " "
                << e.item << "\n    engine:    " << e.computed
                << "\n    reference: " << e.expected << "\n";
      if (!e.note.empty()) std::cout << "    note: " << e.note << "\n";
    }
  return ok;
}

// ---------------------------------------------------------------- 3
bool criterion_interior() {
  auto exp = ReferenceTables::standard();
  bool ok = true;
  for (Setting st : {Setting::Dim4, Setting::Dim6}) {
    ok &= compare_rows(verify_interior(st, exp, nullptr));
    ok &= compare_rows(closed_report(st, exp));
    // odd l: the super-residue vanishes
    for (int l = 1; l <= setting_dim(st); l += 2)
      if (!interior_term(st, l).is_zero()) {
        std::cout << "  odd-l interior term is nonzero\n";
        ok = false;
      }
  }
  return ok;
}

// ---------------------------------------------------------------- 4, 5
bool criterion_boundary(Setting st) {
  auto exp = ReferenceTables::standard();
  bool ok = compare_rows(verify_boundary(st, exp, nullptr));
  for (int l = 1; l <= setting_dim(st); l += 2)
    if (!boundary_total(st, l).is_zero()) {
      std::cout << "  odd-l boundary total is nonzero\n";
      ok = false;
    }
  return ok;
}

// ---------------------------------------------------------------- 6
bool criterion_checkpoints() {
  OracleConfig cfg;
  bool ok = true;
  for (const auto& e : checkpoint_report(&cfg)) {
    if (e.exact_match) {
      std::cout << "  agree: " << e.item << "\n";
      continue;
    }
    // a transcription divergence is tolerated only when it is surfaced and
    // the independent quadrature certifies the engine side
    bool adjudicated =
        e.note.find("sides with the engine value") != std::string::npos;
    std::cout << "  DISCREPANCY " << e.item << ": engine and reference differ"
              << "\n    engine:    " << e.computed
              << "\n    reference: " << e.expected << "\n    " << e.note
              << "\n";
    if (e.has_oracle)
      std::cout << "    quadrature " << e.oracle_engine << " vs reference "
                << e.oracle_expected << "\n";
    if (!adjudicated) {
      std::cout << "    -> not resolved in the engine's favor\n";
      ok = false;
    }
  }
  return ok;
}

// ---------------------------------------------------------------- 7
bool criterion_symbol_inverse() {
  std::string detail;
  if (verify_symbol_inverse(4, &detail)) return true;
  std::cout << "  " << detail << "\n";
  return false;
}

// ---------------------------------------------------------------- 8
bool criterion_pole_projection() {
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<int> coef(-4, 4), pole(0, 3);
  const int n = 4;
  for (int trial = 0; trial < 200; ++trial) {
    int p = pole(rng), q = pole(rng);
    if (p + q == 0) p = 1;
    std::vector<Poly> num;
    for (int k = 0; k < p + q; ++k)
      num.push_back(Poly::constant(ExactScalar(
          Rational(coef(rng)), Rational(coef(rng)))));
    auto s = make_scalar_symbol(n, p, q, num);
    auto plus = pi_plus(s), minus = pi_minus(s);
    if (!symbol_equal(symbol_add(plus, minus), s) ||
        !symbol_equal(pi_plus(plus), plus) ||
        !symbol_equal(pi_minus(minus), minus)) {
      std::cout << "  projection splitting failed on trial " << trial << "\n";
      return false;
    }
  }
  OracleConfig cfg;
  const std::map<AtomId, cplx> pival = {{kPi, cplx(M_PI, 0)}};
  std::uniform_int_distribution<int> dpole(1, 3);
  for (int trial = 0; trial < 100; ++trial) {
    int p = dpole(rng), q = dpole(rng);
    std::vector<Poly> num;
    for (int k = 0; k <= p + q - 2; ++k)
      num.push_back(Poly::constant(ExactScalar(
          Rational(coef(rng)), Rational(coef(rng)))));
    auto s = make_scalar_symbol(n, p, q, num);
    cplx exact = poly_eval_numeric(integrate_gamma_plus(s), pival);
    cplx quad = numeric_contour(
        [&](cplx z) {
          cplx acc = 0, zp = 1;
          for (const auto& c : s.num) {
            acc += c.b.count(0u)
                       ? poly_eval_numeric(c.b.at(0u), pival) * zp
                       : cplx(0);
            zp *= z;
          }
          const cplx i(0, 1);
          return acc / (std::pow(z - i, s.p) * std::pow(z + i, s.q));
        },
        cfg);
    if (rel_err(quad, exact) > 1e-9) {
      std::cout << "  residue quadrature deviates on trial " << trial << "\n";
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------- 9
bool criterion_oracle_end_to_end() {
  OracleConfig cfg;
  std::mt19937_64 rng(cfg.seed);
  double worst = 0;
  for (Setting st : {Setting::Dim4, Setting::Dim6}) {
    const int n = setting_dim(st);
    for (int l = 2; l <= n; l += 2)
      for (int t = 0; t < cfg.trials; ++t) {
        auto asg = random_assignment(n, l, rng);
        auto vals = assignment_atom_values(asg);
        for (const auto& cs : enumerate_cases(st)) {
          cplx num = oracle_boundary_case(st, l, cs.id, asg, cfg);
          cplx exact = poly_eval_numeric(boundary_case(st, l, cs.id), vals);
          double r = rel_err(num, exact);
          worst = std::max(worst, r);
          if (r > 1e-6) {
            std::cout << "  dim" << n << " l=" << l << " "
                      << case_name(cs.id) << " trial " << t
                      << ": relative deviation " << r << "\n";
            return false;
          }
        }
      }
  }
  std::cout << "  worst relative deviation " << worst << "\n";
  return true;
}

// ---------------------------------------------------------------- 10
bool criterion_negative_control() {
  std::string out_file = "acceptance_cli_out.txt";
  std::string cmd = std::string(RESIDUE_AUDIT_BIN) +
                    " verify --dim 4 --expected-table " + FIXTURE_DIR +
                    "/corrupted_expected.json > " + out_file + " 2>&1";
  int rc = std::system(cmd.c_str());
  int code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  std::ifstream f(out_file);
  std::stringstream ss;
  ss << f.rdbuf();
  std::remove(out_file.c_str());
  std::string out = ss.str();
  if (code != 1) {
    std::cout << "  expected exit 1, got " << code << "\n";
    return false;
  }
  if (out.find("aIII") == std::string::npos ||
      out.find("sides with the engine value") == std::string::npos) {
    std::cout << "  discrepancy report missing the engine adjudication\n";
    return false;
  }
  return true;
}

struct Criterion {
  const char* desc;
  bool (*fn)();
};

bool run_boundary_4() { return criterion_boundary(Setting::Dim4); }
bool run_boundary_6() { return criterion_boundary(Setting::Dim6); }

const Criterion kCriteria[10] = {
    {"Clifford algebra matches the gamma representation on all basis words",
     criterion_blades_vs_gammas},
    {"trace contraction formulas exact; l=8 numeric cross-check",
     criterion_trace_formulas},
    {"interior and closed-manifold terms match the reference tables",
     criterion_interior},
    {"4-dimensional boundary table matches the reference exactly",
     run_boundary_4},
    {"6-dimensional boundary table matches the reference exactly",
     run_boundary_6},
    {"intermediate checkpoints agree or are adjudicated to the engine",
     criterion_checkpoints},
    {"symbol-inverse composition identities hold exactly",
     criterion_symbol_inverse},
    {"pole projection splits exactly; residues match quadrature",
     criterion_pole_projection},
    {"numeric oracle matches symbolic evaluation on every boundary case",
     criterion_oracle_end_to_end},
    {"corrupted reference table detected and pinned on the reference",
     criterion_negative_control},
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i)
    if (!std::strcmp(argv[i], "--only") && i + 1 < argc) only = std::atoi(argv[++i]);
  if (only < 0 || only > 10) {
    std::cerr << "usage: acceptance [--only 1..10]\n";
    return 2;
  }
  bool all_ok = true;
  for (int k = 1; k <= 10; ++k) {
    if (only && k != only) continue;
    bool ok = kCriteria[k - 1].fn();
    std::cout << "CRITERION " << k << " " << (ok ? "PASS" : "FAIL") << " - "
              << kCriteria[k - 1].desc << "\n";
    all_ok &= ok;
  }
  return all_ok ? 0 : 1;
}
