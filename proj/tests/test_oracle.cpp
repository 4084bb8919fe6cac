#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ra/oracle.hpp"

#include <cmath>

using namespace ra;

namespace {

double rel_err(std::complex<double> a, std::complex<double> b) {
  return std::abs(a - b) / std::max(1.0, std::abs(b));
}

}  // namespace

TEST_CASE("sphere volumes") {
  CHECK(sphere_volume(2) == doctest::Approx(2 * M_PI));
  CHECK(sphere_volume(3) == doctest::Approx(4 * M_PI));
  CHECK(sphere_volume(5) == doctest::Approx(8 * M_PI * M_PI / 3));
}

TEST_CASE("contour quadrature reproduces residues") {
  OracleConfig cfg;
  const std::complex<double> i(0, 1);
  // f = 1/(z - i): integral = 2 pi i
  auto v = numeric_contour([&](std::complex<double> z) { return 1.0 / (z - i); },
                           cfg);
  CHECK(rel_err(v, 2.0 * M_PI * i) < 1e-12);
  // second-order pole of z^3/(z-i)^2: residue is 3 i^2 = -3
  auto w = numeric_contour(
      [&](std::complex<double> z) { return z * z * z / ((z - i) * (z - i)); },
      cfg);
  CHECK(rel_err(w, 2.0 * M_PI * i * (-3.0)) < 1e-12);
  // holomorphic inside: zero
  auto u = numeric_contour([](std::complex<double> z) { return z * z; }, cfg);
  CHECK(std::abs(u) < 1e-12);
}

TEST_CASE("assignment atom values carry the transcendental factors") {
  std::mt19937_64 rng(3);
  auto asg = random_assignment(4, 2, rng);
  auto vals = assignment_atom_values(asg);
  CHECK(vals.at(kPi).real() == doctest::Approx(M_PI));
  CHECK(vals.at(kOmega).real() == doctest::Approx(sphere_volume(3)));
  CHECK(vals.at(kHPrime).real() == doctest::Approx(asg.hp));
  CHECK(vals.at(atom_a(1, 2)).real() == doctest::Approx(asg.a[0][1]));
  CHECK(vals.at(atom_da(2, 1)).real() == doctest::Approx(asg.da[1][0]));
}

TEST_CASE("oracle matches the exact engine on boundary cases") {
  OracleConfig cfg;
  std::mt19937_64 rng(17);
  for (Setting st : {Setting::Dim4, Setting::Dim6}) {
    const int n = setting_dim(st);
    for (int l : {2, n}) {
      auto asg = random_assignment(n, l, rng);
      auto vals = assignment_atom_values(asg);
      for (const auto& cs : enumerate_cases(st)) {
        auto num = oracle_boundary_case(st, l, cs.id, asg, cfg);
        auto exact = poly_eval_numeric(boundary_case(st, l, cs.id), vals);
        INFO("dim " << n << " l=" << l << " " << case_name(cs.id));
        CHECK(rel_err(num, exact) < 1e-7);
      }
    }
  }
}

TEST_CASE("oracle vanishes where the engine proves zero") {
  OracleConfig cfg;
  std::mt19937_64 rng(23);
  auto asg = random_assignment(4, 3, rng);
  for (auto c : {CaseId::aI, CaseId::aII, CaseId::b})
    CHECK(std::abs(oracle_boundary_case(Setting::Dim4, 3, c, asg, cfg)) < 1e-8);
}

TEST_CASE("oracle matches the exact interior term") {
  std::mt19937_64 rng(29);
  for (Setting st : {Setting::Dim4, Setting::Dim6}) {
    const int n = setting_dim(st);
    for (int l : {2, 4}) {
      auto asg = random_assignment(n, l, rng);
      auto vals = assignment_atom_values(asg);
      CHECK(rel_err(oracle_interior(st, l, asg),
                    poly_eval_numeric(interior_term(st, l), vals)) < 1e-10);
    }
  }
}

TEST_CASE("monte carlo sphere mode stays in the right neighborhood") {
  OracleConfig cfg;
  cfg.sphere_samples = 20000;
  std::mt19937_64 rng(31);
  auto asg = random_assignment(4, 2, rng);
  auto vals = assignment_atom_values(asg);
  auto num = oracle_boundary_case(Setting::Dim4, 2, CaseId::c, asg, cfg);
  auto exact = poly_eval_numeric(boundary_case(Setting::Dim4, 2, CaseId::c), vals);
  CHECK(rel_err(num, exact) < 0.1);
}
