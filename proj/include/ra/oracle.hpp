#pragma once

#include "ra/pipeline.hpp"

#include <complex>
#include <functional>
#include <map>
#include <random>
#include <vector>

namespace ra {

// Knobs for the quadrature-based numeric cross-check.
struct OracleConfig {
  uint64_t seed = 1;
  int trials = 20;
  double contour_radius = 0.5;  // outer circle about +i
  int contour_samples = 4096;   // nodes for numeric_contour
  int pole_samples = 64;        // nodes for the Cauchy pole projection
  int sphere_samples = 0;       // 0 = deterministic degree-5 rule, >0 = MC
  double tol = 1e-9;
};

// One random evaluation point: integer vector fields and their normal
// derivatives, plus values for the scalar atoms.
struct OracleAssignment {
  int n = 0, l = 0;
  std::vector<std::vector<double>> a, da;  // l x n
  double hp = 1.0;
  double s = 1.0;
};

OracleAssignment random_assignment(int n, int l, std::mt19937_64& rng);

// Atom values for evaluating engine polynomials at this assignment; pi and
// Omega get their actual numeric values (Omega = vol of the tangential
// covariable sphere).
std::map<AtomId, std::complex<double>> assignment_atom_values(
    const OracleAssignment& asg);

double sphere_volume(int m);  // surface measure of S^{m-1} in R^m

// Trapezoid rule over the circle |z - i| = cfg.contour_radius, positively
// oriented: returns the contour integral of f.
std::complex<double> numeric_contour(
    const std::function<std::complex<double>(std::complex<double>)>& f,
    const OracleConfig& cfg);

// Fully numeric boundary case value: gamma matrices, Cauchy-integral pole
// projection, finite differences in x_n, trapezoid outer contour and a
// deterministic (or Monte Carlo) sphere rule. Shares no code with the
// symbolic path.
std::complex<double> oracle_boundary_case(Setting st, int l, CaseId c,
                                          const OracleAssignment& asg,
                                          const OracleConfig& cfg);

// Numeric interior term (matrix trace times the closed prefactor).
std::complex<double> oracle_interior(Setting st, int l,
                                     const OracleAssignment& asg);

}  // namespace ra
