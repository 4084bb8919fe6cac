#pragma once

#include "ra/clifford.hpp"

#include <string>
#include <vector>

namespace ra {

// Rational boundary symbol
//     num[0] + num[1] xi_n + ... + num[d] xi_n^d
//     -----------------------------------------
//         (xi_n - i)^p (xi_n + i)^q
// with Clifford-algebra-valued numerator coefficients. Denominators are
// restricted to powers of (xi_n -+ i), i.e. |xi'| = 1; the tangential
// covariable enters through the xi(k) atoms.
struct BoundarySymbol {
  int n = 0;
  int p = 0, q = 0;
  std::vector<CliffordElem> num;

  bool is_zero() const { return num.empty(); }
};

// Canonicalizes: trims trailing zeros and cancels (xi_n -+ i) factors shared
// with the denominator.
BoundarySymbol make_symbol(int n, int p, int q, std::vector<CliffordElem> num);
BoundarySymbol make_scalar_symbol(int n, int p, int q, std::vector<Poly> num);
BoundarySymbol symbol_zero(int n);
BoundarySymbol symbol_one(int n);

BoundarySymbol symbol_add(const BoundarySymbol& a, const BoundarySymbol& b);
BoundarySymbol symbol_neg(const BoundarySymbol& a);
BoundarySymbol symbol_sub(const BoundarySymbol& a, const BoundarySymbol& b);
BoundarySymbol symbol_mul(const BoundarySymbol& a, const BoundarySymbol& b);
BoundarySymbol symbol_scale(const BoundarySymbol& a, const ExactScalar& c);
BoundarySymbol symbol_scale(const BoundarySymbol& a, const Poly& c);
bool symbol_equal(const BoundarySymbol& a, const BoundarySymbol& b);
// equality modulo the unit-sphere relation sum xi_k^2 = 1
bool symbol_equal_mod_sphere(const BoundarySymbol& a, const BoundarySymbol& b);

BoundarySymbol d_xi_n(const BoundarySymbol& s);

// Normal derivative at the boundary base point; numerator atoms by rewrite
// rules, denominator via d/dx_n (1+xi_n^2)^{-M} = -M h' |xi'|^2 (1+xi_n^2)^{-M-1}.
BoundarySymbol d_x_n(const BoundarySymbol& s);

// Partial-fraction projection onto the pole at xi_n = +i (resp. -i).
// Requires numerator degree < p + q ("polynomial part present" otherwise).
BoundarySymbol pi_plus(const BoundarySymbol& s);
BoundarySymbol pi_minus(const BoundarySymbol& s);

BoundarySymbol trace_symbol(const BoundarySymbol& s);

// tr(a*b) computed without forming the full product (blades pair only with
// themselves under the trace); equal to trace_symbol(symbol_mul(a, b)).
BoundarySymbol symbol_product_trace(const BoundarySymbol& a,
                                    const BoundarySymbol& b);

// Drop every blade not present anywhere in keep's numerator. Valid whenever
// the dropped blades cannot reach the trace, since d_xi_n, d_x_n and the pole
// projections all act blade-diagonally.
BoundarySymbol symbol_restrict_blades(const BoundarySymbol& s,
                                      const BoundarySymbol& keep);

// Contour integral over the curve enclosing +i: 2 pi i * Res_{xi_n = +i}.
// Scalar symbols only; requires num degree <= p + q - 2 ("non-integrable at
// infinity" otherwise). The result carries the pi atom exactly.
Poly integrate_gamma_plus(const BoundarySymbol& s);

// Average over the unit sphere in the tangential covariable, coefficient-wise.
BoundarySymbol sphere_average(const BoundarySymbol& s);

// c(X_1)...c(X_l) with X_j = sum_alpha a(j,alpha) e_alpha.
CliffordElem clifford_L(int n, int l);
BoundarySymbol apply_L(const BoundarySymbol& s, int l);

// Named model symbols at the boundary base point:
//   sigma_1(D), sigma_0(D), sigma_-1(D^-1), sigma_-2(D^-1),
//   sigma_-2(D^-2), sigma_-3(D^-2)
BoundarySymbol build_symbol(const std::string& name, int n);

// Checks the symbol-composition identities of D * D^-1 = 1 through order -1,
// modulo the unit-sphere relation.
bool verify_symbol_inverse(int n, std::string* detail = nullptr);

CliffordElem c_vector_xi_tangential(int n);  // c(xi')
CliffordElem c_normal(int n);                // c(dx_n)
Poly s2_poly(int n);                         // |xi'|^2 as a polynomial

std::string symbol_to_string(const BoundarySymbol& s);

}  // namespace ra
