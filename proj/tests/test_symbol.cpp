#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ra/symbol.hpp"

using namespace ra;

namespace {

const int N = 4;

BoundarySymbol scalar_sym(int p, int q, std::vector<int> coefs) {
  std::vector<Poly> num;
  for (int c : coefs) num.push_back(Poly::constant(ExactScalar(c)));
  return make_scalar_symbol(N, p, q, num);
}

}  // namespace

TEST_CASE("make_symbol cancels shared pole factors") {
  // (xi_n - i) / ((xi_n - i)(xi_n + i)) == 1 / (xi_n + i)
  std::vector<Poly> num = {Poly::constant(ExactScalar(Rational(0), Rational(-1))),
                           Poly::constant(ExactScalar(1))};
  auto s = make_scalar_symbol(N, 1, 1, num);
  CHECK(s.p == 0);
  CHECK(s.q == 1);
  CHECK(symbol_equal(s, scalar_sym(0, 1, {1})));
}

TEST_CASE("pole projections split exactly and are idempotent") {
  // generic symbol with both poles
  auto s = scalar_sym(2, 3, {3, 0, -1, 2});
  auto plus = pi_plus(s);
  auto minus = pi_minus(s);
  CHECK(symbol_equal(symbol_add(plus, minus), s));
  CHECK(symbol_equal(pi_plus(plus), plus));
  CHECK(symbol_equal(pi_minus(plus), symbol_zero(N)));
  CHECK(plus.q == 0);
  CHECK(minus.p == 0);

  // a polynomial part is not representable
  CHECK_THROWS_AS(pi_plus(scalar_sym(1, 1, {1, 0, 1})), SymbolError);
}

TEST_CASE("xi_n derivative") {
  // d/dxi_n 1/(xi_n - i) = -1/(xi_n - i)^2
  auto s = scalar_sym(1, 0, {1});
  CHECK(symbol_equal(d_xi_n(s), scalar_sym(2, 0, {-1})));
  // product rule against multiplication
  auto a = scalar_sym(1, 1, {2, 1});
  auto b = scalar_sym(0, 2, {0, 3});
  auto lhs = d_xi_n(symbol_mul(a, b));
  auto rhs = symbol_add(symbol_mul(d_xi_n(a), b), symbol_mul(a, d_xi_n(b)));
  CHECK(symbol_equal(lhs, rhs));
}

TEST_CASE("normal derivative rewrites atoms and the denominator") {
  // numerator atoms: a -> da
  auto s = make_scalar_symbol(N, 0, 0, {Poly::atom(atom_a(1, 2))});
  CHECK(symbol_equal(d_x_n(s), make_scalar_symbol(N, 0, 0,
                                                  {Poly::atom(atom_da(1, 2))})));
  // denominator: d/dx_n (1+xi_n^2)^{-1} = -h' |xi'|^2 (1+xi_n^2)^{-2}
  auto inv = scalar_sym(1, 1, {1});
  auto expect = make_scalar_symbol(
      N, 2, 2, {s2_poly(N).scaled(ExactScalar(Rational(-1)))
                    .scaled(ExactScalar(Rational(1)))});
  expect = symbol_scale(expect, Poly::atom(kHPrime));
  CHECK(symbol_equal(d_x_n(inv), expect));
}

TEST_CASE("contour integral picks up the +i residue") {
  // 1/((xi_n - i)(xi_n + i)): residue at +i is 1/(2i), integral = pi
  auto s = scalar_sym(1, 1, {1});
  CHECK(integrate_gamma_plus(s) == Poly::atom(kPi));
  // no pole at +i -> zero
  CHECK(integrate_gamma_plus(scalar_sym(0, 2, {1})).is_zero());
  // not integrable at infinity
  CHECK_THROWS_AS(integrate_gamma_plus(scalar_sym(1, 1, {0, 1})), SymbolError);
}

TEST_CASE("sphere average of tangential covariables") {
  // <xi_k^2> = 1/(n-1) on S^{n-2}
  auto s = make_scalar_symbol(N, 0, 0,
                              {Poly::atom(atom_xi(1)) * Poly::atom(atom_xi(1))});
  auto avg = sphere_average(s);
  CHECK(symbol_equal(avg, make_scalar_symbol(
                              N, 0, 0,
                              {Poly::constant(ExactScalar(Rational(1, 3)))})));
  // odd moments vanish
  auto odd = make_scalar_symbol(N, 0, 0, {Poly::atom(atom_xi(2))});
  CHECK(sphere_average(odd).is_zero());
}

TEST_CASE("product trace shortcut matches the full product") {
  auto cxi = make_symbol(N, 1, 1, {c_vector_xi_tangential(N)});
  auto cn = make_symbol(N, 0, 1, {c_normal(N)});
  auto a = apply_L(cxi, 2);
  auto b = d_xi_n(symbol_mul(cn, cxi));
  CHECK(symbol_equal(symbol_product_trace(a, b),
                     trace_symbol(symbol_mul(a, b))));
}

TEST_CASE("blade restriction never changes a paired trace") {
  auto cxi = make_symbol(N, 1, 1, {c_vector_xi_tangential(N)});
  auto cn = make_symbol(N, 0, 1, {c_normal(N)});
  auto left = apply_L(symbol_mul(cxi, cn), 2);
  auto right = d_xi_n(cxi);
  auto restricted = symbol_restrict_blades(left, right);
  CHECK(symbol_equal(symbol_product_trace(left, right),
                     symbol_product_trace(restricted, right)));
}

TEST_CASE("model symbols invert the operator symbol") {
  std::string detail;
  CHECK(verify_symbol_inverse(4, &detail));
  INFO(detail);
  CHECK(verify_symbol_inverse(6, &detail));
}
