#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ra/dsl.hpp"

using namespace ra;

namespace {
const int N = 4, L = 2;
BoundarySymbol parse(const std::string& s) { return parse_symbol(s, N, L); }
}  // namespace

TEST_CASE("scalars and atoms") {
  CHECK(symbol_equal(parse("3/4"),
                     make_scalar_symbol(N, 0, 0,
                                        {Poly::constant(ExactScalar(Rational(3, 4)))})));
  CHECK(symbol_equal(parse("i*i"), parse("-1")));
  CHECK(symbol_equal(parse("h1"),
                     make_scalar_symbol(N, 0, 0, {Poly::atom(kHPrime)})));
  CHECK(symbol_equal(parse("a(1,3)"),
                     make_scalar_symbol(N, 0, 0, {Poly::atom(atom_a(1, 3))})));
  CHECK(symbol_equal(parse("xi(2)^2"),
                     make_scalar_symbol(N, 0, 0, {Poly::atom(atom_xi(2)) *
                                                  Poly::atom(atom_xi(2))})));
}

TEST_CASE("clifford vectors and xi_n") {
  CHECK(symbol_equal(parse("c(e1)*c(e1)"), parse("-1")));
  CHECK(symbol_equal(parse("c(e1)*c(e2) + c(e2)*c(e1)"), parse("0")));
  CHECK(symbol_equal(parse("c(dxn)"), make_symbol(N, 0, 0, {c_normal(N)})));
  // xin is the polynomial variable of the symbol numerator
  CHECK(symbol_equal(parse("(xin + i)*(xin - i)"), parse("xin^2 + 1")));
}

TEST_CASE("division by |xi|^2 moves into the denominator") {
  // on the boundary sphere |xi'|^2 = 1 so |xi|^2 = 1 + xin^2
  auto s = parse("c(xi)/|xi|^2");
  CHECK(s.p == 1);
  CHECK(s.q == 1);
}

TEST_CASE("operators compose like the library calls") {
  auto base = parse("c(xi)/|xi|^2");
  CHECK(symbol_equal(parse("dxin(c(xi)/|xi|^2)"), d_xi_n(base)));
  CHECK(symbol_equal(parse("dxn(c(xi)/|xi|^2)"), d_x_n(base)));
  CHECK(symbol_equal(parse("pip(c(xi)/|xi|^2)"), pi_plus(base)));
  CHECK(symbol_equal(parse("tr(c(X1)*c(X2))"),
                     trace_symbol(symbol_mul(
                         make_symbol(N, 0, 0, {clifford_L(N, 1)}),
                         parse("c(X2)")))));
  CHECK(symbol_equal(parse("sph(xi(1)^2)"), parse("1/3")));
}

TEST_CASE("residue integral") {
  // res(1/|xi|^2) = 2 pi i Res_{xin=i} = pi
  auto s = parse("res(1/|xi|^2)");
  CHECK(symbol_equal(s, make_scalar_symbol(N, 0, 0, {Poly::atom(kPi)})));
}

TEST_CASE("precedence and unary minus") {
  CHECK(symbol_equal(parse("-2*3 + 1"), parse("-5")));
  CHECK(symbol_equal(parse("2*(3+1)"), parse("8")));
  CHECK(symbol_equal(parse("2^3/4"), parse("2")));
}

TEST_CASE("errors are reported as SymbolError") {
  CHECK_THROWS_AS(parse("c(e9)"), SymbolError);
  CHECK_THROWS_AS(parse("c(X3)"), SymbolError);   // only l=2 vectors exist
  CHECK_THROWS_AS(parse("(1+2"), SymbolError);
  CHECK_THROWS_AS(parse("frob(1)"), SymbolError);
  CHECK_THROWS_AS(parse("xi(5)"), SymbolError);   // tangential index bound
}
