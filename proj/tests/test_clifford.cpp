#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ra/clifford.hpp"

#include <random>

using namespace ra;

namespace {

Poly pconst(int v) { return Poly::constant(ExactScalar(v)); }

std::vector<std::vector<Poly>> random_vectors(int n, int l,
                                              std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-3, 3);
  std::vector<std::vector<Poly>> v(l);
  for (auto& row : v)
    for (int k = 0; k < n; ++k) row.push_back(pconst(d(rng)));
  return v;
}

}  // namespace

TEST_CASE("clifford relations") {
  const int n = 4;
  for (int i = 1; i <= n; ++i) {
    auto ei = CliffordElem::basis(n, 1u << (i - 1));
    CHECK(ei * ei == CliffordElem::identity(n).scaled(ExactScalar(-1)));
    for (int j = i + 1; j <= n; ++j) {
      auto ej = CliffordElem::basis(n, 1u << (j - 1));
      CHECK(ei * ej + ej * ei == CliffordElem::zero(n));
    }
  }
}

TEST_CASE("trace functional") {
  CHECK(clifford_trace(CliffordElem::identity(4)) == pconst(4));
  CHECK(clifford_trace(CliffordElem::identity(6)) == pconst(8));
  // every nontrivial blade is traceless
  for (uint32_t blade = 1; blade < 16u; ++blade)
    CHECK(clifford_trace(CliffordElem::basis(4, blade)).is_zero());
}

TEST_CASE("wick trace equals the blade-algebra trace") {
  std::mt19937_64 rng(7);
  for (int n : {4, 6}) {
    for (int l : {2, 3, 4}) {
      auto vecs = random_vectors(n, l, rng);
      auto prod = CliffordElem::identity(n);
      for (const auto& row : vecs) prod = prod * clifford_from_vector(n, row);
      CHECK(wick_trace(n, vecs) == clifford_trace(prod));
    }
  }
}

TEST_CASE("odd products are traceless") {
  std::mt19937_64 rng(8);
  for (int l : {1, 3, 5}) CHECK(wick_trace(4, random_vectors(4, l, rng)).is_zero());
}

TEST_CASE("gamma representation satisfies the relations") {
  for (int n : {2, 4, 6}) {
    auto g = gamma_rep(n);
    const int N = 1 << (n / 2);
    REQUIRE(int(g.size()) == n);
    auto id = EMat::ident(N);
    for (int i = 0; i < n; ++i) {
      CHECK(emat_mul(g[i], g[i]) == id.scaled(ExactScalar(-1)));
      for (int j = i + 1; j < n; ++j) {
        EMat s = emat_mul(g[i], g[j]);
        s += emat_mul(g[j], g[i]);
        CHECK(s == EMat::zero(N));
      }
    }
  }
  CHECK_THROWS_AS(gamma_rep(3), AlgebraError);
}

TEST_CASE("matrix trace oracle agrees with the wick trace") {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int n : {4, 6}) {
    for (int l : {2, 4, 6}) {
      std::vector<std::vector<ExactScalar>> vecs(l);
      std::vector<std::vector<Poly>> pvecs(l);
      for (int j = 0; j < l; ++j)
        for (int k = 0; k < n; ++k) {
          int v = d(rng);
          vecs[j].push_back(ExactScalar(v));
          pvecs[j].push_back(pconst(v));
        }
      Poly w = wick_trace(n, pvecs);
      ExactScalar expect =
          w.is_zero() ? ExactScalar(0) : w.t.begin()->second;
      CHECK(matrix_trace_oracle(n, vecs) == expect);
    }
  }
}
