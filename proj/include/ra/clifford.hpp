#pragma once

#include "ra/poly.hpp"

#include <map>
#include <vector>

namespace ra {

// Element of the complex Clifford algebra Cl(n) with e_i e_j + e_j e_i =
// -2 delta_ij, coefficients in the commutative ring Poly. Keyed by blade
// bitmask (bit k <-> e_{k+1}).
struct CliffordElem {
  int n = 0;
  std::map<uint32_t, Poly> b;

  static CliffordElem zero(int n) { return {n, {}}; }
  static CliffordElem identity(int n);
  static CliffordElem basis(int n, uint32_t blade);

  bool is_zero() const { return b.empty(); }
  void add_blade(uint32_t blade, const Poly& coeff);

  CliffordElem& operator+=(const CliffordElem& o);
  CliffordElem& operator-=(const CliffordElem& o);
  friend CliffordElem operator+(CliffordElem a, const CliffordElem& b) {
    a += b;
    return a;
  }
  friend CliffordElem operator-(CliffordElem a, const CliffordElem& b) {
    a -= b;
    return a;
  }
  CliffordElem operator-() const;
  CliffordElem scaled(const ExactScalar& c) const;
  CliffordElem scaled(const Poly& c) const;

  friend bool operator==(const CliffordElem&, const CliffordElem&) = default;
};

// Sign of e_S * e_T relative to e_{S xor T}.
int blade_mul_sign(uint32_t S, uint32_t T);

CliffordElem clifford_mul(const CliffordElem& a, const CliffordElem& b);
inline CliffordElem operator*(const CliffordElem& a, const CliffordElem& b) {
  return clifford_mul(a, b);
}

// c(X) for X = sum comps[k] e_{k+1}; comps.size() == n.
CliffordElem clifford_from_vector(int n, const std::vector<Poly>& comps);

// Normalized trace functional scaled to tr[id] = 2^{n/2}: kills every
// nontrivial blade.
Poly clifford_trace(const CliffordElem& x);

// tr[c(X_1)...c(X_l)] via signed perfect pairings; vectors[j][k] is the k-th
// component of X_{j+1} (size n each). Returns the full trace (with the
// 2^{n/2} factor).
Poly wick_trace(int n, const std::vector<std::vector<Poly>>& vectors);

// Dense exact matrix, used only by the representation-theoretic cross-check.
struct EMat {
  int N = 0;
  std::vector<ExactScalar> a;

  static EMat zero(int N) { return {N, std::vector<ExactScalar>(N * N)}; }
  static EMat ident(int N);
  ExactScalar& at(int r, int c) { return a[r * N + c]; }
  const ExactScalar& at(int r, int c) const { return a[r * N + c]; }

  EMat& operator+=(const EMat& o);
  EMat scaled(const ExactScalar& c) const;
  ExactScalar trace() const;
  friend bool operator==(const EMat&, const EMat&) = default;
};

EMat emat_mul(const EMat& a, const EMat& b);
EMat emat_kron(const EMat& a, const EMat& b);

// Gamma matrices of size 2^{n/2} satisfying the same relations as the e_i;
// throws AlgebraError("odd dimension unsupported") for odd n, and rejects
// n > 10.
std::vector<EMat> gamma_rep(int n);

// Independent trace oracle: represent each vector by gamma matrices, multiply
// out, take the matrix trace.
ExactScalar matrix_trace_oracle(int n,
                                const std::vector<std::vector<ExactScalar>>& vectors);

}  // namespace ra
