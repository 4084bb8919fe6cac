#pragma once

#include "ra/exact.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace ra {

// Atoms of the commutative coefficient ring.
//   h'        first normal derivative of the metric factor at the boundary
//   a(j,k)    k-th component of the j-th auxiliary vector field
//   da(j,k)   its normal derivative
//   xi(k)     tangential covariable components (live on the unit sphere)
//   s         scalar curvature
//   pi, Omega opaque transcendental factors carried through exactly
enum class AtomKind : uint8_t {
  HPrime = 0,
  A = 1,
  DA = 2,
  Xi = 3,
  Scurv = 4,
  Pi = 5,
  Omega = 6
};

using AtomId = uint32_t;

constexpr AtomId make_atom(AtomKind k, int j = 0, int alpha = 0) {
  return (static_cast<AtomId>(k) << 16) | (static_cast<AtomId>(j) << 8) |
         static_cast<AtomId>(alpha);
}

constexpr AtomId kHPrime = make_atom(AtomKind::HPrime);
constexpr AtomId kScurv = make_atom(AtomKind::Scurv);
constexpr AtomId kPi = make_atom(AtomKind::Pi);
constexpr AtomId kOmega = make_atom(AtomKind::Omega);

inline AtomId atom_a(int j, int alpha) { return make_atom(AtomKind::A, j, alpha); }
inline AtomId atom_da(int j, int alpha) { return make_atom(AtomKind::DA, j, alpha); }
inline AtomId atom_xi(int k) { return make_atom(AtomKind::Xi, 0, k); }

inline AtomKind atom_kind(AtomId id) { return static_cast<AtomKind>(id >> 16); }
inline int atom_j(AtomId id) { return static_cast<int>((id >> 8) & 0xff); }
inline int atom_alpha(AtomId id) { return static_cast<int>(id & 0xff); }

std::string atom_name(AtomId id);

// Sparse monomial: sorted (atom, exponent) pairs, exponents > 0.
struct Monomial {
  std::vector<std::pair<AtomId, int>> f;

  int degree() const {
    int d = 0;
    for (const auto& [a, e] : f) d += e;
    return d;
  }
  int exponent(AtomId id) const {
    for (const auto& [a, e] : f)
      if (a == id) return e;
    return 0;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  bool operator<(const Monomial& o) const;  // total degree, then lex
  Monomial operator*(const Monomial& o) const;
};

struct Poly {
  std::map<Monomial, ExactScalar> t;

  static Poly zero() { return {}; }
  static Poly constant(const ExactScalar& c);
  static Poly atom(AtomId id);

  bool is_zero() const { return t.empty(); }
  void add_term(const Monomial& m, const ExactScalar& c);

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) {
    a += b;
    return a;
  }
  friend Poly operator-(Poly a, const Poly& b) {
    a -= b;
    return a;
  }
  Poly operator-() const;
  Poly scaled(const ExactScalar& c) const;

  friend bool operator==(const Poly&, const Poly&) = default;
};

Poly poly_mul(const Poly& a, const Poly& b);
inline Poly operator*(const Poly& a, const Poly& b) { return poly_mul(a, b); }

// Evaluate numerically; throws AlgebraError("missing assignment: ...") when an
// atom present in the polynomial has no value.
std::complex<double> poly_eval_numeric(
    const Poly& p, const std::map<AtomId, std::complex<double>>& assign);

// Normal derivative at the boundary base point, by rewrite rules:
//   a -> da,  xi_k -> (h'/2) xi_k,  everything else constant;
// second derivatives of a are outside the table -> AlgebraError.
Poly poly_dxn(const Poly& p);

// Average over the unit sphere S^{n-2} in the xi variables (moment formula);
// xi atoms disappear, odd-degree terms vanish.
Poly poly_sphere_average(const Poly& p, int n);

// Reduce modulo xi_1^2 + ... + xi_{n-1}^2 = 1 by eliminating xi_{n-1}^2.
Poly poly_reduce_unit_sphere(const Poly& p, int n);

std::string poly_to_string(const Poly& p);

}  // namespace ra
