#include "ra/clifford.hpp"

#include <bit>

namespace ra {

CliffordElem CliffordElem::identity(int n) {
  CliffordElem x{n, {}};
  x.b.emplace(0u, Poly::constant(ExactScalar(1)));
  return x;
}

CliffordElem CliffordElem::basis(int n, uint32_t blade) {
  CliffordElem x{n, {}};
  x.b.emplace(blade, Poly::constant(ExactScalar(1)));
  return x;
}

void CliffordElem::add_blade(uint32_t blade, const Poly& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = b.emplace(blade, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) b.erase(it);
  }
}

CliffordElem& CliffordElem::operator+=(const CliffordElem& o) {
  if (n == 0) n = o.n;
  for (const auto& [bl, c] : o.b) add_blade(bl, c);
  return *this;
}

CliffordElem& CliffordElem::operator-=(const CliffordElem& o) {
  if (n == 0) n = o.n;
  for (const auto& [bl, c] : o.b) add_blade(bl, -c);
  return *this;
}

CliffordElem CliffordElem::operator-() const {
  CliffordElem r{n, {}};
  for (const auto& [bl, c] : b) r.b.emplace(bl, -c);
  return r;
}

CliffordElem CliffordElem::scaled(const ExactScalar& c) const {
  CliffordElem r{n, {}};
  if (c.is_zero()) return r;
  for (const auto& [bl, p] : b) r.b.emplace(bl, p.scaled(c));
  return r;
}

CliffordElem CliffordElem::scaled(const Poly& c) const {
  CliffordElem r{n, {}};
  if (c.is_zero()) return r;
  for (const auto& [bl, p] : b) r.add_blade(bl, p * c);
  return r;
}

int blade_mul_sign(uint32_t S, uint32_t T) {
  // moving each generator of T past the generators of S that sit above it,
  // plus one e_k^2 = -1 per common generator
  int count = std::popcount(S & T);
  int swaps = 0;
  for (uint32_t t = T; t; t &= t - 1) {
    uint32_t bit = t & ~(t - 1);
    swaps += std::popcount(S & ~((bit << 1) - 1));
  }
  return ((swaps + count) & 1) ? -1 : 1;
}

CliffordElem clifford_mul(const CliffordElem& a, const CliffordElem& b) {
  CliffordElem r{a.n ? a.n : b.n, {}};
  for (const auto& [sa, ca] : a.b)
    for (const auto& [sb, cb] : b.b) {
      Poly p = ca * cb;
      if (blade_mul_sign(sa, sb) < 0) p = -p;
      r.add_blade(sa ^ sb, p);
    }
  return r;
}

CliffordElem clifford_from_vector(int n, const std::vector<Poly>& comps) {
  CliffordElem r{n, {}};
  for (int k = 0; k < n && k < static_cast<int>(comps.size()); ++k)
    r.add_blade(1u << k, comps[k]);
  return r;
}

Poly clifford_trace(const CliffordElem& x) {
  auto it = x.b.find(0u);
  if (it == x.b.end()) return Poly::zero();
  return it->second.scaled(ExactScalar(Rational(1 << (x.n / 2))));
}

namespace {

// signed sum over perfect pairings; pairs[] collects (p,q) indices
void pairing_sum(int n, const std::vector<std::vector<Poly>>& v,
                 std::vector<int>& remaining, int sign_acc, const Poly& prod,
                 Poly& out) {
  if (remaining.empty()) {
    if (sign_acc > 0)
      out += prod;
    else
      out -= prod;
    return;
  }
  int p = remaining.front();
  for (size_t idx = 1; idx < remaining.size(); ++idx) {
    int q = remaining[idx];
    // sign of the permutation sending 1,2,...,l to p1,q1,p2,q2,...: pulling
    // q next to p across idx-1 intermediate entries
    int sign = (idx % 2) ? sign_acc : -sign_acc;
    Poly g;  // g(X_p, X_q) = sum_k v[p][k] v[q][k]
    for (size_t k = 0; k < v[p].size(); ++k) g += v[p][k] * v[q][k];
    std::vector<int> rest;
    rest.reserve(remaining.size() - 2);
    for (size_t k = 1; k < remaining.size(); ++k)
      if (k != idx) rest.push_back(remaining[k]);
    pairing_sum(n, v, rest, sign, prod * (-g), out);  // one -g per pair
  }
}

}  // namespace

Poly wick_trace(int n, const std::vector<std::vector<Poly>>& vectors) {
  if (vectors.size() % 2) return Poly::zero();
  Poly acc;
  std::vector<int> all(vectors.size());
  for (size_t k = 0; k < vectors.size(); ++k) all[k] = static_cast<int>(k);
  Poly one = Poly::constant(ExactScalar(1));
  pairing_sum(n, vectors, all, 1, one, acc);
  return acc.scaled(ExactScalar(Rational(1 << (n / 2))));
}

EMat EMat::ident(int N) {
  EMat m = zero(N);
  for (int k = 0; k < N; ++k) m.at(k, k) = ExactScalar(1);
  return m;
}

EMat& EMat::operator+=(const EMat& o) {
  for (size_t k = 0; k < a.size(); ++k) a[k] += o.a[k];
  return *this;
}

EMat EMat::scaled(const ExactScalar& c) const {
  EMat r = *this;
  for (auto& v : r.a) v *= c;
  return r;
}

ExactScalar EMat::trace() const {
  ExactScalar t;
  for (int k = 0; k < N; ++k) t += at(k, k);
  return t;
}

EMat emat_mul(const EMat& a, const EMat& b) {
  EMat r = EMat::zero(a.N);
  for (int i = 0; i < a.N; ++i)
    for (int k = 0; k < a.N; ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (int j = 0; j < a.N; ++j) r.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return r;
}

EMat emat_kron(const EMat& a, const EMat& b) {
  EMat r = EMat::zero(a.N * b.N);
  for (int i = 0; i < a.N; ++i)
    for (int j = 0; j < a.N; ++j) {
      if (a.at(i, j).is_zero()) continue;
      for (int k = 0; k < b.N; ++k)
        for (int l = 0; l < b.N; ++l)
          r.at(i * b.N + k, j * b.N + l) = a.at(i, j) * b.at(k, l);
    }
  return r;
}

std::vector<EMat> gamma_rep(int n) {
  if (n % 2) throw AlgebraError("odd dimension unsupported");
  if (n <= 0 || n > 10) throw AlgebraError("dimension out of range");
  const ExactScalar I = ExactScalar::unit_i();
  EMat sx = EMat::zero(2), sy = EMat::zero(2), sz = EMat::zero(2);
  sx.at(0, 1) = ExactScalar(1);
  sx.at(1, 0) = ExactScalar(1);
  sy.at(0, 1) = -I;
  sy.at(1, 0) = I;
  sz.at(0, 0) = ExactScalar(1);
  sz.at(1, 1) = ExactScalar(-1);
  const int m = n / 2;
  std::vector<EMat> out;
  out.reserve(n);
  for (int k = 1; k <= m; ++k) {
    for (const EMat* mid : {&sx, &sy}) {
      EMat g = EMat::ident(1);
      for (int t = 0; t < k - 1; ++t) g = emat_kron(g, sz);
      g = emat_kron(g, mid->scaled(I));  // (i sigma)^2 = -1
      for (int t = k; t < m; ++t) g = emat_kron(g, EMat::ident(2));
      out.push_back(std::move(g));
    }
  }
  return out;
}

ExactScalar matrix_trace_oracle(
    int n, const std::vector<std::vector<ExactScalar>>& vectors) {
  auto gam = gamma_rep(n);
  const int N = 1 << (n / 2);
  EMat acc = EMat::ident(N);
  for (const auto& v : vectors) {
    EMat m = EMat::zero(N);
    for (int k = 0; k < n && k < static_cast<int>(v.size()); ++k)
      m += gam[k].scaled(v[k]);
    acc = emat_mul(acc, m);
  }
  return acc.trace();
}

}  // namespace ra
