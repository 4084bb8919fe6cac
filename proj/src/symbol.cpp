#include "ra/symbol.hpp"

#include <set>
#include <sstream>

namespace ra {

namespace {

const ExactScalar kI = ExactScalar::unit_i();

void trim(std::vector<CliffordElem>& num) {
  while (!num.empty() && num.back().is_zero()) num.pop_back();
}

CliffordElem eval_at(const std::vector<CliffordElem>& num, const ExactScalar& r,
                     int n) {
  CliffordElem acc = CliffordElem::zero(n);
  ExactScalar pw(1);
  for (const auto& c : num) {
    acc += c.scaled(pw);
    pw *= r;
  }
  return acc;
}

// P(x) = (x - r) Q(x); returns Q. Assumes exact divisibility.
std::vector<CliffordElem> divide_root(const std::vector<CliffordElem>& num,
                                      const ExactScalar& r) {
  const int d = static_cast<int>(num.size()) - 1;
  std::vector<CliffordElem> q(d);
  q[d - 1] = num[d];
  for (int k = d - 1; k >= 1; --k) q[k - 1] = num[k] + q[k].scaled(r);
  return q;
}

// multiply numerator by (xi_n - r)
std::vector<CliffordElem> mul_root(const std::vector<CliffordElem>& num,
                                   const ExactScalar& r, int n) {
  std::vector<CliffordElem> out(num.size() + 1, CliffordElem::zero(n));
  for (size_t k = 0; k < num.size(); ++k) {
    out[k + 1] += num[k];
    out[k] -= num[k].scaled(r);
  }
  return out;
}

std::vector<CliffordElem> lift(std::vector<CliffordElem> num, int dp, int dq,
                               int n) {
  for (int t = 0; t < dp; ++t) num = mul_root(num, kI, n);
  for (int t = 0; t < dq; ++t) num = mul_root(num, -kI, n);
  return num;
}

void reduce(BoundarySymbol& s) {
  trim(s.num);
  if (s.num.empty()) {
    s.p = s.q = 0;
    return;
  }
  while (s.p > 0 && !s.num.empty() && eval_at(s.num, kI, s.n).is_zero()) {
    s.num = divide_root(s.num, kI);
    --s.p;
    trim(s.num);
  }
  while (s.q > 0 && !s.num.empty() && eval_at(s.num, -kI, s.n).is_zero()) {
    s.num = divide_root(s.num, -kI);
    --s.q;
    trim(s.num);
  }
  if (s.num.empty()) s.p = s.q = 0;
}

// Taylor coefficients of num(r + t) in t, up to order cnt-1.
std::vector<CliffordElem> shift_coeffs(const std::vector<CliffordElem>& num,
                                       const ExactScalar& r, int cnt, int n) {
  std::vector<CliffordElem> ct(cnt, CliffordElem::zero(n));
  for (int m = 0; m < cnt; ++m)
    for (int mm = m; mm < static_cast<int>(num.size()); ++mm)
      ct[m] += num[mm].scaled(ExactScalar(rat_binom(mm, m)) * r.pow(mm - m));
  return ct;
}

// series of (t + 2r)^{-e}: s[k] = (-1)^k binom(e+k-1, k) (2r)^{-e-k}
std::vector<ExactScalar> inv_pow_series(const ExactScalar& two_r, int e,
                                        int cnt) {
  std::vector<ExactScalar> s(cnt);
  for (int k = 0; k < cnt; ++k) {
    ExactScalar c(rat_binom(e + k - 1, k));
    if (k % 2) c = -c;
    s[k] = c * two_r.pow(-(e + k));
  }
  return s;
}

int num_degree(const std::vector<CliffordElem>& num) {
  return static_cast<int>(num.size()) - 1;
}

// projection onto the pole at r (= +-i); other pole at -r with order e_other
BoundarySymbol project_pole(const BoundarySymbol& s, const ExactScalar& r,
                            int ord, int other_ord) {
  if (s.is_zero()) return symbol_zero(s.n);
  if (num_degree(s.num) >= s.p + s.q)
    throw SymbolError("polynomial part present");
  if (ord == 0) return symbol_zero(s.n);
  auto ct = shift_coeffs(s.num, r, ord, s.n);
  auto ser = inv_pow_series(r.pow(1) + r, other_ord, ord);  // 2r
  std::vector<CliffordElem> A(ord, CliffordElem::zero(s.n));
  for (int k = 0; k < ord; ++k)
    for (int m = 0; m <= k; ++m) A[k] += ct[m].scaled(ser[k - m]);
  // rewrite sum A[k] (xi_n - r)^k as a plain polynomial in xi_n
  std::vector<CliffordElem> out(ord, CliffordElem::zero(s.n));
  for (int k = 0; k < ord; ++k)
    for (int j = 0; j <= k; ++j)
      out[j] += A[k].scaled(ExactScalar(rat_binom(k, j)) * (-r).pow(k - j));
  return make_symbol(s.n, r == kI ? ord : 0, r == kI ? 0 : ord, std::move(out));
}

}  // namespace

BoundarySymbol make_symbol(int n, int p, int q, std::vector<CliffordElem> num) {
  BoundarySymbol s{n, p, q, std::move(num)};
  reduce(s);
  return s;
}

BoundarySymbol make_scalar_symbol(int n, int p, int q, std::vector<Poly> num) {
  std::vector<CliffordElem> cnum;
  cnum.reserve(num.size());
  for (auto& c : num) {
    CliffordElem e = CliffordElem::zero(n);
    e.add_blade(0u, c);
    cnum.push_back(std::move(e));
  }
  return make_symbol(n, p, q, std::move(cnum));
}

BoundarySymbol symbol_zero(int n) { return BoundarySymbol{n, 0, 0, {}}; }

BoundarySymbol symbol_one(int n) {
  return BoundarySymbol{n, 0, 0, {CliffordElem::identity(n)}};
}

BoundarySymbol symbol_add(const BoundarySymbol& a, const BoundarySymbol& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  int P = std::max(a.p, b.p), Q = std::max(a.q, b.q);
  auto na = lift(a.num, P - a.p, Q - a.q, a.n);
  auto nb = lift(b.num, P - b.p, Q - b.q, b.n);
  if (nb.size() > na.size()) na.resize(nb.size(), CliffordElem::zero(a.n));
  for (size_t k = 0; k < nb.size(); ++k) na[k] += nb[k];
  return make_symbol(a.n, P, Q, std::move(na));
}

BoundarySymbol symbol_neg(const BoundarySymbol& a) {
  BoundarySymbol r = a;
  for (auto& c : r.num) c = -c;
  return r;
}

BoundarySymbol symbol_sub(const BoundarySymbol& a, const BoundarySymbol& b) {
  return symbol_add(a, symbol_neg(b));
}

BoundarySymbol symbol_mul(const BoundarySymbol& a, const BoundarySymbol& b) {
  if (a.is_zero() || b.is_zero()) return symbol_zero(a.n ? a.n : b.n);
  std::vector<CliffordElem> out(a.num.size() + b.num.size() - 1,
                                CliffordElem::zero(a.n));
  for (size_t i = 0; i < a.num.size(); ++i)
    for (size_t j = 0; j < b.num.size(); ++j)
      out[i + j] += clifford_mul(a.num[i], b.num[j]);
  return make_symbol(a.n, a.p + b.p, a.q + b.q, std::move(out));
}

BoundarySymbol symbol_scale(const BoundarySymbol& a, const ExactScalar& c) {
  if (c.is_zero()) return symbol_zero(a.n);
  BoundarySymbol r = a;
  for (auto& e : r.num) e = e.scaled(c);
  return r;
}

BoundarySymbol symbol_scale(const BoundarySymbol& a, const Poly& c) {
  std::vector<CliffordElem> out;
  out.reserve(a.num.size());
  for (const auto& e : a.num) out.push_back(e.scaled(c));
  return make_symbol(a.n, a.p, a.q, std::move(out));
}

bool symbol_equal(const BoundarySymbol& a, const BoundarySymbol& b) {
  return symbol_sub(a, b).is_zero();
}

bool symbol_equal_mod_sphere(const BoundarySymbol& a, const BoundarySymbol& b) {
  BoundarySymbol d = symbol_sub(a, b);
  for (const auto& coeff : d.num)
    for (const auto& [blade, poly] : coeff.b)
      if (!poly_reduce_unit_sphere(poly, d.n).is_zero()) return false;
  return true;
}

BoundarySymbol d_xi_n(const BoundarySymbol& s) {
  if (s.is_zero()) return symbol_zero(s.n);
  std::vector<CliffordElem> der(
      s.num.size() > 1 ? s.num.size() - 1 : 0, CliffordElem::zero(s.n));
  for (size_t k = 1; k < s.num.size(); ++k)
    der[k - 1] = s.num[k].scaled(ExactScalar(static_cast<int>(k)));
  if (s.p == 0 && s.q == 0) return make_symbol(s.n, 0, 0, std::move(der));
  // quotient rule against (xi_n - i)^p (xi_n + i)^q
  std::vector<CliffordElem> t1 = lift(der, 1, 1, s.n);  // num' (xi_n^2 + 1)
  std::vector<CliffordElem> t2(s.num.size() + 1, CliffordElem::zero(s.n));
  // num * (p (xi_n + i) + q (xi_n - i))
  ExactScalar lin(s.p + s.q);
  ExactScalar con = kI * ExactScalar(s.p - s.q);
  for (size_t k = 0; k < s.num.size(); ++k) {
    t2[k + 1] += s.num[k].scaled(lin);
    t2[k] += s.num[k].scaled(con);
  }
  if (t2.size() > t1.size()) t1.resize(t2.size(), CliffordElem::zero(s.n));
  for (size_t k = 0; k < t2.size(); ++k) t1[k] -= t2[k];
  return make_symbol(s.n, s.p + 1, s.q + 1, std::move(t1));
}

BoundarySymbol d_x_n(const BoundarySymbol& s) {
  if (s.is_zero()) return symbol_zero(s.n);
  std::vector<CliffordElem> dn;
  dn.reserve(s.num.size());
  for (const auto& coeff : s.num) {
    CliffordElem d = CliffordElem::zero(s.n);
    for (const auto& [blade, poly] : coeff.b) d.add_blade(blade, poly_dxn(poly));
    dn.push_back(std::move(d));
  }
  BoundarySymbol out = make_symbol(s.n, s.p, s.q, std::move(dn));
  const int M = std::max(s.p, s.q);
  if (M > 0) {
    auto lifted = lift(s.num, M - s.p, M - s.q, s.n);
    Poly factor =
        s2_poly(s.n).scaled(ExactScalar(Rational(-M))) * Poly::atom(kHPrime);
    for (auto& c : lifted) c = c.scaled(factor);
    out = symbol_add(out, make_symbol(s.n, M + 1, M + 1, std::move(lifted)));
  }
  return out;
}

BoundarySymbol pi_plus(const BoundarySymbol& s) {
  return project_pole(s, kI, s.p, s.q);
}

BoundarySymbol pi_minus(const BoundarySymbol& s) {
  return project_pole(s, -kI, s.q, s.p);
}

BoundarySymbol trace_symbol(const BoundarySymbol& s) {
  std::vector<Poly> num;
  num.reserve(s.num.size());
  for (const auto& c : s.num) num.push_back(clifford_trace(c));
  return make_scalar_symbol(s.n, s.p, s.q, std::move(num));
}

BoundarySymbol symbol_product_trace(const BoundarySymbol& a,
                                    const BoundarySymbol& b) {
  if (a.is_zero() || b.is_zero()) return symbol_zero(a.n ? a.n : b.n);
  const ExactScalar dim(Rational(1 << (a.n / 2)));
  std::vector<Poly> out(a.num.size() + b.num.size() - 1);
  for (size_t i = 0; i < a.num.size(); ++i)
    for (size_t j = 0; j < b.num.size(); ++j)
      for (const auto& [blade, pa] : a.num[i].b) {
        auto it = b.num[j].b.find(blade);
        if (it == b.num[j].b.end()) continue;
        ExactScalar c = dim;
        if (blade_mul_sign(blade, blade) < 0) c = -c;
        out[i + j] += (pa * it->second).scaled(c);
      }
  return make_scalar_symbol(a.n, a.p + b.p, a.q + b.q, std::move(out));
}

BoundarySymbol symbol_restrict_blades(const BoundarySymbol& s,
                                      const BoundarySymbol& keep) {
  std::set<uint32_t> blades;
  for (const auto& c : keep.num)
    for (const auto& [blade, poly] : c.b) blades.insert(blade);
  std::vector<CliffordElem> num;
  num.reserve(s.num.size());
  for (const auto& c : s.num) {
    CliffordElem r = CliffordElem::zero(s.n);
    for (const auto& [blade, poly] : c.b)
      if (blades.count(blade)) r.add_blade(blade, poly);
    num.push_back(std::move(r));
  }
  return make_symbol(s.n, s.p, s.q, std::move(num));
}

Poly integrate_gamma_plus(const BoundarySymbol& s) {
  if (s.is_zero() || s.p == 0) return Poly::zero();
  for (const auto& c : s.num)
    for (const auto& [blade, poly] : c.b)
      if (blade != 0u) throw AlgebraError("scalar symbol expected");
  if (num_degree(s.num) > s.p + s.q - 2)
    throw SymbolError("non-integrable at infinity");
  auto ct = shift_coeffs(s.num, kI, s.p, s.n);
  auto ser = inv_pow_series(ExactScalar(Rational(0), Rational(2)), s.q, s.p);
  CliffordElem A = CliffordElem::zero(s.n);
  for (int m = 0; m < s.p; ++m) A += ct[m].scaled(ser[s.p - 1 - m]);
  auto it = A.b.find(0u);
  if (it == A.b.end()) return Poly::zero();
  // 2 pi i * residue, with pi kept exact
  return (it->second * Poly::atom(kPi))
      .scaled(ExactScalar(Rational(0), Rational(2)));
}

BoundarySymbol sphere_average(const BoundarySymbol& s) {
  std::vector<CliffordElem> num;
  num.reserve(s.num.size());
  for (const auto& coeff : s.num) {
    CliffordElem c = CliffordElem::zero(s.n);
    for (const auto& [blade, poly] : coeff.b)
      c.add_blade(blade, poly_sphere_average(poly, s.n));
    num.push_back(std::move(c));
  }
  return make_symbol(s.n, s.p, s.q, std::move(num));
}

CliffordElem c_vector_xi_tangential(int n) {
  CliffordElem r = CliffordElem::zero(n);
  for (int k = 1; k <= n - 1; ++k)
    r.add_blade(1u << (k - 1), Poly::atom(atom_xi(k)));
  return r;
}

CliffordElem c_normal(int n) { return CliffordElem::basis(n, 1u << (n - 1)); }

Poly s2_poly(int n) {
  Poly r;
  for (int k = 1; k <= n - 1; ++k) {
    Poly x = Poly::atom(atom_xi(k));
    r += x * x;
  }
  return r;
}

CliffordElem clifford_L(int n, int l) {
  CliffordElem acc = CliffordElem::identity(n);
  for (int j = 1; j <= l; ++j) {
    std::vector<Poly> comps;
    comps.reserve(n);
    for (int al = 1; al <= n; ++al) comps.push_back(Poly::atom(atom_a(j, al)));
    acc = clifford_mul(acc, clifford_from_vector(n, comps));
  }
  return acc;
}

BoundarySymbol apply_L(const BoundarySymbol& s, int l) {
  CliffordElem L = clifford_L(s.n, l);
  std::vector<CliffordElem> num;
  num.reserve(s.num.size());
  for (const auto& c : s.num) num.push_back(clifford_mul(L, c));
  return make_symbol(s.n, s.p, s.q, std::move(num));
}

namespace {

// numerator-vector product (convolution in xi_n, Clifford product in blades)
std::vector<CliffordElem> numvec_mul(const std::vector<CliffordElem>& a,
                                     const std::vector<CliffordElem>& b,
                                     int n) {
  std::vector<CliffordElem> out(a.size() + b.size() - 1,
                                CliffordElem::zero(n));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      out[i + j] += clifford_mul(a[i], b[j]);
  return out;
}

CliffordElem h0_elem(int n) {
  // sigma_0(D) at the base point: -(3/4) h' c(dx_n)
  return c_normal(n).scaled(
      Poly::atom(kHPrime).scaled(ExactScalar(Rational(-3, 4))));
}

}  // namespace

BoundarySymbol build_symbol(const std::string& name, int n) {
  const CliffordElem cxip = c_vector_xi_tangential(n);
  const CliffordElem cn = c_normal(n);
  const std::vector<CliffordElem> cxi = {cxip, cn};  // c(xi) in xi_n powers
  const Poly hp = Poly::atom(kHPrime);

  if (name == "sigma_1(D)")
    return make_symbol(n, 0, 0, {cxip.scaled(kI), cn.scaled(kI)});
  if (name == "sigma_0(D)") return make_symbol(n, 0, 0, {h0_elem(n)});
  if (name == "sigma_-1(D^-1)")
    return make_symbol(n, 1, 1, {cxip.scaled(kI), cn.scaled(kI)});
  if (name == "sigma_-2(D^-1)") {
    BoundarySymbol t1 =
        make_symbol(n, 2, 2, numvec_mul(numvec_mul(cxi, {h0_elem(n)}, n), cxi, n));
    CliffordElem half_h_cncxip =
        clifford_mul(cn, cxip).scaled(hp.scaled(ExactScalar(Rational(1, 2))));
    BoundarySymbol t2 = make_symbol(n, 2, 2, numvec_mul(cxi, {half_h_cncxip}, n));
    auto t3num = numvec_mul(numvec_mul(cxi, {cn}, n), cxi, n);
    Poly f = s2_poly(n).scaled(ExactScalar(-1)) * hp;
    for (auto& c : t3num) c = c.scaled(f);
    BoundarySymbol t3 = make_symbol(n, 3, 3, std::move(t3num));
    return symbol_add(symbol_add(t1, t2), t3);
  }
  if (name == "sigma_-2(D^-2)")
    return make_symbol(n, 1, 1, {CliffordElem::identity(n)});
  if (name == "sigma_-3(D^-2)") {
    CliffordElem ck = clifford_mul(cxip, cn);  // sum xi_k c(e_k) c(dx_n)
    CliffordElem c0 = ck.scaled(hp.scaled(ExactScalar(Rational(0), Rational(1, 2))));
    CliffordElem c1 = CliffordElem::identity(n).scaled(
        hp.scaled(ExactScalar(Rational(0), Rational(-5, 2))));
    BoundarySymbol t1 = make_symbol(n, 2, 2, {c0, c1});
    CliffordElem c1b = CliffordElem::identity(n).scaled(
        (hp * s2_poly(n)).scaled(ExactScalar(Rational(0), Rational(-2))));
    BoundarySymbol t2 = make_symbol(n, 3, 3, {CliffordElem::zero(n), c1b});
    return symbol_add(t1, t2);
  }
  throw AlgebraError("unknown symbol: " + name);
}

bool verify_symbol_inverse(int n, std::string* detail) {
  BoundarySymbol s1 = build_symbol("sigma_1(D)", n);
  BoundarySymbol s0 = build_symbol("sigma_0(D)", n);
  BoundarySymbol sm1 = build_symbol("sigma_-1(D^-1)", n);
  BoundarySymbol sm2 = build_symbol("sigma_-2(D^-1)", n);

  // order 0: sigma_1 sigma_-1 = 1
  if (!symbol_equal_mod_sphere(symbol_mul(s1, sm1), symbol_one(n))) {
    if (detail) *detail = "leading-order composition fails";
    return false;
  }
  // order -1: sigma_1 sigma_-2 + sigma_0 sigma_-1
  //           - i d_xi_n(sigma_1) d_x_n(sigma_-1) = 0
  BoundarySymbol cross = symbol_scale(
      symbol_mul(d_xi_n(s1), d_x_n(sm1)), -ExactScalar::unit_i());
  BoundarySymbol total =
      symbol_add(symbol_add(symbol_mul(s1, sm2), symbol_mul(s0, sm1)), cross);
  if (!symbol_equal_mod_sphere(total, symbol_zero(n))) {
    if (detail) *detail = "subleading-order composition fails";
    return false;
  }
  if (detail) detail->clear();
  return true;
}

namespace {

std::string blade_to_string(uint32_t blade) {
  if (blade == 0) return "1";
  std::string s;
  for (int k = 0; k < 32; ++k)
    if (blade >> k & 1) {
      if (!s.empty()) s += "*";
      s += "e" + std::to_string(k + 1);
    }
  return s;
}

}  // namespace

std::string symbol_to_string(const BoundarySymbol& s) {
  if (s.is_zero()) return "0";
  std::ostringstream os;
  os << "(";
  bool first_term = true;
  for (size_t k = 0; k < s.num.size(); ++k) {
    for (const auto& [blade, poly] : s.num[k].b) {
      if (!first_term) os << " + ";
      first_term = false;
      os << "[" << poly_to_string(poly) << "]";
      if (blade) os << "*" << blade_to_string(blade);
      if (k == 1)
        os << "*xin";
      else if (k > 1)
        os << "*xin^" << k;
    }
  }
  os << ")";
  if (s.p || s.q) {
    os << " / (";
    if (s.p) {
      os << "(xin-i)";
      if (s.p > 1) os << "^" << s.p;
    }
    if (s.q) {
      if (s.p) os << "*";
      os << "(xin+i)";
      if (s.q > 1) os << "^" << s.q;
    }
    os << ")";
  }
  return os.str();
}

}  // namespace ra
