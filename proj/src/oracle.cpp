#include "ra/oracle.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace ra {

namespace {

using cplx = std::complex<double>;
constexpr double kTau = 2.0 * std::numbers::pi;

double factorial_d(int m) {
  double r = 1.0;
  for (int t = 2; t <= m; ++t) r *= t;
  return r;
}

// Small dense complex matrix; dimensions here are at most 8x8, so a fixed
// buffer avoids heap traffic in the quadrature loops.
struct CMat {
  int d = 0;
  std::array<cplx, 64> v{};

  static CMat zero(int d) {
    CMat m;
    m.d = d;
    return m;
  }
  static CMat ident(int d) {
    CMat m = zero(d);
    for (int r = 0; r < d; ++r) m.v[r * d + r] = 1.0;
    return m;
  }
  cplx& at(int r, int c) { return v[r * d + c]; }
  cplx at(int r, int c) const { return v[r * d + c]; }

  CMat& operator+=(const CMat& o) {
    if (d == 0) {
      *this = o;
      return *this;
    }
    for (int t = 0; t < d * d; ++t) v[t] += o.v[t];
    return *this;
  }
  friend CMat operator+(CMat a, const CMat& b) {
    a += b;
    return a;
  }
  friend CMat operator-(CMat a, const CMat& b) {
    for (int t = 0; t < a.d * a.d; ++t) a.v[t] -= b.v[t];
    return a;
  }
  friend CMat operator*(const cplx& c, CMat a) {
    for (int t = 0; t < a.d * a.d; ++t) a.v[t] *= c;
    return a;
  }
  friend CMat operator*(const CMat& a, const CMat& b) {
    CMat r = zero(a.d);
    for (int i = 0; i < a.d; ++i)
      for (int k = 0; k < a.d; ++k) {
        cplx aik = a.at(i, k);
        if (aik == 0.0) continue;
        for (int j = 0; j < a.d; ++j) r.at(i, j) += aik * b.at(k, j);
      }
    return r;
  }
  cplx trace() const {
    cplx t = 0.0;
    for (int r = 0; r < d; ++r) t += at(r, r);
    return t;
  }
};

std::vector<CMat> gamma_numeric(int n) {
  std::vector<EMat> exact = gamma_rep(n);
  std::vector<CMat> out;
  out.reserve(exact.size());
  for (const auto& e : exact) {
    CMat m = CMat::zero(e.N);
    for (int r = 0; r < e.N; ++r)
      for (int c = 0; c < e.N; ++c) m.at(r, c) = e.at(r, c).to_complex();
    out.push_back(std::move(m));
  }
  return out;
}

// The x_n-dependent boundary model at a fixed tangential direction xi'.
struct Model {
  int n, l, N;
  const std::vector<CMat>* g;
  const OracleAssignment* asg;
  std::vector<double> xi;  // unit vector in R^{n-1}

  const CMat& cn() const { return (*g)[n - 1]; }

  CMat cxip(double x) const {
    CMat m = CMat::zero(N);
    double f = 1.0 + x * asg->hp / 2.0;
    for (int k = 0; k < n - 1; ++k) m += (f * xi[k]) * (*g)[k];
    return m;
  }
  CMat cxi(double x, cplx z) const { return cxip(x) + z * cn(); }
  cplx xi2(double x, cplx z) const { return (1.0 + x * asg->hp) + z * z; }
  CMat L(double x) const {
    CMat m = CMat::ident(N);
    for (int j = 0; j < l; ++j) {
      CMat f = CMat::zero(N);
      for (int al = 0; al < n; ++al)
        f += cplx(asg->a[j][al] + x * asg->da[j][al]) * (*g)[al];
      m = m * f;
    }
    return m;
  }
  CMat h0() const { return cplx(-0.75 * asg->hp) * cn(); }

  CMat sig_top(double x, cplx z) const {
    if (n == 4) return (cplx(0.0, 1.0) / xi2(x, z)) * cxi(x, z);
    return (1.0 / xi2(x, z)) * CMat::ident(N);
  }
  CMat sig_low(cplx z) const {
    cplx den = 1.0 + z * z;
    if (n == 4) {
      CMat cx = cxi(0.0, z);
      CMat t = (1.0 / (den * den)) * (cx * h0() * cx) +
               (0.5 * asg->hp / (den * den)) * (cx * cn() * cxip(0.0));
      return t - (asg->hp / (den * den * den)) * (cx * cn() * cx);
    }
    CMat ck = CMat::zero(N);
    for (int k = 0; k < n - 1; ++k) ck += xi[k] * ((*g)[k] * cn());
    CMat t = (cplx(0.0, -1.0) / (den * den)) *
             ((-0.5 * asg->hp) * ck + (2.5 * asg->hp * z) * CMat::ident(N));
    return t - (cplx(0.0, 2.0) * asg->hp * z / (den * den * den)) *
                   CMat::ident(N);
  }
};

// matrix-valued rational function num(z) / (1 + shift + z^2)^p, closed under
// exact z-differentiation; used for the right factor so the outer contour
// does not re-evaluate matrix products per node
struct MatRat {
  double shift = 0.0;
  int p = 0;
  std::vector<CMat> num;  // coefficients of z^0, z^1, ...

  MatRat deriv() const {
    const int N = num.empty() ? 0 : num[0].d;
    MatRat r;
    r.shift = shift;
    r.p = p + 1;
    r.num.assign(num.size() + 1, CMat::zero(N));
    const cplx D0 = 1.0 + shift;
    for (size_t t = 1; t < num.size(); ++t) {
      CMat d = cplx(double(t)) * num[t];
      r.num[t - 1] += D0 * d;
      r.num[t + 1] += d;
    }
    for (size_t t = 0; t < num.size(); ++t)
      r.num[t + 1] += cplx(-2.0 * p) * num[t];
    return r;
  }

  CMat eval(cplx z) const {
    const int N = num.empty() ? 0 : num[0].d;
    CMat acc = CMat::zero(N);
    cplx zp = 1.0;
    for (const auto& c : num) {
      acc += zp * c;
      zp *= z;
    }
    return (1.0 / std::pow(cplx(1.0 + shift) + z * z, p)) * acc;
  }
};

// product of matrix polynomials in z
std::vector<CMat> pmul(const std::vector<CMat>& a, const std::vector<CMat>& b) {
  std::vector<CMat> r(a.size() + b.size() - 1, CMat::zero(a[0].d));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

MatRat sig_top_rat(const Model& mdl, double x) {
  MatRat r;
  r.shift = x * mdl.asg->hp;
  r.p = 1;
  if (mdl.n == 4)
    r.num = {cplx(0.0, 1.0) * mdl.cxip(x), cplx(0.0, 1.0) * mdl.cn()};
  else
    r.num = {CMat::ident(mdl.N)};
  return r;
}

MatRat sig_low_rat(const Model& mdl) {
  const double hp = mdl.asg->hp;
  MatRat r;
  r.p = 3;
  if (mdl.n == 4) {
    std::vector<CMat> cx = {mdl.cxip(0.0), mdl.cn()};
    std::vector<CMat> t12 = pmul(pmul(cx, {mdl.h0()}), cx);
    std::vector<CMat> s2t = pmul(pmul(cx, {mdl.cn()}), {mdl.cxip(0.0)});
    for (size_t t = 0; t < s2t.size(); ++t) t12[t] += cplx(0.5 * hp) * s2t[t];
    // lift the (1+z^2)^-2 part to the common denominator power 3
    std::vector<CMat> num = pmul(t12, {CMat::ident(mdl.N), CMat::zero(mdl.N),
                                       CMat::ident(mdl.N)});
    std::vector<CMat> t3 = pmul(pmul(cx, {mdl.cn()}), cx);
    for (size_t t = 0; t < t3.size(); ++t) num[t] += cplx(-hp) * t3[t];
    r.num = std::move(num);
  } else {
    CMat ck = CMat::zero(mdl.N);
    for (int k = 0; k < mdl.n - 1; ++k)
      ck += mdl.xi[k] * ((*mdl.g)[k] * mdl.cn());
    std::vector<CMat> t1 = {cplx(0.0, 0.5 * hp) * ck,
                            cplx(0.0, -2.5 * hp) * CMat::ident(mdl.N)};
    std::vector<CMat> num = pmul(t1, {CMat::ident(mdl.N), CMat::zero(mdl.N),
                                      CMat::ident(mdl.N)});
    num[1] += cplx(0.0, -2.0 * hp) * CMat::ident(mdl.N);
    r.num = std::move(num);
  }
  return r;
}

// boundary-case integrand at one tangential direction (value of the full
// z-contour, before sphere integration)
cplx case_integrand(const Model& mdl, const CaseSpec& cs,
                    const OracleConfig& cfg) {
  const bool lowL = cs.left_order < cs.right_order;
  const bool lowR = cs.right_order < cs.left_order;
  const int j = cs.j, k = cs.k;

  // left factor before the projection, as a function of z
  const double hfd = 1e-3;
  const double fdx[4] = {2 * hfd, hfd, -hfd, -2 * hfd};
  const CMat L0 = mdl.L(0.0);
  CMat Lx[4];
  if (j == 1)
    for (int t = 0; t < 4; ++t) Lx[t] = mdl.L(fdx[t]);
  std::function<CMat(cplx)> fleft0;
  if (lowL) {
    fleft0 = [&](cplx z) { return L0 * mdl.sig_low(z); };
  } else if (j == 1) {
    fleft0 = [&](cplx z) {
      static const double wfd[4] = {-1.0, 8.0, -8.0, 1.0};
      CMat acc = CMat::zero(mdl.N);
      for (int t = 0; t < 4; ++t)
        acc += (wfd[t] / (12.0 * hfd)) * (Lx[t] * mdl.sig_top(fdx[t], z));
      return acc;
    };
  } else {
    fleft0 = [&](cplx z) { return L0 * mdl.sig_top(0.0, z); };
  }

  // pole projection: sample once on a circle about +i, then evaluate the
  // (analytically differentiated) Cauchy kernel
  const int Mi = cfg.pole_samples;
  const double ri = 0.2;
  std::vector<cplx> taus(Mi);
  std::vector<CMat> fvals(Mi);
  for (int t = 0; t < Mi; ++t) {
    taus[t] = cplx(0.0, 1.0) + std::polar(ri, kTau * t / Mi);
    fvals[t] = fleft0(taus[t]);
  }
  const double kf = factorial_d(k);
  auto left = [&](cplx z) {
    CMat acc;
    for (int t = 0; t < Mi; ++t) {
      cplx w = (taus[t] - cplx(0.0, 1.0)) / double(Mi) * (k % 2 ? -kf : kf) /
               std::pow(z - taus[t], k + 1);
      acc += w * fvals[t];
    }
    return acc;
  };

  // right factor: exact z-derivatives of a matrix-rational function, with a
  // central difference in x when a normal derivative is required
  std::vector<std::pair<double, MatRat>> rparts;  // (weight, d^{j+1}_z part)
  if (lowR) {
    rparts.emplace_back(1.0, sig_low_rat(mdl));
  } else if (k == 1) {
    static const double wfd[4] = {-1.0, 8.0, -8.0, 1.0};
    for (int t = 0; t < 4; ++t)
      rparts.emplace_back(wfd[t] / (12.0 * hfd), sig_top_rat(mdl, fdx[t]));
  } else {
    rparts.emplace_back(1.0, sig_top_rat(mdl, 0.0));
  }
  for (auto& [w, part] : rparts)
    for (int t = 0; t < j + 1; ++t) part = part.deriv();
  auto right = [&](cplx z) {
    CMat acc = CMat::zero(mdl.N);
    for (const auto& [w, part] : rparts) acc += cplx(w) * part.eval(z);
    return acc;
  };

  // outer contour about +i
  const int Mo = cfg.pole_samples;
  const double ro = cfg.contour_radius;
  cplx acc = 0.0;
  for (int t = 0; t < Mo; ++t) {
    cplx z = cplx(0.0, 1.0) + std::polar(ro, kTau * t / Mo);
    cplx dz = (z - cplx(0.0, 1.0)) * cplx(0.0, kTau / Mo);
    acc += (left(z) * right(z)).trace() * dz;
  }
  cplx pref = std::pow(cplx(0.0, -1.0), j + k + 1) / factorial_d(j + k + 1);
  return pref * acc;
}

// degree-5 quadrature on S^{m-1}: axis points and scaled corners
std::vector<std::pair<std::vector<double>, double>> sphere_rule(int m) {
  const double V = sphere_volume(m);
  const double wa = V / (m * (m + 2));
  const double wc = V * m / (std::ldexp(1.0, m) * (m + 2));
  std::vector<std::pair<std::vector<double>, double>> pts;
  for (int i = 0; i < m; ++i)
    for (int sgn : {1, -1}) {
      std::vector<double> p(m, 0.0);
      p[i] = sgn;
      pts.emplace_back(std::move(p), wa);
    }
  const double c = 1.0 / std::sqrt(double(m));
  for (int mask = 0; mask < (1 << m); ++mask) {
    std::vector<double> p(m);
    for (int i = 0; i < m; ++i) p[i] = (mask >> i & 1) ? c : -c;
    pts.emplace_back(std::move(p), wc);
  }
  return pts;
}

}  // namespace

double sphere_volume(int m) {
  return 2.0 * std::pow(std::numbers::pi, m / 2.0) / std::tgamma(m / 2.0);
}

OracleAssignment random_assignment(int n, int l, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(-3, 3);
  OracleAssignment asg;
  asg.n = n;
  asg.l = l;
  asg.a.assign(l, std::vector<double>(n));
  asg.da.assign(l, std::vector<double>(n));
  for (int j = 0; j < l; ++j)
    for (int al = 0; al < n; ++al) {
      asg.a[j][al] = dist(rng);
      asg.da[j][al] = dist(rng);
    }
  asg.hp = dist(rng);
  asg.s = dist(rng);
  return asg;
}

std::map<AtomId, std::complex<double>> assignment_atom_values(
    const OracleAssignment& asg) {
  std::map<AtomId, std::complex<double>> m;
  m[kHPrime] = asg.hp;
  m[kScurv] = asg.s;
  m[kPi] = std::numbers::pi;
  m[kOmega] = sphere_volume(asg.n - 1);
  for (int j = 0; j < asg.l; ++j)
    for (int al = 0; al < asg.n; ++al) {
      m[atom_a(j + 1, al + 1)] = asg.a[j][al];
      m[atom_da(j + 1, al + 1)] = asg.da[j][al];
    }
  return m;
}

std::complex<double> numeric_contour(
    const std::function<std::complex<double>(std::complex<double>)>& f,
    const OracleConfig& cfg) {
  const int M = cfg.contour_samples;
  cplx acc = 0.0;
  for (int t = 0; t < M; ++t) {
    cplx z = cplx(0.0, 1.0) + std::polar(cfg.contour_radius, kTau * t / M);
    cplx dz = (z - cplx(0.0, 1.0)) * cplx(0.0, kTau / M);
    acc += f(z) * dz;
  }
  return acc;
}

std::complex<double> oracle_boundary_case(Setting st, int l, CaseId c,
                                          const OracleAssignment& asg,
                                          const OracleConfig& cfg) {
  const int n = setting_dim(st);
  if (c == CaseId::aI) return 0.0;  // no tangential variation in the model
  CaseSpec spec{};
  for (const auto& cs : enumerate_cases(st))
    if (cs.id == c) spec = cs;

  static std::map<int, std::vector<CMat>> gcache;
  auto& g = gcache[n];
  if (g.empty()) g = gamma_numeric(n);

  Model mdl{n, l, 1 << (n / 2), &g, &asg, {}};
  cplx total = 0.0;
  if (cfg.sphere_samples > 0) {
    std::mt19937_64 rng(cfg.seed);
    std::normal_distribution<double> nd;
    cplx acc = 0.0;
    for (int t = 0; t < cfg.sphere_samples; ++t) {
      std::vector<double> p(n - 1);
      double norm = 0.0;
      for (auto& x : p) {
        x = nd(rng);
        norm += x * x;
      }
      norm = std::sqrt(norm);
      for (auto& x : p) x /= norm;
      mdl.xi = p;
      acc += case_integrand(mdl, spec, cfg);
    }
    total = acc / double(cfg.sphere_samples) * sphere_volume(n - 1);
  } else {
    for (const auto& [p, w] : sphere_rule(n - 1)) {
      mdl.xi = p;
      total += w * case_integrand(mdl, spec, cfg);
    }
  }
  return total;
}

std::complex<double> oracle_interior(Setting st, int l,
                                     const OracleAssignment& asg) {
  const int n = setting_dim(st);
  static std::map<int, std::vector<CMat>> gcache;
  auto& g = gcache[n];
  if (g.empty()) g = gamma_numeric(n);
  const int N = 1 << (n / 2);
  CMat m = CMat::ident(N);
  for (int j = 0; j < l; ++j) {
    CMat f = CMat::zero(N);
    for (int al = 0; al < n; ++al) f += cplx(asg.a[j][al]) * g[al];
    m = m * f;
  }
  double pref = (n - 2) * std::pow(4.0 * std::numbers::pi, n / 2);
  for (int t = 2; t <= n / 2 - 1; ++t) pref /= t;
  return m.trace() * pref * (-1.0 / 12.0) * asg.s;
}

}  // namespace ra
