#include "ra/poly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ra {

std::string atom_name(AtomId id) {
  switch (atom_kind(id)) {
    case AtomKind::HPrime:
      return "h'";
    case AtomKind::A:
      return "a(" + std::to_string(atom_j(id)) + "," +
             std::to_string(atom_alpha(id)) + ")";
    case AtomKind::DA:
      return "da(" + std::to_string(atom_j(id)) + "," +
             std::to_string(atom_alpha(id)) + ")";
    case AtomKind::Xi:
      return "xi(" + std::to_string(atom_alpha(id)) + ")";
    case AtomKind::Scurv:
      return "s";
    case AtomKind::Pi:
      return "pi";
    case AtomKind::Omega:
      return "Omega";
  }
  return "?";
}

bool Monomial::operator<(const Monomial& o) const {
  int da = degree(), db = o.degree();
  if (da != db) return da < db;
  return f < o.f;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.f.reserve(f.size() + o.f.size());
  auto i = f.begin();
  auto j = o.f.begin();
  while (i != f.end() && j != o.f.end()) {
    if (i->first < j->first)
      r.f.push_back(*i++);
    else if (j->first < i->first)
      r.f.push_back(*j++);
    else {
      r.f.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  r.f.insert(r.f.end(), i, f.end());
  r.f.insert(r.f.end(), j, o.f.end());
  return r;
}

Poly Poly::constant(const ExactScalar& c) {
  Poly p;
  if (!c.is_zero()) p.t.emplace(Monomial{}, c);
  return p;
}

Poly Poly::atom(AtomId id) {
  Poly p;
  p.t.emplace(Monomial{{{id, 1}}}, ExactScalar(1));
  return p;
}

void Poly::add_term(const Monomial& m, const ExactScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = t.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) t.erase(it);
  }
}

namespace {

// merge the (sorted) terms of o into t; linear in the combined size
template <typename Op>
void merge_terms(std::map<Monomial, ExactScalar>& t,
                 const std::map<Monomial, ExactScalar>& o, Op op) {
  auto hint = t.begin();
  for (const auto& [m, c] : o) {
    while (hint != t.end() && hint->first < m) ++hint;
    if (hint != t.end() && hint->first == m) {
      op(hint->second, c);
      if (hint->second.is_zero())
        hint = t.erase(hint);
    } else {
      ExactScalar v;
      op(v, c);
      hint = t.emplace_hint(hint, m, std::move(v));
      ++hint;
    }
  }
}

}  // namespace

Poly& Poly::operator+=(const Poly& o) {
  if (&o == this) {
    for (auto& [m, c] : t) c += c;
    return *this;
  }
  merge_terms(t, o.t, [](ExactScalar& a, const ExactScalar& b) { a += b; });
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (&o == this) {
    t.clear();
    return *this;
  }
  merge_terms(t, o.t, [](ExactScalar& a, const ExactScalar& b) { a -= b; });
  return *this;
}

Poly Poly::operator-() const {
  Poly r;
  for (const auto& [m, c] : t) r.t.emplace_hint(r.t.end(), m, -c);
  return r;
}

Poly Poly::scaled(const ExactScalar& c) const {
  if (c.is_zero()) return {};
  if (c.im == 0 && c.re == 1) return *this;
  if (c.im == 0 && c.re == -1) return -*this;
  Poly r;
  for (const auto& [m, k] : t) r.t.emplace_hint(r.t.end(), m, k * c);
  return r;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [ma, ca] : a.t)
    for (const auto& [mb, cb] : b.t) r.add_term(ma * mb, ca * cb);
  return r;
}

std::complex<double> poly_eval_numeric(
    const Poly& p, const std::map<AtomId, std::complex<double>>& assign) {
  std::complex<double> acc{0.0, 0.0};
  for (const auto& [m, c] : p.t) {
    std::complex<double> v = c.to_complex();
    for (const auto& [a, e] : m.f) {
      auto it = assign.find(a);
      if (it == assign.end())
        throw AlgebraError("missing assignment: " + atom_name(a));
      for (int k = 0; k < e; ++k) v *= it->second;
    }
    acc += v;
  }
  return acc;
}

Poly poly_dxn(const Poly& p) {
  Poly r;
  for (const auto& [m, c] : p.t) {
    int xi_deg = 0;
    for (const auto& [a, e] : m.f)
      if (atom_kind(a) == AtomKind::Xi) xi_deg += e;
    // product rule over the a-factors
    for (size_t i = 0; i < m.f.size(); ++i) {
      auto [a, e] = m.f[i];
      if (atom_kind(a) == AtomKind::DA)
        throw AlgebraError("derivative table exhausted");
      if (atom_kind(a) != AtomKind::A) continue;
      Monomial d;
      d.f.reserve(m.f.size() + 1);
      for (size_t k = 0; k < m.f.size(); ++k) {
        if (k == i) {
          if (e > 1) d.f.emplace_back(a, e - 1);
        } else {
          d.f.push_back(m.f[k]);
        }
      }
      d = d * Monomial{{{atom_da(atom_j(a), atom_alpha(a)), 1}}};
      r.add_term(d, c * ExactScalar(e));
    }
    // xi factors contribute (deg/2) h' times the same monomial
    if (xi_deg > 0) {
      Monomial d = m * Monomial{{{kHPrime, 1}}};
      r.add_term(d, c * ExactScalar(Rational(xi_deg, 2)));
    }
  }
  return r;
}

Poly poly_sphere_average(const Poly& p, int n) {
  const int m = n - 1;
  Poly r;
  for (const auto& [mon, c] : p.t) {
    Monomial rest;
    Rational num(1);
    long total = 0;
    bool odd = false;
    for (const auto& [a, e] : mon.f) {
      if (atom_kind(a) != AtomKind::Xi) {
        rest.f.emplace_back(a, e);
        continue;
      }
      if (e % 2) {
        odd = true;
        break;
      }
      num *= rat_double_factorial(e - 1);
      total += e;
    }
    if (odd) continue;
    Rational den(1);
    for (long t = 1; t <= total / 2; ++t) den *= (m + 2 * t - 2);
    r.add_term(rest, c * ExactScalar(num / den));
  }
  return r;
}

Poly poly_reduce_unit_sphere(const Poly& p, int n) {
  const AtomId last = atom_xi(n - 1);
  Poly rel = Poly::constant(ExactScalar(1));
  for (int k = 1; k <= n - 2; ++k) {
    Poly x = Poly::atom(atom_xi(k));
    rel -= x * x;
  }
  Poly out, work = p;
  while (!work.t.empty()) {
    Poly next;
    for (const auto& [m, c] : work.t) {
      int e = m.exponent(last);
      if (e >= 2) {
        Monomial m2;
        for (const auto& [a, ex] : m.f) {
          int e2 = (a == last) ? ex - 2 : ex;
          if (e2 > 0) m2.f.emplace_back(a, e2);
        }
        Poly stub;
        stub.t.emplace(m2, c);
        next += stub * rel;
      } else {
        out.add_term(m, c);
      }
    }
    work = std::move(next);
  }
  return out;
}

std::string poly_to_string(const Poly& p) {
  if (p.t.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.t) {
    std::string cs = c.str();
    bool negated = false;
    if (cs.size() > 1 && cs[0] == '-' && cs.find('+', 1) == std::string::npos &&
        cs.find('-', 1) == std::string::npos) {
      negated = true;
      cs = cs.substr(1);
    }
    os << (first ? (negated ? "-" : "") : (negated ? " - " : " + "));
    first = false;
    bool mixed = c.re != 0 && c.im != 0;
    bool unit = !mixed && (cs == "1");
    if (mixed)
      os << "(" << c.str() << ")";
    else if (!unit || m.f.empty())
      os << cs;
    bool need_star = mixed || !unit;
    for (const auto& [a, e] : m.f) {
      if (need_star && !(m.f.empty()))
        os << "*";
      else
        need_star = true;
      os << atom_name(a);
      if (e > 1) os << "^" << e;
    }
  }
  return os.str();
}

}  // namespace ra
