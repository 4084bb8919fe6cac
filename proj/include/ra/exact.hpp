#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace ra {

using Rational = boost::multiprecision::cpp_rational;

struct AlgebraError : std::runtime_error {
  explicit AlgebraError(const std::string& m) : std::runtime_error(m) {}
};

struct SymbolError : std::runtime_error {
  explicit SymbolError(const std::string& m) : std::runtime_error(m) {}
};

inline double rat_to_double(const Rational& r) { return r.convert_to<double>(); }

inline std::string rat_to_string(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

// Gaussian rationals a + b*i; the coefficient field of the whole engine.
struct ExactScalar {
  Rational re{0}, im{0};

  ExactScalar() = default;
  ExactScalar(int v) : re(v) {}
  ExactScalar(long v) : re(v) {}
  ExactScalar(Rational r) : re(std::move(r)) {}
  ExactScalar(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static ExactScalar unit_i() { return ExactScalar(Rational(0), Rational(1)); }

  bool is_zero() const { return re == 0 && im == 0; }

  friend ExactScalar operator+(const ExactScalar& a, const ExactScalar& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend ExactScalar operator-(const ExactScalar& a, const ExactScalar& b) {
    return {a.re - b.re, a.im - b.im};
  }
  ExactScalar operator-() const { return {-re, -im}; }
  friend ExactScalar operator*(const ExactScalar& a, const ExactScalar& b) {
    // most scalars in practice are real or purely imaginary
    if (a.im == 0) {
      if (b.im == 0) return ExactScalar(a.re * b.re);
      if (b.re == 0) return {Rational(0), a.re * b.im};
      return {a.re * b.re, a.re * b.im};
    }
    if (a.re == 0) {
      if (b.im == 0) return {Rational(0), a.im * b.re};
      if (b.re == 0) return ExactScalar(-(a.im * b.im));
      return {-(a.im * b.im), a.im * b.re};
    }
    if (b.im == 0) return {a.re * b.re, a.im * b.re};
    if (b.re == 0) return {-(a.im * b.im), a.re * b.im};
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  ExactScalar& operator+=(const ExactScalar& o) {
    if (o.re != 0) re += o.re;
    if (o.im != 0) im += o.im;
    return *this;
  }
  ExactScalar& operator-=(const ExactScalar& o) {
    if (o.re != 0) re -= o.re;
    if (o.im != 0) im -= o.im;
    return *this;
  }
  ExactScalar& operator*=(const ExactScalar& o) {
    *this = *this * o;
    return *this;
  }

  ExactScalar inv() const {
    Rational d = re * re + im * im;
    if (d == 0) throw AlgebraError("division by zero");
    return {re / d, -im / d};
  }
  friend ExactScalar operator/(const ExactScalar& a, const ExactScalar& b) {
    return a * b.inv();
  }

  ExactScalar pow(int e) const {
    if (e < 0) return inv().pow(-e);
    ExactScalar acc(1), base = *this;
    while (e > 0) {
      if (e & 1) acc *= base;
      base *= base;
      e >>= 1;
    }
    return acc;
  }

  friend bool operator==(const ExactScalar&, const ExactScalar&) = default;

  std::complex<double> to_complex() const {
    return {rat_to_double(re), rat_to_double(im)};
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::string s;
    if (re != 0) s = rat_to_string(re);
    if (im != 0) {
      std::string iv =
          (im == 1) ? "i" : (im == -1) ? "-i" : rat_to_string(im) + "*i";
      if (s.empty())
        s = iv;
      else if (!iv.empty() && iv[0] == '-')
        s += "-" + iv.substr(1);
      else
        s += "+" + iv;
    }
    return s;
  }
};

inline Rational rat_binom(long n, long k) {
  if (k < 0 || (n >= 0 && k > n)) return Rational(0);
  Rational acc(1);
  for (long t = 0; t < k; ++t) acc = acc * Rational(n - t) / Rational(t + 1);
  return acc;
}

inline Rational rat_factorial(long n) {
  Rational acc(1);
  for (long t = 2; t <= n; ++t) acc *= t;
  return acc;
}

// (m)!! for odd m >= -1
inline Rational rat_double_factorial(long m) {
  Rational acc(1);
  for (long t = m; t >= 2; t -= 2) acc *= t;
  return acc;
}

}  // namespace ra
