#pragma once

// Double-double arithmetic (about 31 significant digits) built from
// error-free transformations, plus a minimal complex type on top of it.

#include <cmath>
#include <complex>

namespace mszego {

namespace dd_detail {

inline void two_sum(double a, double b, double& s, double& e) {
  s = a + b;
  const double bb = s - a;
  e = (a - (s - bb)) + (b - bb);
}

inline void quick_two_sum(double a, double b, double& s, double& e) {
  s = a + b;
  e = b - (s - a);
}

inline void two_prod(double a, double b, double& p, double& e) {
  p = a * b;
  e = std::fma(a, b, -p);
}

}  // namespace dd_detail

struct ddouble {
  double hi = 0.0;
  double lo = 0.0;

  constexpr ddouble() = default;
  constexpr ddouble(double x) : hi(x), lo(0.0) {}  // NOLINT: implicit by design
  constexpr ddouble(double h, double l) : hi(h), lo(l) {}

  explicit operator double() const { return hi + lo; }
  double to_double() const { return hi + lo; }

  friend ddouble operator-(ddouble a) { return {-a.hi, -a.lo}; }

  friend ddouble operator+(ddouble a, ddouble b) {
    double s, e, t, f;
    dd_detail::two_sum(a.hi, b.hi, s, e);
    dd_detail::two_sum(a.lo, b.lo, t, f);
    e += t;
    dd_detail::quick_two_sum(s, e, s, e);
    e += f;
    dd_detail::quick_two_sum(s, e, s, e);
    return {s, e};
  }
  friend ddouble operator-(ddouble a, ddouble b) { return a + (-b); }

  friend ddouble operator*(ddouble a, ddouble b) {
    double p, e;
    dd_detail::two_prod(a.hi, b.hi, p, e);
    e += a.hi * b.lo + a.lo * b.hi;
    dd_detail::quick_two_sum(p, e, p, e);
    return {p, e};
  }

  friend ddouble operator/(ddouble a, ddouble b) {
    const double q1 = a.hi / b.hi;
    ddouble r = a - b * ddouble(q1);
    const double q2 = r.hi / b.hi;
    r = r - b * ddouble(q2);
    const double q3 = r.hi / b.hi;
    double s, e;
    dd_detail::quick_two_sum(q1, q2, s, e);
    return ddouble(s, e) + ddouble(q3);
  }

  ddouble& operator+=(ddouble b) { return *this = *this + b; }
  ddouble& operator-=(ddouble b) { return *this = *this - b; }
  ddouble& operator*=(ddouble b) { return *this = *this * b; }
  ddouble& operator/=(ddouble b) { return *this = *this / b; }

  friend bool operator<(ddouble a, ddouble b) { return a.hi < b.hi || (a.hi == b.hi && a.lo < b.lo); }
  friend bool operator>(ddouble a, ddouble b) { return b < a; }
  friend bool operator<=(ddouble a, ddouble b) { return !(b < a); }
  friend bool operator>=(ddouble a, ddouble b) { return !(a < b); }
};

inline ddouble abs(ddouble a) { return a.hi < 0.0 ? -a : a; }

inline ddouble sqrt(ddouble a) {
  if (a.hi <= 0.0) return ddouble(0.0);
  const double x = std::sqrt(a.hi);
  // one Newton step in double-double
  const ddouble xx = ddouble(x) * ddouble(x);
  return ddouble(x) + ddouble((a - xx).to_double() * 0.5 / x);
}

/// Complex number with double-double parts.
struct dcomplex {
  ddouble re, im;

  constexpr dcomplex() = default;
  constexpr dcomplex(double r) : re(r), im(0.0) {}  // NOLINT
  constexpr dcomplex(ddouble r) : re(r), im(0.0) {}  // NOLINT
  constexpr dcomplex(ddouble r, ddouble i) : re(r), im(i) {}
  dcomplex(std::complex<double> z) : re(z.real()), im(z.imag()) {}  // NOLINT

  std::complex<double> to_complex() const { return {re.to_double(), im.to_double()}; }

  friend dcomplex operator+(dcomplex a, dcomplex b) { return {a.re + b.re, a.im + b.im}; }
  friend dcomplex operator-(dcomplex a, dcomplex b) { return {a.re - b.re, a.im - b.im}; }
  friend dcomplex operator-(dcomplex a) { return {-a.re, -a.im}; }
  friend dcomplex operator*(dcomplex a, dcomplex b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend dcomplex operator*(dcomplex a, ddouble s) { return {a.re * s, a.im * s}; }
  friend dcomplex operator/(dcomplex a, ddouble s) { return {a.re / s, a.im / s}; }
  friend dcomplex operator/(dcomplex a, dcomplex b) {
    const ddouble d = b.re * b.re + b.im * b.im;
    return dcomplex{a.re * b.re + a.im * b.im, a.im * b.re - a.re * b.im} / d;
  }
  dcomplex& operator+=(dcomplex b) { return *this = *this + b; }
  dcomplex& operator-=(dcomplex b) { return *this = *this - b; }
  dcomplex& operator*=(dcomplex b) { return *this = *this * b; }
};

inline dcomplex conj(dcomplex a) { return {a.re, -a.im}; }
inline ddouble norm(dcomplex a) { return a.re * a.re + a.im * a.im; }

}  // namespace mszego
