#pragma once

// The truncated-exponential function f_c, its asymptotic coefficients
// alpha_i(c), the entire function E_c(zeta) = e^zeta / zeta^c - f_c(zeta)
// and the zeros of E_c.
//
// f_c(zeta) = e^zeta zeta^{-c} Q(c, zeta), Q the regularized upper
// incomplete gamma function, zeta^c on the principal branch.

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <optional>
#include <vector>

#include "core.hpp"
#include "ddouble.hpp"

namespace mszego {

inline bool is_integer(double c) { return c == std::floor(c); }

/// alpha_i(c) = sin(c pi) Gamma(i - c) / (pi (-1)^{i-1}); for integer c this
/// is 1/(c - i)! when i <= c and exactly 0 when i > c.
inline double alpha(int i, double c) {
  if (is_integer(c)) {
    const int ci = static_cast<int>(c);
    if (i > ci) return 0.0;
    return 1.0 / std::tgamma(static_cast<double>(ci - i + 1));
  }
  const double sign = ((i - 1) % 2 == 0) ? 1.0 : -1.0;
  return std::sin(c * kPi) * std::tgamma(static_cast<double>(i) - c) / (kPi * sign);
}

namespace specfun_detail {

inline constexpr double kSeriesRadius = 2.0;
inline constexpr double kSectorArg = 2.5;
inline constexpr double kAsymptoticRadius = 40.0;
inline constexpr int kAsymptoticTerms = 30;
inline constexpr int kMaxCfIterations = 5000;

inline double rgamma(double x) {
  if (x <= 0.0 && is_integer(x)) return 0.0;
  return 1.0 / std::tgamma(x);
}

/// E_c(zeta) = sum_k zeta^k / Gamma(c + 1 + k), summed in double-double.
inline cplx ec_series(cplx z, double c) {
  const dcomplex zz(z);
  dcomplex term(1.0);
  dcomplex sum(1.0);
  double maxterm = 1.0;
  const double az = std::abs(z);
  for (int k = 1; k < 4000; ++k) {
    term = term * zz / (ddouble(c) + ddouble(static_cast<double>(k)));
    sum += term;
    const double mag = std::abs(term.to_complex());
    maxterm = std::max(maxterm, mag);
    if (k > az && mag < 1e-34 * maxterm) break;
  }
  return sum.to_complex() * rgamma(c + 1.0);
}

/// e^zeta zeta^{-c}, principal branch.
inline cplx exp_over_pow(cplx z, double c) { return std::exp(z - c * std::log(z)); }

/// Legendre continued fraction for f_c, evaluated by the modified Lentz method.
inline cplx fc_continued_fraction(cplx z, double c) {
  constexpr double tiny = 1e-300;
  cplx f = z + 1.0 - c;
  if (f == cplx(0.0)) f = tiny;
  cplx C = f, D = 0.0;
  for (int n = 1; n <= kMaxCfIterations; ++n) {
    const double an = -n * (n - c);
    const cplx bn = z + (2.0 * n + 1.0 - c);
    D = bn + an * D;
    if (D == cplx(0.0)) D = tiny;
    C = bn + an / C;
    if (C == cplx(0.0)) C = tiny;
    D = 1.0 / D;
    const cplx delta = C * D;
    f *= delta;
    if (std::abs(delta - 1.0) < 1e-16) return rgamma(c) / f;
  }
  throw Error(ErrorKind::NoConvergence, "continued fraction for f_c did not converge");
}

inline cplx fc_asymptotic(cplx z, double c, int terms = kAsymptoticTerms) {
  cplx sum = 0.0;
  cplx zinv = 1.0 / z, p = zinv;
  double a = rgamma(c);
  for (int i = 1; i <= terms; ++i) {
    sum += a * p;
    a *= -(i - c);
    p *= zinv;
  }
  return sum;
}

inline cplx fc_integer(cplx z, int c) {
  // sum_{k<c} z^k / k! by Horner, divided by z^c
  cplx s = 0.0;
  for (int k = c - 1; k >= 0; --k) s = s * z + 1.0 / std::tgamma(static_cast<double>(k + 1));
  return s / std::pow(z, c);
}

}  // namespace specfun_detail

/// f_c by the general numerical route, ignoring the integer closed form.
inline cplx f_c_general(cplx zeta, double c) {
  using namespace specfun_detail;
  if (zeta.imag() == 0.0 && zeta.real() <= 0.0)
    throw Error(ErrorKind::OnNegativeAxis, "f_c is not defined on the non-positive real axis");
  const double r = std::abs(zeta);
  if (r <= kSeriesRadius) return exp_over_pow(zeta, c) - ec_series(zeta, c);
  if (std::abs(std::arg(zeta)) <= kSectorArg) return fc_continued_fraction(zeta, c);
  if (r <= kAsymptoticRadius) return exp_over_pow(zeta, c) - ec_series(zeta, c);
  return fc_asymptotic(zeta, c);
}

inline cplx f_c(cplx zeta, double c) {
  if (zeta.imag() == 0.0 && zeta.real() <= 0.0)
    throw Error(ErrorKind::OnNegativeAxis, "f_c is not defined on the non-positive real axis");
  if (is_integer(c) && c >= 1.0) return specfun_detail::fc_integer(zeta, static_cast<int>(c));
  return f_c_general(zeta, c);
}

/// The entire function e^zeta / zeta^c - f_c(zeta).
inline cplx E_c(cplx zeta, double c) {
  using namespace specfun_detail;
  const double r = std::abs(zeta);
  if (r <= kAsymptoticRadius && zeta.real() <= 2.0) return ec_series(zeta, c);
  if (zeta.imag() == 0.0 && zeta.real() < 0.0) {
    const cplx up(zeta.real(), 1e-8), dn(zeta.real(), -1e-8);
    return 0.5 * ((exp_over_pow(up, c) - f_c(up, c)) + (exp_over_pow(dn, c) - f_c(dn, c)));
  }
  return exp_over_pow(zeta, c) - f_c(zeta, c);
}

/// E_c'(zeta) = E_c - c E_{c+1}, with E_{c+1} = (E_c - 1/Gamma(c+1)) / zeta.
inline cplx E_c_derivative(cplx zeta, double c) {
  using specfun_detail::rgamma;
  if (std::abs(zeta) < 1e-8) return rgamma(c + 2.0) + 2.0 * zeta * rgamma(c + 3.0);
  const cplx e = E_c(zeta, c);
  return e - c * (e - rgamma(c + 1.0)) / zeta;
}

/// Evaluator bundle for one exponent.
struct FcEvaluator {
  double c = 1.0;
  int m_max = specfun_detail::kAsymptoticTerms;

  cplx f(cplx zeta) const { return f_c(zeta, c); }
  cplx E(cplx zeta) const { return E_c(zeta, c); }
};

// ---------------------------------------------------------------------------
// Zeros of E_c in a rectangle.

struct Box {
  double xmin, xmax, ymin, ymax;
};

namespace specfun_detail {

using Fn = std::function<cplx(cplx)>;

/// Total change of arg f along the segment p -> q, refined until each step
/// turns by less than pi/4.
inline double arg_change(const Fn& f, cplx p, cplx q, double tol) {
  const int n0 = 32;
  double total = 0.0;
  cplx fp = f(p);
  if (fp == cplx(0.0)) throw Error(ErrorKind::ContourThroughZero, "zero on the box boundary");
  for (int s = 0; s < n0; ++s) {
    const cplx z0 = p + (q - p) * (static_cast<double>(s) / n0);
    const cplx z1 = p + (q - p) * (static_cast<double>(s + 1) / n0);
    // depth-first refinement of [z0, z1]
    std::function<double(cplx, cplx, cplx, cplx)> seg = [&](cplx a, cplx b, cplx fa, cplx fb) -> double {
      if (fb == cplx(0.0)) throw Error(ErrorKind::ContourThroughZero, "zero on the box boundary");
      const double d = std::arg(fb / fa);
      if (std::abs(d) < kPi / 4.0) return d;
      if (std::abs(b - a) < tol) throw Error(ErrorKind::ContourThroughZero, "zero within tol of the box boundary");
      const cplx m = 0.5 * (a + b);
      const cplx fm = f(m);
      if (fm == cplx(0.0)) throw Error(ErrorKind::ContourThroughZero, "zero on the box boundary");
      return seg(a, m, fa, fm) + seg(m, b, fm, fb);
    };
    const cplx f1 = f(z1);
    total += seg(z0, z1, fp, f1);
    fp = f1;
  }
  return total;
}

inline int winding(const Fn& f, const Box& b, double tol) {
  const cplx c00(b.xmin, b.ymin), c10(b.xmax, b.ymin), c11(b.xmax, b.ymax), c01(b.xmin, b.ymax);
  const double t = arg_change(f, c00, c10, tol) + arg_change(f, c10, c11, tol) + arg_change(f, c11, c01, tol) +
                   arg_change(f, c01, c00, tol);
  const double w = t / (2.0 * kPi);
  const double rw = std::round(w);
  if (std::abs(w - rw) > 0.1) throw Error(ErrorKind::ContourThroughZero, "winding number is not an integer");
  return static_cast<int>(rw);
}

}  // namespace specfun_detail

/// Winding number of E_c around the boundary of `box` (counterclockwise).
inline int winding_number_E_c(double c, const Box& box, double tol = 1e-10) {
  return specfun_detail::winding([c](cplx z) { return E_c(z, c); }, box, tol);
}

/// Newton iteration on E_c from `start`; converged when the Newton step is
/// below tol * max(1, |zeta|), i.e. |E_c| < tol * |E_c'| * max(1, |zeta|).
inline std::optional<cplx> newton_E_c(double c, cplx start, double tol, int max_iter = 60) {
  cplx z = start;
  for (int it = 0; it < max_iter; ++it) {
    const cplx e = E_c(z, c);
    const cplx d = E_c_derivative(z, c);
    if (d == cplx(0.0)) return std::nullopt;
    const cplx step = e / d;
    z -= step;
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return std::nullopt;
    if (std::abs(step) <= tol * std::max(1.0, std::abs(z))) return z;
  }
  return std::nullopt;
}

/// All zeros of E_c inside `box`, located by the argument principle on a
/// recursively subdivided box and polished by Newton.
inline std::vector<cplx> zeros_E_c(double c, const Box& box, double tol = 1e-10) {
  using namespace specfun_detail;
  const Fn f = [c](cplx z) { return E_c(z, c); };
  std::vector<cplx> out;
  const int total = winding(f, box, tol);

  std::function<void(const Box&, int, int)> rec = [&](const Box& b, int count, int depth) {
    if (count == 0) return;
    if (depth > 60) throw Error(ErrorKind::NoConvergence, "zero subdivision too deep");
    const cplx center(0.5 * (b.xmin + b.xmax), 0.5 * (b.ymin + b.ymax));
    const double size = std::max(b.xmax - b.xmin, b.ymax - b.ymin);
    if (count == 1) {
      auto z = newton_E_c(c, center, 1e-15);
      if (z && z->real() >= b.xmin && z->real() <= b.xmax && z->imag() >= b.ymin && z->imag() <= b.ymax) {
        out.push_back(*z);
        return;
      }
    }
    if (size < tol) {
      for (int m = 0; m < count; ++m) out.push_back(center);
      return;
    }
    // Split into quadrants; if a split line passes through a zero, shift it.
    static constexpr double fractions[] = {0.5, 0.4637, 0.5371, 0.4219, 0.5813};
    for (double fr : fractions) {
      const double xm = b.xmin + fr * (b.xmax - b.xmin);
      const double ym = b.ymin + fr * (b.ymax - b.ymin);
      const Box q[4] = {{b.xmin, xm, b.ymin, ym}, {xm, b.xmax, b.ymin, ym}, {xm, b.xmax, ym, b.ymax}, {b.xmin, xm, ym, b.ymax}};
      int counts[4];
      try {
        for (int s = 0; s < 4; ++s) counts[s] = winding(f, q[s], tol);
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::ContourThroughZero) continue;
        throw;
      }
      if (counts[0] + counts[1] + counts[2] + counts[3] != count) continue;
      for (int s = 0; s < 4; ++s) rec(q[s], counts[s], depth + 1);
      return;
    }
    throw Error(ErrorKind::NoConvergence, "could not subdivide box around zeros");
  };
  rec(box, total, 0);
  std::sort(out.begin(), out.end(), [](cplx x, cplx y) { return x.imag() != y.imag() ? x.imag() < y.imag() : x.real() < y.real(); });
  return out;
}

}  // namespace mszego
