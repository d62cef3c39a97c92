#pragma once

// Exact monic orthogonal polynomial for the planar weight
// exp(-N|z|^2) prod |z - a_j|^{2 c_j}: moments, Gram solve, norm and roots.

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <string>
#include <vector>

#include "core.hpp"
#include "curve.hpp"
#include "ddouble.hpp"
#include "quadrature.hpp"

namespace mszego {

inline constexpr ddouble kPiDD{3.141592653589793116e+00, 1.224646799147353207e-16};

/// Integral of z^p conj(z)^q exp(-N|z|^2) over the plane.
inline double gaussian_moment(int p, int q, double N) {
  if (p != q) return 0.0;
  return kPi * std::tgamma(static_cast<double>(p + 1)) / std::pow(N, p + 1);
}

enum class MomentMethod { ExactIntegerC, Quadrature };

inline const char* to_string(MomentMethod m) {
  return m == MomentMethod::ExactIntegerC ? "exact" : "quad";
}

/// M[j][k] = integral of z^j conj(z)^k dmu, 0 <= j, k <= n, in double-double.
struct MomentMatrix {
  int n = 0;
  double N = 1.0;
  MomentMethod method = MomentMethod::ExactIntegerC;
  double error_estimate = 0.0;  ///< quadrature only: normalized change at the last mesh doubling
  std::vector<dcomplex> m;

  MomentMatrix() = default;
  MomentMatrix(int n_, double N_, MomentMethod meth)
      : n(n_), N(N_), method(meth), m(static_cast<std::size_t>((n_ + 1) * (n_ + 1))) {}

  dcomplex& at(int j, int k) { return m[static_cast<std::size_t>(j * (n + 1) + k)]; }
  const dcomplex& at(int j, int k) const { return m[static_cast<std::size_t>(j * (n + 1) + k)]; }
  cplx value(int j, int k) const { return at(j, k).to_complex(); }
};

/// Coefficients of prod (z - a_i)^{c_i}, lowest degree first.
inline std::vector<dcomplex> weight_polynomial(const Configuration& cfg) {
  std::vector<dcomplex> coef{dcomplex(1.0)};
  for (std::size_t i = 0; i < cfg.nu(); ++i) {
    const int ci = static_cast<int>(cfg.c[i]);
    const dcomplex a(cfg.a[i]);
    for (int r = 0; r < ci; ++r) {
      std::vector<dcomplex> next(coef.size() + 1);
      for (std::size_t p = 0; p < coef.size(); ++p) {
        next[p + 1] += coef[p];
        next[p] -= coef[p] * a;
      }
      coef = std::move(next);
    }
  }
  return coef;
}

/// Moments for positive integer exponents from the expanded weight polynomial.
inline MomentMatrix exact_moments(const Configuration& cfg, int n) {
  for (double c : cfg.c)
    if (c != std::floor(c) || c < 1.0)
      throw Error(ErrorKind::NonIntegerExponent, "exact moments need positive integer exponents");
  const double N = cfg.scale();
  const auto alpha = weight_polynomial(cfg);
  const int D = static_cast<int>(alpha.size()) - 1;

  // G[m] = pi m! / N^{m+1}
  std::vector<ddouble> G(static_cast<std::size_t>(n + D + 1));
  {
    ddouble fact(1.0), Np(N);
    for (int m = 0; m <= n + D; ++m) {
      if (m > 0) {
        fact *= ddouble(static_cast<double>(m));
        Np *= ddouble(N);
      }
      G[static_cast<std::size_t>(m)] = kPiDD * fact / Np;
    }
  }

  MomentMatrix M(n, N, MomentMethod::ExactIntegerC);
  for (int j = 0; j <= n; ++j)
    for (int k = 0; k <= j; ++k) {
      dcomplex s;
      for (int p = 0; p <= D; ++p) {
        const int q = j + p - k;
        if (q < 0 || q > D) continue;
        s += alpha[static_cast<std::size_t>(p)] * conj(alpha[static_cast<std::size_t>(q)]) * G[static_cast<std::size_t>(j + p)];
      }
      M.at(j, k) = s;
      M.at(k, j) = conj(s);
    }
  return M;
}

// ---------------------------------------------------------------------------
// Quadrature moments.

struct QuadOptions {
  double tol = 1e-10;
  int max_level = 4;
  double radius_factor = 1.0;  ///< multiplies R = sqrt((2n + 40)/N)
};

namespace quad_detail {

/// C-infinity step: 1 for t <= 0, 0 for t >= 1.
inline double smooth_step(double t) {
  if (t <= 0.0) return 1.0;
  if (t >= 1.0) return 0.0;
  const double g0 = std::exp(-1.0 / (1.0 - t));
  const double g1 = std::exp(-1.0 / t);
  return g0 / (g0 + g1);
}

struct Patch {
  cplx center;
  double c;
  double r_in, r_out;
};

inline std::vector<Patch> make_patches(const Configuration& cfg) {
  std::vector<Patch> out;
  for (std::size_t j = 0; j < cfg.nu(); ++j) {
    double sep = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < cfg.nu(); ++i)
      if (i != j) sep = std::min(sep, std::abs(cfg.a[i] - cfg.a[j]));
    const double r_out = std::min(0.1, 0.45 * sep);
    out.push_back({cfg.a[j], cfg.c[j], 0.5 * r_out, r_out});
  }
  return out;
}

inline double bump(const Patch& p, cplx z) {
  return smooth_step((std::abs(z - p.center) - p.r_in) / (p.r_out - p.r_in));
}

inline double log_weight(const Configuration& cfg, cplx z, std::size_t skip = static_cast<std::size_t>(-1)) {
  double v = -cfg.scale() * std::norm(z);
  for (std::size_t i = 0; i < cfg.nu(); ++i)
    if (i != skip) v += cfg.c[i] * std::log(std::norm(z - cfg.a[i]));
  return v;
}

/// Adds w * z^p conj(z)^q into the lower triangle (p >= q) of acc.
inline void accumulate(std::vector<cplx>& acc, int n, cplx z, double w, std::vector<cplx>& zp) {
  zp[0] = 1.0;
  for (int p = 1; p <= n; ++p) zp[static_cast<std::size_t>(p)] = zp[static_cast<std::size_t>(p - 1)] * z;
  for (int p = 0; p <= n; ++p) {
    const cplx wp = w * zp[static_cast<std::size_t>(p)];
    for (int q = 0; q <= p; ++q) acc[static_cast<std::size_t>(p * (n + 1) + q)] += wp * std::conj(zp[static_cast<std::size_t>(q)]);
  }
}

/// Panel breakpoints of [lo, hi] with every panel no wider than h.
inline std::vector<double> panels(std::vector<double> brk, double lo, double hi, double h) {
  brk.push_back(lo);
  brk.push_back(hi);
  for (double& b : brk) b = std::clamp(b, lo, hi);
  std::sort(brk.begin(), brk.end());
  brk.erase(std::unique(brk.begin(), brk.end()), brk.end());
  std::vector<double> out{brk.front()};
  for (std::size_t i = 0; i + 1 < brk.size(); ++i) {
    const double len = brk[i + 1] - brk[i];
    if (len <= 0.0) continue;
    const int m = std::max(1, static_cast<int>(std::ceil(len / h)));
    for (int s = 1; s <= m; ++s) out.push_back(brk[i] + len * s / m);
  }
  return out;
}

/// One quadrature pass at refinement `level`; lower triangle in double.
inline std::vector<cplx> quad_pass(const Configuration& cfg, int n, int level, double radius_factor) {
  const double N = cfg.scale();
  const double R = radius_factor * std::sqrt((2.0 * n + 40.0) / N);
  const auto patches = make_patches(cfg);
  const int scale = 1 << level;
  const int nodes_per_panel = 16;
  const GaussRule gl = gauss_legendre(nodes_per_panel);
  std::vector<cplx> acc(static_cast<std::size_t>((n + 1) * (n + 1)), 0.0);
  std::vector<cplx> zp(static_cast<std::size_t>(n + 1));

  // Global polar grid around the origin; weight times (1 - sum of bumps).
  std::vector<double> brk;
  for (const auto& p : patches) {
    const double r0 = std::abs(p.center);
    for (double s : {-p.r_out, -p.r_in, p.r_in, p.r_out}) brk.push_back(r0 + s);
  }
  const auto rb = panels(brk, 0.0, R, 0.1 / scale);
  const int Mt = std::max(256, 8 * (n + 1)) * scale;
  std::vector<cplx> rot(static_cast<std::size_t>(Mt));
  for (int m = 0; m < Mt; ++m) rot[static_cast<std::size_t>(m)] = std::polar(1.0, 2.0 * kPi * m / Mt);
  std::vector<cplx> G(static_cast<std::size_t>(n + 1));
  std::vector<double> rp(static_cast<std::size_t>(2 * n + 2));
  for (std::size_t b = 0; b + 1 < rb.size(); ++b) {
    const double lo = rb[b], hi = rb[b + 1];
    for (int i = 0; i < nodes_per_panel; ++i) {
      const double r = lo + 0.5 * (hi - lo) * (gl.x[static_cast<std::size_t>(i)] + 1.0);
      const double wr = 0.5 * (hi - lo) * gl.w[static_cast<std::size_t>(i)];
      std::fill(G.begin(), G.end(), cplx(0.0));
      for (int m = 0; m < Mt; ++m) {
        const cplx z = r * rot[static_cast<std::size_t>(m)];
        double chi = 1.0;
        for (const auto& p : patches) chi -= bump(p, z);
        if (chi <= 0.0) continue;
        const double g = chi * std::exp(log_weight(cfg, z));
        if (g == 0.0) continue;
        // G[d] += g e^{i d theta}
        cplx e = 1.0;
        const cplx step = rot[static_cast<std::size_t>(m)];
        for (int d = 0; d <= n; ++d) {
          G[static_cast<std::size_t>(d)] += g * e;
          e *= step;
        }
      }
      const double dth = 2.0 * kPi / Mt;
      rp[0] = 1.0;
      for (int e = 1; e < 2 * n + 2; ++e) rp[static_cast<std::size_t>(e)] = rp[static_cast<std::size_t>(e - 1)] * r;
      for (int p = 0; p <= n; ++p)
        for (int q = 0; q <= p; ++q)
          acc[static_cast<std::size_t>(p * (n + 1) + q)] +=
              wr * dth * rp[static_cast<std::size_t>(p + q + 1)] * G[static_cast<std::size_t>(p - q)];
    }
  }

  // Local polar patches: Gauss-Jacobi in the inner disk absorbs |z - a_j|^{2 c_j}.
  for (std::size_t j = 0; j < patches.size(); ++j) {
    const auto& P = patches[j];
    const double beta = 2.0 * P.c + 1.0;
    const GaussRule gj = gauss_jacobi(24 * scale, 0.0, beta);
    const int Mp = (64 + 2 * n) * scale;
    const double dphi = 2.0 * kPi / Mp;
    auto add_ring = [&](double rho, double radial_weight) {
      for (int m = 0; m < Mp; ++m) {
        const cplx z = P.center + std::polar(rho, dphi * m);
        const double chi = bump(P, z);
        if (chi <= 0.0) continue;
        const double w = radial_weight * dphi * chi * std::exp(log_weight(cfg, z, j));
        accumulate(acc, n, z, w, zp);
      }
    };
    const double half = 0.5 * P.r_in;
    const double pref = std::pow(half, beta + 1.0);
    for (std::size_t i = 0; i < gj.x.size(); ++i) add_ring(half * (gj.x[i] + 1.0), pref * gj.w[i]);
    const auto ob = panels({}, P.r_in, P.r_out, 0.05 / scale);
    for (std::size_t b = 0; b + 1 < ob.size(); ++b) {
      const double lo = ob[b], hi = ob[b + 1];
      for (int i = 0; i < nodes_per_panel; ++i) {
        const double rho = lo + 0.5 * (hi - lo) * (gl.x[static_cast<std::size_t>(i)] + 1.0);
        add_ring(rho, 0.5 * (hi - lo) * gl.w[static_cast<std::size_t>(i)] * std::pow(rho, beta));
      }
    }
  }
  return acc;
}

inline double normalized_change(const std::vector<cplx>& a, const std::vector<cplx>& b, int n) {
  double worst = 0.0;
  for (int p = 0; p <= n; ++p)
    for (int q = 0; q <= p; ++q) {
      const double s = std::sqrt(std::abs(b[static_cast<std::size_t>(p * (n + 1) + p)].real() *
                                          b[static_cast<std::size_t>(q * (n + 1) + q)].real()));
      worst = std::max(worst, std::abs(a[static_cast<std::size_t>(p * (n + 1) + q)] - b[static_cast<std::size_t>(p * (n + 1) + q)]) / s);
    }
  return worst;
}

}  // namespace quad_detail

/// Moments by polar quadrature with mesh doubling until the entrywise change,
/// normalized by sqrt(M[j][j] M[k][k]), is below opts.tol.
inline MomentMatrix quad_moments(const Configuration& cfg, int n, const QuadOptions& opts = {}) {
  using namespace quad_detail;
  auto prev = quad_pass(cfg, n, 0, opts.radius_factor);
  for (int level = 1; level <= opts.max_level; ++level) {
    auto cur = quad_pass(cfg, n, level, opts.radius_factor);
    const double change = normalized_change(prev, cur, n);
    if (change < opts.tol) {
      MomentMatrix M(n, cfg.scale(), MomentMethod::Quadrature);
      M.error_estimate = change;
      for (int p = 0; p <= n; ++p)
        for (int q = 0; q <= p; ++q) {
          const cplx v = cur[static_cast<std::size_t>(p * (n + 1) + q)];
          M.at(p, q) = dcomplex(p == q ? cplx(v.real(), 0.0) : v);
          M.at(q, p) = conj(M.at(p, q));
        }
      return M;
    }
    prev = std::move(cur);
  }
  throw Error(ErrorKind::QuadratureNotConverged, "moment quadrature did not reach the requested accuracy");
}

inline MomentMatrix moments(const Configuration& cfg, int n, bool exact) {
  return exact ? exact_moments(cfg, n) : quad_moments(cfg, n);
}

// ---------------------------------------------------------------------------
// Monic orthogonal polynomial.

struct MonicPolynomial {
  int n = 0;
  std::vector<dcomplex> b;  ///< b_0 .. b_{n-1}; the leading coefficient is 1
  ddouble h;                ///< squared norm h_n
  double max_residual = 0.0;  ///< max_m |<p_n, z^m>| / sqrt(h_n M[m][m])
  double pivot_ratio = 1.0;   ///< max / min Cholesky pivot of the scaled Gram matrix

  cplx coefficient(int k) const { return k == n ? cplx(1.0) : b[static_cast<std::size_t>(k)].to_complex(); }

  dcomplex eval_dd(cplx z) const {
    dcomplex v(1.0);
    const dcomplex zz(z);
    for (int k = n - 1; k >= 0; --k) v = v * zz + b[static_cast<std::size_t>(k)];
    return v;
  }
  cplx operator()(cplx z) const { return eval_dd(z).to_complex(); }
};

inline constexpr double kMinPivot = 1e-30;

/// Solves sum_k b_k M[k][m] = -M[n][m] (m < n) by a diagonally scaled
/// Cholesky factorization in double-double.
inline MonicPolynomial monic_op(const MomentMatrix& M, int n) {
  if (n > M.n) throw Error(ErrorKind::BadDegree, "moment matrix too small for requested degree");
  MonicPolynomial P;
  P.n = n;
  P.b.assign(static_cast<std::size_t>(n), dcomplex());
  if (n > 0) {
    std::vector<ddouble> s(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) s[static_cast<std::size_t>(i)] = ddouble(1.0) / sqrt(M.at(i, i).re);
    // A = S G S with G[m][k] = M[m][k]; solve G x = -col, b = conj(x).
    std::vector<dcomplex> A(static_cast<std::size_t>(n * n));
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k)
        A[static_cast<std::size_t>(i * n + k)] = M.at(i, k) * (s[static_cast<std::size_t>(i)] * s[static_cast<std::size_t>(k)]);
    // Cholesky A = L L^H, stored in the lower triangle.
    double pmax = 0.0, pmin = std::numeric_limits<double>::infinity();
    for (int k = 0; k < n; ++k) {
      ddouble d = A[static_cast<std::size_t>(k * n + k)].re;
      for (int p = 0; p < k; ++p) d -= norm(A[static_cast<std::size_t>(k * n + p)]);
      if (!(d.hi > kMinPivot)) throw Error(ErrorKind::IllConditioned, "Gram matrix is not numerically positive definite at row " + std::to_string(k));
      pmax = std::max(pmax, d.hi);
      pmin = std::min(pmin, d.hi);
      const ddouble lkk = sqrt(d);
      A[static_cast<std::size_t>(k * n + k)] = dcomplex(lkk);
      for (int i = k + 1; i < n; ++i) {
        dcomplex v = A[static_cast<std::size_t>(i * n + k)];
        for (int p = 0; p < k; ++p) v -= A[static_cast<std::size_t>(i * n + p)] * conj(A[static_cast<std::size_t>(k * n + p)]);
        A[static_cast<std::size_t>(i * n + k)] = v / lkk;
      }
    }
    P.pivot_ratio = pmax / pmin;
    // Forward and back substitution on y = -S col.
    std::vector<dcomplex> y(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      dcomplex v = -(M.at(i, n) * s[static_cast<std::size_t>(i)]);
      for (int p = 0; p < i; ++p) v -= A[static_cast<std::size_t>(i * n + p)] * y[static_cast<std::size_t>(p)];
      y[static_cast<std::size_t>(i)] = v / A[static_cast<std::size_t>(i * n + i)].re;
    }
    for (int i = n - 1; i >= 0; --i) {
      dcomplex v = y[static_cast<std::size_t>(i)];
      for (int p = i + 1; p < n; ++p) v -= conj(A[static_cast<std::size_t>(p * n + i)]) * y[static_cast<std::size_t>(p)];
      y[static_cast<std::size_t>(i)] = v / A[static_cast<std::size_t>(i * n + i)].re;
    }
    for (int i = 0; i < n; ++i) P.b[static_cast<std::size_t>(i)] = conj(y[static_cast<std::size_t>(i)] * s[static_cast<std::size_t>(i)]);
  }
  dcomplex h = M.at(n, n);
  for (int k = 0; k < n; ++k) h += P.b[static_cast<std::size_t>(k)] * M.at(k, n);
  P.h = h.re;
  if (!(P.h.hi > 0.0)) throw Error(ErrorKind::IllConditioned, "computed norm h_n is not positive");

  for (int m = 0; m < n; ++m) {
    dcomplex r = M.at(n, m);
    for (int k = 0; k < n; ++k) r += P.b[static_cast<std::size_t>(k)] * M.at(k, m);
    const double scale = std::sqrt(P.h.to_double() * M.at(m, m).re.to_double());
    P.max_residual = std::max(P.max_residual, std::abs(r.to_complex()) / scale);
  }
  return P;
}

/// |<p, z^m>| / sqrt(h_n M[m][m]) for m < n against an arbitrary moment matrix.
inline std::vector<double> orthogonality_residuals(const MonicPolynomial& P, const MomentMatrix& M) {
  std::vector<double> out;
  for (int m = 0; m < P.n; ++m) {
    dcomplex r = M.at(P.n, m);
    for (int k = 0; k < P.n; ++k) r += P.b[static_cast<std::size_t>(k)] * M.at(k, m);
    out.push_back(std::abs(r.to_complex()) / std::sqrt(P.h.to_double() * M.at(m, m).re.to_double()));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Roots.

struct RootResult {
  std::vector<cplx> roots;
  std::vector<double> residual;  ///< |p(r)| / sum_k |b_k| |r|^k
  int sweeps = 0;
  double vieta_error = 0.0;
};

/// All roots by Aberth-Ehrlich iteration with double-double Horner evaluation.
inline RootResult roots(const MonicPolynomial& P, int max_sweeps = 500) {
  const int n = P.n;
  if (n < 1) throw Error(ErrorKind::BadDegree, "roots need degree >= 1");
  RootResult out;

  auto eval = [&](cplx z, cplx& p, cplx& dp, double& scale) {
    dcomplex v(1.0), d(0.0);
    const dcomplex zz(z);
    double sc = std::pow(std::abs(z), n);
    for (int k = n - 1; k >= 0; --k) {
      d = d * zz + v;
      v = v * zz + P.b[static_cast<std::size_t>(k)];
      sc += std::abs(P.b[static_cast<std::size_t>(k)].to_complex()) * std::pow(std::abs(z), k);
    }
    p = v.to_complex();
    dp = d.to_complex();
    scale = sc;
  };

  double r0 = 0.0;
  if (std::abs(P.coefficient(0)) > 0.0) {
    r0 = std::pow(std::abs(P.coefficient(0)), 1.0 / n);
  } else {
    for (int k = 0; k < n; ++k) r0 = std::max(r0, std::pow(std::abs(P.coefficient(k)), 1.0 / (n - k)));
  }
  if (!(r0 > 0.0)) r0 = 1e-3;
  std::vector<cplx> z(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) z[static_cast<std::size_t>(i)] = std::polar(r0, 2.0 * kPi * i / n + 0.4);
  std::vector<bool> done(static_cast<std::size_t>(n), false);

  int sweep = 0;
  for (; sweep < max_sweeps; ++sweep) {
    bool all = true;
    for (int i = 0; i < n; ++i) {
      if (done[static_cast<std::size_t>(i)]) continue;
      cplx p, dp;
      double sc;
      eval(z[static_cast<std::size_t>(i)], p, dp, sc);
      if (p == cplx(0.0)) {
        done[static_cast<std::size_t>(i)] = true;
        continue;
      }
      const cplx w = p / dp;
      cplx s = 0.0;
      for (int j = 0; j < n; ++j)
        if (j != i) s += 1.0 / (z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)]);
      const cplx corr = w / (1.0 - w * s);
      z[static_cast<std::size_t>(i)] -= corr;
      if (std::abs(corr) <= 1e-10 * std::max(1.0, std::abs(z[static_cast<std::size_t>(i)])) ||
          std::abs(w) <= 1e-14 * std::max(1e-300, std::abs(z[static_cast<std::size_t>(i)])))
        done[static_cast<std::size_t>(i)] = true;
      else
        all = false;
    }
    if (all) break;
  }
  if (sweep >= max_sweeps) throw Error(ErrorKind::NoConvergence, "Aberth iteration did not converge");
  // One extra polishing sweep of plain Newton steps.
  for (int i = 0; i < n; ++i) {
    cplx p, dp;
    double sc;
    eval(z[static_cast<std::size_t>(i)], p, dp, sc);
    if (dp != cplx(0.0) && std::abs(p / dp) < 1e-6 * std::max(1.0, std::abs(z[static_cast<std::size_t>(i)])))
      z[static_cast<std::size_t>(i)] -= p / dp;
  }
  out.sweeps = sweep + 1;
  out.roots = z;
  for (const cplx& r : z) {
    cplx p, dp;
    double sc;
    eval(r, p, dp, sc);
    out.residual.push_back(std::abs(p) / sc);
  }

  // Vieta: expand prod (x - r_i) and compare with the coefficients.
  std::vector<dcomplex> e{dcomplex(1.0)};
  for (const cplx& r : z) {
    std::vector<dcomplex> nx(e.size() + 1);
    for (std::size_t p = 0; p < e.size(); ++p) {
      nx[p + 1] += e[p];
      nx[p] -= e[p] * dcomplex(r);
    }
    e = std::move(nx);
  }
  double cmax = 1.0, dmax = 0.0;
  for (int k = 0; k < n; ++k) {
    cmax = std::max(cmax, std::abs(P.coefficient(k)));
    dmax = std::max(dmax, std::abs((e[static_cast<std::size_t>(k)] - P.b[static_cast<std::size_t>(k)]).to_complex()));
  }
  out.vieta_error = dmax / cmax;
  if (out.vieta_error > 1e-6) throw Error(ErrorKind::NoConvergence, "roots do not reproduce the coefficients");
  std::sort(out.roots.begin(), out.roots.end(), [](cplx a, cplx b) { return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag(); });
  // keep residuals aligned with the sorted roots
  out.residual.clear();
  for (const cplx& r : out.roots) {
    cplx p, dp;
    double sc;
    eval(r, p, dp, sc);
    out.residual.push_back(std::abs(p) / sc);
  }
  return out;
}

struct DistanceSummary {
  std::size_t count = 0;
  double max = 0.0;
  double mean = 0.0;
  bool empty() const { return count == 0; }
};

/// Distance from each root to the curve, skipping roots within `exclusion[j]` of a_j.
inline DistanceSummary root_curve_distance(const std::vector<cplx>& rts, const CurveSet& curve,
                                           const std::vector<cplx>& centers, const std::vector<double>& exclusion) {
  DistanceSummary s;
  double total = 0.0;
  for (const cplx& r : rts) {
    bool skip = false;
    for (std::size_t j = 0; j < centers.size(); ++j)
      if (std::abs(r - centers[j]) < exclusion[j]) skip = true;
    if (skip) continue;
    const double d = curve_distance(r, curve);
    s.max = std::max(s.max, d);
    total += d;
    ++s.count;
  }
  if (s.count) s.mean = total / static_cast<double>(s.count);
  return s;
}

}  // namespace mszego
