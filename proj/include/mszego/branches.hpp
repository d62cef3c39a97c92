#pragma once

// Branches of (z - a_j)^{c_j}, [(z - a_j)^{c_j}]_{B[k]}, z^{c_j}, W, W_k and
// the phase constants eta_j, eta_kj, eta~_kj.
//
// Cut sets:
//   B_j    = {a_j t : t >= 1}
//   Bhat_j = {a_j t : 0 <= t <= 1}
//   B_jk   = {a_j + (a_j - a_k) t : t >= 0}
// The "+" side of a ray is the side to its left when walking away from its
// start point. With these branches  value_+ = eta_j * value_-  across B_j.

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "core.hpp"

namespace mszego {

inline constexpr double kCutTol = 1e-12;
inline constexpr double kSideOffset = 1e-8;

/// Distance from z to the ray {p + d t : t >= 0}.
inline double ray_distance(cplx z, cplx p, cplx d) {
  const double t = std::real((z - p) * std::conj(d)) / std::norm(d);
  if (t <= 0.0) return std::abs(z - p);
  return std::abs(z - p - t * d);
}

/// Distance from z to the segment [p, q].
inline double segment_distance(cplx z, cplx p, cplx q) {
  const cplx d = q - p;
  double t = std::real((z - p) * std::conj(d)) / std::norm(d);
  t = std::clamp(t, 0.0, 1.0);
  return std::abs(z - p - t * d);
}

/// A logarithm of w whose discontinuity lies along the direction d; the
/// imaginary part lies in (arg d, arg d + 2 pi).
inline cplx log_cut(cplx w, cplx d) {
  return {std::log(std::abs(w)), std::arg(d) + kPi + std::arg(-w / d)};
}

/// Signed crossing of the ray {p + d t : t >= 0} by the segment z0 -> z1:
/// +1 when crossing from the right side to the left side, -1 for the
/// opposite direction, 0 when the segment misses the ray.
inline int ray_crossing(cplx z0, cplx z1, cplx p, cplx d) {
  auto side = [&](cplx z) { return std::imag(std::conj(d) * (z - p)); };
  const double s0 = side(z0), s1 = side(z1);
  if ((s0 > 0.0) == (s1 > 0.0) || s0 == 0.0 || s1 == 0.0) return 0;
  const double t = s0 / (s0 - s1);
  const cplx x = z0 + t * (z1 - z0);
  if (std::real(std::conj(d) * (x - p)) < 0.0) return 0;
  return s1 > 0.0 ? +1 : -1;
}

class BranchContext {
 public:
  BranchContext() = default;

  /// `shift[j]` selects the free global branch of (z - a_j)^{c_j}: the value
  /// is multiplied by exp(2 pi i c_j shift[j]).
  explicit BranchContext(const Configuration& cfg, std::vector<int> shift = {})
      : a_(cfg.a), c_(cfg.c), shift_(std::move(shift)) {
    const std::size_t nu = a_.size();
    if (shift_.empty()) shift_.assign(nu, 0);
    if (shift_.size() != nu) throw Error(ErrorKind::SizeMismatch, "branch shift must have length nu");
    eta_.resize(nu);
    for (std::size_t j = 0; j < nu; ++j) eta_[j] = std::exp(cplx(0.0, -2.0 * kPi * c_[j]));
    // Integer offsets of the [.]_{B[k]} branches, fixed by agreeing with
    // (z - a_j)^{c_j} at the midpoint of Bhat_k.
    m_.assign(nu * nu, 0);
    for (std::size_t j = 0; j < nu; ++j)
      for (std::size_t k = 0; k < nu; ++k) {
        if (j == k) continue;
        const cplx anchor = 0.5 * a_[k];
        const double full = log_cut(anchor - a_[j], a_[j]).imag();
        const double moved = log_cut(anchor - a_[j], a_[j] - a_[k]).imag();
        m_[j * nu + k] = static_cast<int>(std::lround((full - moved) / (2.0 * kPi)));
      }
  }

  std::size_t nu() const { return a_.size(); }
  const cplx& a(Label j) const { return a_[idx(j)]; }
  double c(Label j) const { return c_[idx(j)]; }
  /// eta_j = exp(-2 pi i c_j); exactly 1 for integer c_j.
  cplx eta(Label j) const {
    const double cj = c(j);
    if (cj == std::floor(cj)) return 1.0;
    return eta_[idx(j)];
  }
  int shift(Label j) const { return shift_[idx(j)]; }

  /// Direction of the ray B_jk (or of B_j when k = 0).
  cplx cut_direction(Label j, Label k) const { return k == 0 ? a(j) : a(j) - a(k); }

  /// (z - a_j)^{c_j}, cut along B_j.
  cplx pow_a(cplx z, Label j) const {
    if (ray_distance(z, a(j), a(j)) < kCutTol) throw Error(ErrorKind::OnCut, "point on B_" + std::to_string(j));
    if (c(j) == std::floor(c(j))) return std::pow(z - a(j), static_cast<int>(c(j)));
    return std::exp(c(j) * (log_cut(z - a(j), a(j)) + cplx(0.0, 2.0 * kPi * shift(j))));
  }

  /// log of (z - a_j)^{c_j} / c_j on the [.]_{B[k]} branch, without cut checks.
  cplx log_a_Bk(cplx z, Label j, Label k) const {
    const double m = (j == k) ? 0.0 : m_[idx(j) * nu() + idx(k)];
    return log_cut(z - a(j), a(j) - a(k)) + cplx(0.0, 2.0 * kPi * (m + shift(j)));
  }

  /// [(z - a_j)^{c_j}]_{B[k]}: equal to pow_a on B_k u Bhat_k, cut along B_jk.
  cplx pow_a_Bk(cplx z, Label j, Label k) const {
    if (j == k) return pow_a(z, j);
    if (ray_distance(z, a(j), a(j) - a(k)) < kCutTol)
      throw Error(ErrorKind::OnCut, "point on B_" + std::to_string(j) + std::to_string(k));
    if (c(j) == std::floor(c(j))) return std::pow(z - a(j), static_cast<int>(c(j)));
    return std::exp(c(j) * log_a_Bk(z, j, k));
  }

  /// z^{c_j} normalized so that (z - a_j)^{c_j} / z^{c_j} -> 1 along B_j; cut along B_j u Bhat_j.
  cplx pow_z(cplx z, Label j) const {
    if (segment_distance(z, 0.0, a(j)) < kCutTol)
      throw Error(ErrorKind::OnCut, "point on Bhat_" + std::to_string(j));
    return pow_a(z, j) * std::exp(c(j) * std::log(z / (z - a(j))));
  }

  cplx W(cplx z) const {
    cplx w = 1.0;
    for (std::size_t j = 1; j <= nu(); ++j) w *= pow_a(z, static_cast<Label>(j));
    return w;
  }

  cplx Wk(cplx z, Label k) const {
    cplx w = 1.0;
    for (std::size_t j = 1; j <= nu(); ++j) w *= pow_a_Bk(z, static_cast<Label>(j), k);
    return w;
  }

  /// z^{n + sum c} / W(z) = z^n prod exp(c_j Log(z / (z - a_j))); cut only along the Bhat_j.
  cplx zpow_over_W(cplx z, int n) const {
    cplx lg = static_cast<double>(n) * std::log(z);
    for (std::size_t j = 1; j <= nu(); ++j) {
      const Label jl = static_cast<Label>(j);
      if (segment_distance(z, 0.0, a(jl)) < kCutTol)
        throw Error(ErrorKind::OnCut, "point on Bhat_" + std::to_string(j));
      lg += c(jl) * std::log(z / (z - a(jl)));
    }
    if (n == 0 && z == cplx(0.0)) return 0.0;
    return std::exp(lg);
  }

  /// A point on B_jk close to a_j, pushed to the + side by kSideOffset.
  cplx plus_side_point(Label j, Label k, double t = 1e-3) const {
    const cplx d = cut_direction(j, k);
    const cplx u = d / std::abs(d);
    return a(j) + t * u + cplx(0.0, kSideOffset) * u;
  }

  /// eta_kj = W_j / W_{k,+} on B_jk.
  cplx eta_kj(Label k, Label j, double t = 1e-3) const {
    const cplx z = plus_side_point(j, k, t);
    return Wk(z, j) / Wk(z, k);
  }

  /// eta~_kj = ([(z - a_j)^{c_j}]_{B[k]} / (z - a_j)^{c_j}) * W_j(z) / W_k(z) on the + side of B_jk.
  cplx eta_tilde(Label k, Label j, double t = 1e-3) const {
    const cplx z = plus_side_point(j, k, t);
    return pow_a_Bk(z, j, k) / pow_a(z, j) * Wk(z, j) / Wk(z, k);
  }

 private:
  std::size_t idx(Label j) const { return static_cast<std::size_t>(j - 1); }

  std::vector<cplx> a_;
  std::vector<double> c_;
  std::vector<int> shift_;
  std::vector<cplx> eta_;
  std::vector<int> m_;
};

}  // namespace mszego
