#pragma once

// Strong asymptotics of p_n: chain constants, the regional formulas, the
// uniform near-curve sum and the local formula around each a_j.

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <string>
#include <vector>

#include "branches.hpp"
#include "specfun.hpp"
#include "szego.hpp"

namespace mszego {

inline constexpr double kDefaultTau = 40.0;

enum class Formula { Region, Uniform, Local };

inline const char* to_string(Formula f) {
  switch (f) {
    case Formula::Region: return "region";
    case Formula::Uniform: return "uniform";
    case Formula::Local: return "local";
  }
  return "?";
}

class AsymptoticModel {
 public:
  /// `shift` selects the free global branch of each (z - a_j)^{c_j}.
  explicit AsymptoticModel(SzegoStructure s, std::vector<int> shift = {})
      : s_(std::move(s)), br_(s_.config, std::move(shift)) {
    if (!s_.all_generic() || s_.chains.size() != s_.nu())
      throw Error(ErrorKind::NonGeneric, "asymptotics require a generic configuration");
    chain_.resize(s_.nu());
    for (std::size_t j = 1; j <= s_.nu(); ++j) chain_[j - 1] = compute_chain(static_cast<Label>(j));
  }

  const SzegoStructure& structure() const { return s_; }
  const BranchContext& branch() const { return br_; }
  double N() const { return s_.config.scale(); }
  int n() const { return s_.config.n; }
  std::size_t nu() const { return s_.nu(); }

  cplx chain_constant(Label j) const { return chain_[static_cast<std::size_t>(j - 1)]; }

  /// E_j(z) = exp(N(conj(a_j) z + ell_j)).
  cplx E(Label j, cplx z) const { return std::exp(N() * (std::conj(s_.a(j)) * z + s_.ell[static_cast<std::size_t>(j - 1)])); }

  /// Term of label k: k = 0 gives z^{n + sum c} / W(z); k >= 1 gives
  /// -E_k(z) (z - a_k)^{c_k} chain(k) / ((z - a_k) W_k(z)).
  cplx term(Label k, cplx z) const {
    if (k == 0) return br_.zpow_over_W(z, n());
    cplx den = z - s_.a(k);
    for (std::size_t i = 1; i <= nu(); ++i)
      if (static_cast<Label>(i) != k) den *= br_.pow_a_Bk(z, static_cast<Label>(i), k);
    return -E(k, z) * chain_constant(k) / den;
  }

  /// log |term(k, z)|, computed without any branch choices.
  double log_abs_term(Label k, cplx z) const {
    if (k == 0) {
      double v = n() * std::log(std::abs(z));
      for (std::size_t i = 1; i <= nu(); ++i)
        v += s_.c(static_cast<Label>(i)) * std::log(std::abs(z / (z - s_.a(static_cast<Label>(i)))));
      return v;
    }
    double v = N() * (std::real(std::conj(s_.a(k)) * z) + s_.l(k)) + std::log(std::abs(chain_constant(k))) -
               std::log(std::abs(z - s_.a(k)));
    for (std::size_t i = 1; i <= nu(); ++i)
      if (static_cast<Label>(i) != k)
        v -= s_.c(static_cast<Label>(i)) * std::log(std::abs(z - s_.a(static_cast<Label>(i))));
    return v;
  }

  /// Single-region formula selected by the label of z.
  cplx eval_region(cplx z) const { return term(classify(z, s_), z); }

  /// Sum of every term whose modulus is within a factor e^{-tau} of the
  /// largest one. Outside the unit disk only the label-0 term is used.
  cplx eval_uniform(cplx z, double tau = kDefaultTau) const {
    if (std::abs(z) >= 1.0) return term(0, z);
    std::vector<double> lg(nu() + 1);
    for (std::size_t k = 0; k <= nu(); ++k) lg[k] = log_abs_term(static_cast<Label>(k), z);
    const double m = *std::max_element(lg.begin(), lg.end());
    cplx sum = 0.0;
    for (std::size_t k = 0; k <= nu(); ++k)
      if (lg[k] >= m - tau) sum += term(static_cast<Label>(k), z);
    return sum;
  }

  /// Radius of the disk D_{a_j}: 0.3 times the distance from a_j to the
  /// nearest other a_k, the origin or the unit circle.
  double disk_radius(Label j) const {
    const cplx aj = s_.a(j);
    double d = std::min(std::abs(aj), 1.0 - std::abs(aj));
    for (std::size_t i = 1; i <= nu(); ++i)
      if (static_cast<Label>(i) != j) d = std::min(d, std::abs(aj - s_.a(static_cast<Label>(i))));
    return 0.3 * d;
  }

  /// Local zooming coordinate around a_j.
  cplx zeta_map(cplx z, Label j) const {
    const Label k = s_.next(j);
    const cplx aj = s_.a(j);
    if (k == 0) return -N() * (std::conj(aj) * z - std::norm(aj) - std::log(z / aj));
    return -N() * std::conj(aj - s_.a(k)) * (z - aj);
  }

  /// A_k(z) zeta^{c_j} e^{-zeta} E_{c_j}(zeta), k the arrow target of j.
  cplx eval_local(cplx z, Label j) const {
    const Label k = s_.next(j);
    const cplx aj = s_.a(j);
    const double cj = s_.c(j);
    const cplx zeta = zeta_map(z, j);
    const cplx local = std::exp(-zeta) * E_c(zeta, cj);
    const bool at_center = std::abs(z - aj) < 1e-14 * std::abs(aj);

    if (k == 0) {
      // z^{c_j} zeta^{c_j} / (z - a_j)^{c_j} combined, finite at a_j
      cplx lg = static_cast<double>(n()) * std::log(z);
      for (std::size_t i = 1; i <= nu(); ++i) {
        const Label il = static_cast<Label>(i);
        if (il == j) continue;
        if (segment_distance(z, 0.0, s_.a(il)) < kCutTol) throw Error(ErrorKind::OnCut, "point on Bhat_" + std::to_string(i));
        lg += s_.c(il) * std::log(z / (z - s_.a(il)));
      }
      if (at_center) {
        lg += cj * std::log(cplx(N() * (1.0 - std::norm(aj))));
      } else {
        lg += cj * std::log(z * zeta / (z - aj));
      }
      return std::exp(lg) * local;
    }

    // zeta^{c_j} / [(z - a_j)^{c_j}]_{B[k]} is constant: both cut along B_jk.
    const cplx d = aj - s_.a(k);
    const cplx ratio = std::exp(cj * (cplx(std::log(N() * std::norm(d))) - br_.log_a_Bk(s_.a(k), j, k)));
    cplx den = z - s_.a(k);
    for (std::size_t i = 1; i <= nu(); ++i) {
      const Label il = static_cast<Label>(i);
      if (il == k || il == j) continue;
      den *= br_.pow_a_Bk(z, il, k);
    }
    return -E(k, z) * chain_constant(k) * ratio / den * local;
  }

  /// Local formula inside the disks D_{a_j}, uniform formula elsewhere.
  Formula choose(cplx z, Label* j_out = nullptr) const {
    for (std::size_t j = 1; j <= nu(); ++j)
      if (std::abs(z - s_.a(static_cast<Label>(j))) < disk_radius(static_cast<Label>(j))) {
        if (j_out) *j_out = static_cast<Label>(j);
        return Formula::Local;
      }
    return Formula::Uniform;
  }

 private:
  cplx compute_chain(Label j) const {
    const auto& ch = s_.chains[static_cast<std::size_t>(j - 1)];
    const std::size_t len = ch.size();
    auto k = [&](std::size_t i) { return ch[len - i]; };  // k_1 .. k_s, k_s = j

    const Label k1 = k(1);
    const cplx a1 = s_.a(k1);
    const double c1 = s_.c(k1);
    cplx val = a1;
    for (std::size_t i = 1; i <= nu(); ++i)
      if (static_cast<Label>(i) != k1) val *= br_.pow_z(a1, static_cast<Label>(i));
    double mu = 0.0;
    for (std::size_t i = 1; i <= len; ++i) mu += s_.c(k(i)) - 1.0;
    val *= std::pow(N(), mu) / (std::tgamma(c1) * std::pow(1.0 - std::norm(a1), 1.0 - c1));

    for (std::size_t i = 1; i < len; ++i) {
      const Label ki = k(i), kn = k(i + 1);
      const cplx ai = s_.a(ki), an = s_.a(kn);
      val *= br_.eta_tilde(ki, kn) * br_.pow_a(an, ki) * std::pow(std::abs(ai - an), 2.0 * (s_.c(kn) - 1.0)) /
             (std::tgamma(s_.c(kn)) * br_.pow_a(ai, kn));
    }
    return val;
  }

  SzegoStructure s_;
  BranchContext br_;
  std::vector<cplx> chain_;
};

}  // namespace mszego
