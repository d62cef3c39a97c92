#pragma once

// Maximal level vector L, region classification, chains of arrows and the
// complex constants ell_j.

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <set>
#include <string>
#include <vector>

#include "core.hpp"

namespace mszego {

inline constexpr double kTieTol = 1e-12;
inline constexpr double kBoundaryTol = 1e-9;
inline constexpr double kGenericRadius = 1e-4;
inline constexpr int kGenericSamples = 64;

struct PhiValue {
  double value;
  std::vector<Label> labels;  ///< every label within the tie tolerance of the maximum
};

/// The competing terms of Phi^L: index 0 is log|z|, index j is Re(conj(a_j) z) + lambda_j.
inline std::vector<double> phi_terms(cplx z, const std::vector<cplx>& a, const std::vector<double>& lambda) {
  std::vector<double> t(a.size() + 1);
  t[0] = (z == cplx(0.0)) ? -std::numeric_limits<double>::infinity() : std::log(std::abs(z));
  for (std::size_t j = 0; j < a.size(); ++j) t[j + 1] = std::real(std::conj(a[j]) * z) + lambda[j];
  return t;
}

inline PhiValue phi_L(cplx z, const std::vector<cplx>& a, const std::vector<double>& lambda,
                      double rel_tol = kTieTol) {
  const auto t = phi_terms(z, a, lambda);
  const double m = *std::max_element(t.begin(), t.end());
  const double tol = rel_tol * (std::abs(m) + 1.0);
  PhiValue out{m, {}};
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t[i] >= m - tol) out.labels.push_back(static_cast<Label>(i));
  return out;
}

/// One simultaneous step of the level algorithm: lambda_j <- Phi^lambda(a_j) - |a_j|^2.
inline std::vector<double> level_step(const std::vector<cplx>& a, const std::vector<double>& lambda) {
  std::vector<double> next(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) next[j] = phi_L(a[j], a, lambda).value - std::norm(a[j]);
  return next;
}

inline std::vector<double> initial_levels(const std::vector<cplx>& a) {
  std::vector<double> lambda(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) lambda[j] = std::log(std::abs(a[j])) - std::norm(a[j]);
  return lambda;
}

/// Runs the level algorithm for exactly nu steps. `history`, when given,
/// receives every iterate including the initial one.
inline std::vector<double> solve_levels(const Configuration& cfg,
                                        std::vector<std::vector<double>>* history = nullptr) {
  auto lambda = initial_levels(cfg.a);
  if (history) history->push_back(lambda);
  for (std::size_t it = 0; it < cfg.nu(); ++it) {
    lambda = level_step(cfg.a, lambda);
    if (history) history->push_back(lambda);
  }
  return lambda;
}

struct SzegoStructure {
  Configuration config;
  std::vector<double> L;
  std::vector<cplx> ell;
  std::vector<Label> arrow;                ///< arrow[j-1] = k for j -> k
  std::vector<std::vector<Label>> chains;  ///< chains[j-1] = (j, ..., k_1), the trailing 0 implicit
  std::vector<int> levels;
  std::vector<bool> generic;

  std::size_t nu() const { return config.nu(); }
  const cplx& a(Label j) const { return config.a[static_cast<std::size_t>(j - 1)]; }
  double c(Label j) const { return config.c[static_cast<std::size_t>(j - 1)]; }
  double l(Label j) const { return L[static_cast<std::size_t>(j - 1)]; }
  bool all_generic() const { return std::all_of(generic.begin(), generic.end(), [](bool g) { return g; }); }
  /// Label k such that j -> k.
  Label next(Label j) const { return arrow[static_cast<std::size_t>(j - 1)]; }
};

/// Region label at z: the argmax of Phi^L with ties going to the smallest label.
inline Label classify(cplx z, const std::vector<cplx>& a, const std::vector<double>& L) {
  if (std::abs(z) >= 1.0) return 0;
  return phi_L(z, a, L).labels.front();
}

inline Label classify(cplx z, const SzegoStructure& s) { return classify(z, s.config.a, s.L); }

/// Finds the arrow j -> k for every a_j and the genericity report. Arrows of
/// non-generic points are set to -1.
inline void compute_arrows(SzegoStructure& s) {
  const std::size_t nu = s.nu();
  s.arrow.assign(nu, -1);
  s.generic.assign(nu, false);
  for (std::size_t i = 0; i < nu; ++i) {
    const Label j = static_cast<Label>(i + 1);
    const cplx aj = s.config.a[i];
    const auto pv = phi_L(aj, s.config.a, s.L, kBoundaryTol);
    std::vector<Label> others;
    for (Label x : pv.labels)
      if (x != j) others.push_back(x);
    const bool on_own_boundary = std::find(pv.labels.begin(), pv.labels.end(), j) != pv.labels.end();
    if (!on_own_boundary || others.size() != 1) continue;
    const Label k = others.front();

    std::set<Label> seen;
    for (int m = 0; m < kGenericSamples; ++m) {
      const double th = 2.0 * kPi * (m + 0.5) / kGenericSamples;
      seen.insert(classify(aj + kGenericRadius * std::polar(1.0, th), s));
    }
    if (seen == std::set<Label>{j, k}) {
      s.arrow[i] = k;
      s.generic[i] = true;
    }
  }
}

/// Follows arrows to 0 and records chains and levels. Throws NonGeneric if any
/// point is non-generic or the arrows do not reach 0 without repetition.
inline void compute_chains(SzegoStructure& s) {
  const std::size_t nu = s.nu();
  s.chains.assign(nu, {});
  s.levels.assign(nu, 0);
  for (std::size_t i = 0; i < nu; ++i) {
    if (!s.generic[i]) throw Error(ErrorKind::NonGeneric, "a_" + std::to_string(i + 1) + " is not generic");
    std::vector<Label> chain{static_cast<Label>(i + 1)};
    while (true) {
      const Label k = s.next(chain.back());
      if (k < 0) throw Error(ErrorKind::NonGeneric, "chain of a_" + std::to_string(i + 1) + " meets a non-generic point");
      if (k == 0) break;
      if (std::find(chain.begin(), chain.end(), k) != chain.end() || chain.size() >= nu)
        throw Error(ErrorKind::NonGeneric, "chain of a_" + std::to_string(i + 1) + " repeats an entry");
      chain.push_back(k);
    }
    s.levels[i] = static_cast<int>(chain.size());
    s.chains[i] = std::move(chain);
  }
}

/// ell_{k_1} = log a_{k_1} - |a_{k_1}|^2, ell_{k_i} = -|a_{k_i}|^2 + conj(a_{k_{i-1}}) a_{k_i} + ell_{k_{i-1}}.
inline void compute_ell(SzegoStructure& s) {
  s.ell.assign(s.nu(), cplx(0.0));
  for (std::size_t i = 0; i < s.nu(); ++i) {
    const auto& chain = s.chains[i];
    cplx ell = 0.0;
    for (std::size_t pos = chain.size(); pos-- > 0;) {
      const Label k = chain[pos];
      const cplx ak = s.a(k);
      if (pos + 1 == chain.size()) {
        ell = std::log(ak) - std::norm(ak);
      } else {
        const cplx prev = s.a(chain[pos + 1]);
        ell = -std::norm(ak) + std::conj(prev) * ak + ell;
      }
    }
    s.ell[i] = ell;
  }
}

/// Solves levels and, when every point is generic, chains, levels and ell.
/// With require_generic = false a non-generic configuration is returned with
/// only L, arrows and the genericity report filled in.
inline SzegoStructure build_structure(const Configuration& cfg, bool require_generic = true) {
  SzegoStructure s;
  s.config = validate_config(cfg);
  s.L = solve_levels(s.config);
  compute_arrows(s);
  if (!s.all_generic()) {
    if (require_generic) {
      for (std::size_t i = 0; i < s.nu(); ++i)
        if (!s.generic[i]) throw Error(ErrorKind::NonGeneric, "a_" + std::to_string(i + 1) + " is not generic");
    }
    return s;
  }
  compute_chains(s);
  compute_ell(s);
  return s;
}

}  // namespace mszego
