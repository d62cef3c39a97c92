// Acceptance runner: one PASS/FAIL line per criterion.
#include <chrono>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include <CLI11.hpp>

#include "mszego/asym.hpp"
#include "mszego/curve.hpp"
#include "mszego/oracle.hpp"
#include "mszego/specfun.hpp"

using namespace mszego;

namespace {

const double kA = 1.0 / std::sqrt(2.0);

struct Outcome {
  bool pass;
  std::string detail;
};

class Timer {
  std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();

 public:
  double seconds() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count(); }
};

std::string fmt(const char* f, ...) __attribute__((format(printf, 1, 2)));
std::string fmt(const char* f, ...) {
  char buf[1024];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof buf, f, ap);
  va_end(ap);
  return buf;
}

Configuration make(std::vector<cplx> a, std::vector<double> c, int n, std::optional<double> N = {}) {
  Configuration cfg;
  cfg.a = std::move(a);
  cfg.c = std::move(c);
  cfg.n = n;
  cfg.N = N;
  return validate_config(cfg);
}

Configuration two_point(int n) { return make({{0.5, -0.5}, {-0.25, -0.5}}, {1, 1}, n); }

double rel(cplx x, cplx y) { return std::abs(x - y) / std::abs(y); }

// 1. level solver
Outcome criterion1() {
  std::mt19937 rng(20240917);
  std::uniform_real_distribution<double> rad(0.1, 0.92), ang(0.0, 2.0 * kPi);
  std::uniform_int_distribution<int> nud(1, 4);
  std::vector<Configuration> cfgs;
  while (cfgs.size() < 20) {
    const int nu = nud(rng);
    Configuration cfg;
    cfg.n = 16;
    for (int j = 0; j < nu; ++j) {
      cfg.a.push_back(std::polar(rad(rng), ang(rng)));
      cfg.c.push_back(1.0);
    }
    try {
      const auto s = build_structure(cfg);
      if (s.all_generic()) cfgs.push_back(s.config);
    } catch (const Error&) {
    }
  }
  Timer t;
  double worst_boundary = 0.0, worst_move = 0.0;
  for (const auto& cfg : cfgs) {
    const auto L = solve_levels(cfg);
    for (std::size_t j = 0; j < cfg.nu(); ++j)
      worst_boundary = std::max(worst_boundary, std::abs(phi_L(cfg.a[j], cfg.a, L).value - std::norm(cfg.a[j]) - L[j]));
    const auto L2 = level_step(cfg.a, L);
    for (std::size_t j = 0; j < cfg.nu(); ++j) worst_move = std::max(worst_move, std::abs(L2[j] - L[j]));
  }
  const double secs = t.seconds();
  return {worst_boundary <= 1e-9 && worst_move <= 1e-12 && secs < 1.0,
          fmt("20 configs, max boundary defect %.3e (<= 1e-9), max extra-step move %.3e (<= 1e-12), %.3f s (< 1 s)",
              worst_boundary, worst_move, secs)};
}

// 2. single-point curve
Outcome criterion2() {
  Timer t;
  const auto s = build_structure(make({kA}, {1}, 16));
  const auto cs = trace_curve(s, 400, 1e-8);
  const double secs = t.seconds();
  double worst = 0.0, rmax = 0.0;
  std::size_t count = 0;
  for (const auto& arc : cs.arcs)
    for (const auto& z : arc.points) {
      worst = std::max(worst, std::abs(std::log(std::abs(z)) - kA * z.real() - (std::log(kA) - kA * kA)));
      rmax = std::max(rmax, std::abs(z));
      ++count;
    }
  return {count > 0 && worst <= 1e-7 && rmax < 1.0 && secs < 5.0,
          fmt("%zu points, max equation defect %.3e (<= 1e-7), max |z| %.6f (< 1), %.3f s (< 5 s)", count, worst, rmax,
              secs)};
}

// 3. region formula in Omega_1 against the single-point closed form
Outcome criterion3() {
  double worst = 0.0;
  int used = 0;
  for (double c : {1.0, 2.0}) {
    const int n = 16;
    const double N = n;
    const AsymptoticModel m(build_structure(make({kA}, {c}, n)));
    int k = 0;
    for (int i = 0; i < 2000 && k < 20; ++i) {
      const cplx z = std::polar(0.05 + 0.0011 * i, 0.61 * i);
      if (classify(z, m.structure()) != 1) continue;
      const cplx closed = -kA * std::pow(1.0 - kA * kA, c - 1.0) * std::pow(N, c - 1.0) / std::tgamma(c) *
                          std::exp(N * (kA * z + std::log(kA) - kA * kA)) / (z - kA);
      worst = std::max(worst, rel(m.eval_region(z), closed));
      ++k;
    }
    used += k;
  }
  return {used == 40 && worst <= 1e-12, fmt("%d points (c = 1, 2), max relative error %.3e (<= 1e-12)", used, worst)};
}

// 4. special function
Outcome criterion4() {
  double closed = 0.0;
  for (int m = 0; m < 40; ++m) {
    const cplx z = std::polar(0.1 + 0.7 * m, -3.0 + 0.15 * m);
    closed = std::max(closed, rel(f_c_general(z, 1.0), 1.0 / z));
    closed = std::max(closed, rel(f_c_general(z, 2.0), (1.0 + z) / (z * z)));
  }
  double a1 = 0.0;
  for (double c : {-0.5, 0.5, 1.5, 2.5}) a1 = std::max(a1, std::abs(alpha(1, c) - 1.0 / std::tgamma(c)));
  double tail_ratio = 0.0;
  for (double c : {-0.5, 0.5, 1.5}) {
    const double bound = 2.0 * std::abs(alpha(9, c)) / std::pow(20.0, 9) * 10.0;
    for (int d = 0; d < 16; ++d) {
      const cplx z = std::polar(20.0, -kPi + 2.0 * kPi * (d + 0.5) / 16.0);
      cplx s = 0.0;
      for (int i = 1; i <= 8; ++i) s += alpha(i, c) / std::pow(z, i);
      tail_ratio = std::max(tail_ratio, std::abs(f_c(z, c) - s) / bound);
    }
  }
  double sided = 0.0;
  for (double c : {-0.5, 0.5, 1.5}) {
    auto side = [&](cplx z) { return std::exp(z - c * std::log(z)) - f_c(z, c); };
    for (int m = 0; m < 50; ++m) {
      const double x = -10.0 + 0.2 * m + 0.1;
      sided = std::max(sided, std::abs(side(cplx(x, 1e-8)) - side(cplx(x, -1e-8))) / std::abs(E_c(x, c)));
    }
  }
  return {closed <= 1e-12 && a1 <= 1e-12 && tail_ratio <= 1.0 && sided <= 1e-6,
          fmt("closed forms %.3e (<= 1e-12), alpha_1 %.3e (<= 1e-12), tail/bound %.3f (<= 1), one-sided %.3e (<= 1e-6)",
              closed, a1, tail_ratio, sided)};
}

// 5. oracle
Outcome criterion5() {
  double moment_err = 0.0;
  for (const auto& cfg : {two_point(10), make({kA}, {2}, 8), make({{0.3, 0.6}, {-0.5, 0.1}, {0.2, -0.7}}, {1, 2, 1}, 10)}) {
    const auto E = exact_moments(cfg, cfg.n);
    const auto Q = quad_moments(cfg, cfg.n);
    for (int j = 0; j <= cfg.n; ++j)
      for (int k = 0; k <= cfg.n; ++k) {
        const double scale = std::sqrt(E.value(j, j).real() * E.value(k, k).real());
        moment_err = std::max(moment_err, std::abs(Q.value(j, k) - E.value(j, k)) / scale);
      }
  }
  double residual = 0.0;
  for (int n : {8, 16, 24, 32}) {
    const auto M = exact_moments(two_point(n), n);
    for (double r : orthogonality_residuals(monic_op(M, n), M)) residual = std::max(residual, r);
  }
  const auto M1 = exact_moments(make({kA}, {1}, 1, 1.0), 1);
  const auto P1 = monic_op(M1, 1);
  const double hand = std::max({std::abs(M1.value(0, 0) - 1.5 * kPi), std::abs(M1.value(1, 0) + kA * kPi),
                                std::abs(roots(P1).roots.at(0) + 2.0 * kA / 3.0)});
  return {moment_err <= 1e-9 && residual <= 1e-8 && hand <= 1e-12,
          fmt("exact vs quad %.3e (<= 1e-9), residual up to n = 32 %.3e (<= 1e-8), hand values %.3e (<= 1e-12)",
              moment_err, residual, hand)};
}

// 6. region formula against the oracle, single point
Outcome criterion6() {
  Timer t;
  double outer[2], inner[2];
  const int degrees[2] = {16, 32};
  for (int i = 0; i < 2; ++i) {
    const int n = degrees[i];
    const auto cfg = make({kA}, {1}, n);
    const AsymptoticModel m(build_structure(cfg));
    const auto P = monic_op(exact_moments(cfg, n), n);
    outer[i] = 0.0;
    for (int k = 0; k < 64; ++k) {
      const cplx z = std::polar(1.5, 2.0 * kPi * k / 64.0);
      outer[i] = std::max(outer[i], rel(m.eval_region(z), P(z)));
    }
    const cplx z = 0.5 * kA;
    if (classify(z, m.structure()) != 1) return {false, "a_1/2 not in Omega_1"};
    inner[i] = rel(m.eval_region(z), P(z));
  }
  const double ratio = inner[1] / inner[0];
  const double secs = t.seconds();
  const bool ok = outer[0] <= 1e-2 && outer[1] <= 1e-2 && outer[1] < outer[0] && ratio >= 0.25 && ratio <= 0.9 &&
                  secs < 30.0;
  return {ok, fmt("Omega_0 |z|=1.5: n=16 %.3e, n=32 %.3e (<= 1e-2, decreasing); Omega_1 a/2: n=16 %.3e, n=32 %.3e, "
                  "ratio %.3f (in [0.25, 0.9]); %.2f s (< 30 s)",
                  outer[0], outer[1], inner[0], inner[1], ratio, secs)};
}

// 7. roots approach the curve
Outcome criterion7() {
  double dmax[2], secs[2];
  std::size_t cnt[2];
  const int degrees[2] = {16, 32};
  for (int i = 0; i < 2; ++i) {
    Timer t;
    const auto cfg = two_point(degrees[i]);
    const auto s = build_structure(cfg);
    const AsymptoticModel m(s);
    const auto cs = trace_curve(s, 400, 1e-8);
    const auto R = roots(monic_op(exact_moments(cfg, cfg.n), cfg.n));
    std::vector<double> excl;
    for (Label j = 1; j <= static_cast<Label>(s.nu()); ++j) excl.push_back(m.disk_radius(j));
    const auto d = root_curve_distance(R.roots, cs, cfg.a, excl);
    dmax[i] = d.max;
    cnt[i] = d.count;
    secs[i] = t.seconds();
  }
  const bool ok = cnt[0] > 0 && cnt[1] > 0 && dmax[1] < dmax[0] && secs[0] < 60.0 && secs[1] < 60.0;
  return {ok, fmt("max distance n=16 %.4f (%zu roots), n=32 %.4f (%zu roots), strictly smaller required; %.2f s, %.2f s "
                  "(< 60 s each)",
                  dmax[0], cnt[0], dmax[1], cnt[1], secs[0], secs[1])};
}

struct ZetaMatch {
  std::size_t in_disk = 0, sampled = 0;
  double worst = 0.0;
  std::size_t window = 0;  // roots near a_1 with 5 <= |zeta| <= 25, ignoring the disk
  double window_worst = 0.0;
  double residual = 0.0;
};

ZetaMatch match_zeros(int n, const std::vector<cplx>& ez) {
  ZetaMatch out;
  const auto cfg = make({kA}, {1}, n);
  const AsymptoticModel m(build_structure(cfg));
  const auto M = exact_moments(cfg, n);
  const auto P = monic_op(M, n);
  out.residual = P.max_residual;
  const auto R = roots(P);
  const double r = m.disk_radius(1);
  auto nearest = [&](cplx zeta) {
    double d = std::numeric_limits<double>::infinity();
    for (const cplx& e : ez) d = std::min(d, std::abs(e - zeta));
    return d;
  };
  for (const cplx& z : R.roots) {
    const bool near = std::abs(z - kA) < std::min(kA, 1.0 - kA);
    const bool inside = std::abs(z - kA) < r;
    if (!near && !inside) continue;
    const cplx zeta = m.zeta_map(z, 1);
    const bool annulus = std::abs(zeta) >= 5.0 && std::abs(zeta) <= 25.0;
    if (inside) ++out.in_disk;
    if (annulus && near) {
      ++out.window;
      out.window_worst = std::max(out.window_worst, nearest(zeta));
    }
    if (inside && annulus) {
      ++out.sampled;
      out.worst = std::max(out.worst, nearest(zeta));
    }
  }
  return out;
}

// 8. local zeros
Outcome criterion8() {
  const auto ez = zeros_E_c(1.0, Box{-3.0, 3.0, -30.5, 30.5});
  const auto a = match_zeros(32, ez);
  const auto b = match_zeros(64, ez);
  bool ok = a.sampled > 0 && a.worst <= 1.0;
  std::string trend = "n=64 not converged";
  if (b.residual <= 1e-8) {
    ok = ok && b.sampled > 0 && b.worst <= 0.6;
    trend = fmt("n=64: %zu sampled, max |dzeta| %.3f (<= 0.6)", b.sampled, b.worst);
  }
  return {ok, fmt("n=32: %zu roots in disk, %zu with 5<=|zeta|<=25, max |dzeta| %.3f (<= 1.0); %s; "
                  "outside the disk restriction: n=32 %zu roots max %.3f, n=64 %zu roots max %.3f",
                  a.in_disk, a.sampled, a.worst, trend.c_str(), a.window, a.window_worst, b.window, b.window_worst)};
}

// inverse of the zeta map near a_1 by Newton
std::optional<cplx> zeta_inverse(const AsymptoticModel& m, cplx target) {
  const cplx a = m.structure().a(1);
  cplx z = a + target * a / (m.N() * (1.0 - std::norm(a)));
  for (int it = 0; it < 60; ++it) {
    if (std::abs(z) < 1e-3) return std::nullopt;
    // zeta = -N (conj(a) z - |a|^2 - Log(z/a))
    const cplx f = m.zeta_map(z, 1) - target;
    const cplx df = -m.N() * (std::conj(a) - 1.0 / z);
    const cplx step = f / df;
    z -= step;
    if (std::abs(step) < 1e-14 * std::abs(z)) return std::abs(m.zeta_map(z, 1) - target) < 1e-8 ? std::optional(z)
                                                                                                 : std::nullopt;
  }
  return std::nullopt;
}

// 9. local against uniform
Outcome criterion9() {
  const AsymptoticModel m(build_structure(make({kA}, {1}, 32)));
  double worst = 0.0;
  cplx at = 0.0;
  std::size_t used = 0, skipped = 0;
  for (double r : {10.0, 15.0, 20.0, 25.0, 30.0})
    for (int k = 0; k < 48; ++k) {
      const double th = -kPi + 2.0 * kPi * (k + 0.5) / 48.0;
      // E_1 vanishes on the imaginary axis; stay clear of it
      if (std::abs(std::abs(th) - kPi / 2) < 0.3) continue;
      const auto z = zeta_inverse(m, std::polar(r, th));
      if (!z || std::abs(*z) >= 1.0) {
        ++skipped;
        continue;
      }
      const double e = std::abs(m.eval_local(*z, 1) / m.eval_uniform(*z) - 1.0);
      if (e > worst) {
        worst = e;
        at = std::polar(r, th);
      }
      ++used;
    }
  return {used > 0 && worst <= 0.15,
          fmt("%zu points (%zu outside the disk or unreachable), max |local/uniform - 1| %.3f at zeta = %.2f%+.2fi "
              "(<= 0.15)",
              used, skipped, worst, at.real(), at.imag())};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  int only = 0;
  app.add_option("--criterion", only, "run a single criterion (1-9)")->check(CLI::Range(1, 9));
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::function<Outcome()>> all{criterion1, criterion2, criterion3, criterion4, criterion5,
                                                  criterion6, criterion7, criterion8, criterion9};
  int failures = 0;
  for (int k = 1; k <= 9; ++k) {
    if (only && k != only) continue;
    Timer t;
    Outcome o;
    try {
      o = all[static_cast<std::size_t>(k - 1)]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("criterion %d: %s  %s  [%.2f s]\n", k, o.pass ? "PASS" : "FAIL", o.detail.c_str(), t.seconds());
    std::fflush(stdout);
    if (!o.pass) ++failures;
  }
  return failures ? 1 : 0;
}
