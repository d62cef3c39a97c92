#pragma once

// Extraction of the multiple Szego curve by lattice labeling, edge bisection
// and marching-squares assembly. Arcs are split at triple points.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "szego.hpp"

namespace mszego {

struct Arc {
  Label j = 0;  ///< region on the left
  Label k = 0;  ///< region on the right, k < j
  std::vector<cplx> points;
  bool closed = false;  ///< closed loops repeat the first point at the end
};

struct CurveSet {
  std::vector<Arc> arcs;
  std::vector<cplx> junctions;
  int grid_resolution = 0;
  double refine_tol = 0.0;
};

namespace curve_detail {

using Pair = std::pair<Label, Label>;  // (small, large)

inline Pair make_pair_sorted(Label a, Label b) { return a < b ? Pair{a, b} : Pair{b, a}; }

/// Point where the three competing terms of Phi^L for labels p, q, r agree.
inline std::optional<cplx> triple_point(const SzegoStructure& s, std::array<Label, 3> lab, cplx start) {
  std::sort(lab.begin(), lab.end());
  auto term = [&](Label m, cplx z) {
    if (m == 0) return std::log(std::abs(z));
    return std::real(std::conj(s.a(m)) * z) + s.l(m);
  };
  auto grad = [&](Label m, cplx z) -> cplx {
    if (m == 0) return z / std::norm(z);
    return s.a(m);
  };
  cplx z = start;
  for (int it = 0; it < 60; ++it) {
    if (z == cplx(0.0)) return std::nullopt;
    const double f1 = term(lab[1], z) - term(lab[0], z);
    const double f2 = term(lab[2], z) - term(lab[0], z);
    if (std::abs(f1) + std::abs(f2) < 1e-15) break;
    const cplx g1 = grad(lab[1], z) - grad(lab[0], z);
    const cplx g2 = grad(lab[2], z) - grad(lab[0], z);
    const double det = g1.real() * g2.imag() - g1.imag() * g2.real();
    if (std::abs(det) < 1e-300) return std::nullopt;
    const double dx = (f1 * g2.imag() - f2 * g1.imag()) / det;
    const double dy = (g1.real() * f2 - g2.real() * f1) / det;
    z -= cplx(dx, dy);
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return std::nullopt;
  }
  const auto pv = phi_L(z, s.config.a, s.L, kBoundaryTol);
  for (Label m : lab)
    if (std::find(pv.labels.begin(), pv.labels.end(), m) == pv.labels.end()) return std::nullopt;
  return z;
}

}  // namespace curve_detail

/// Traces Gamma on a grid x grid lattice over [-1, 1]^2. Label-changing
/// edges are bisected down to `tol`.
inline CurveSet trace_curve(const SzegoStructure& s, int grid, double tol) {
  using namespace curve_detail;
  if (grid < 3) throw Error(ErrorKind::DegenerateArc, "grid must be at least 3");
  const int G = grid;
  const double h = 2.0 / (G - 1);
  auto node = [&](int i, int j) { return cplx(-1.0 + h * i, -1.0 + h * j); };

  std::vector<Label> lab(static_cast<std::size_t>(G) * G);
  for (int j = 0; j < G; ++j)
    for (int i = 0; i < G; ++i) lab[static_cast<std::size_t>(j) * G + i] = classify(node(i, j), s);
  auto L = [&](int i, int j) { return lab[static_cast<std::size_t>(j) * G + i]; };

  {
    std::vector<bool> present(s.nu() + 1, false);
    for (Label x : lab) present[static_cast<std::size_t>(x)] = true;
    for (std::size_t m = 1; m <= s.nu(); ++m)
      if (!present[m])
        throw Error(ErrorKind::NonGeneric, "region of a_" + std::to_string(m) + " has no lattice node");
  }

  std::vector<cplx> pts;
  std::vector<bool> is_junction;
  std::vector<Pair> pt_pair;

  // Edge crossings. Horizontal edge (i,j)-(i+1,j) has id j*(G-1)+i; vertical
  // edge (i,j)-(i,j+1) has id H + j*G + i.
  const int H = (G - 1) * G;
  std::vector<int> edge_pt(static_cast<std::size_t>(2 * H), -1);
  auto bisect = [&](cplx p, Label lp, cplx q, Label lq) {
    while (std::abs(q - p) > tol) {
      const cplx m = 0.5 * (p + q);
      const Label lm = classify(m, s);
      if (lm == lp) {
        p = m;
      } else {
        q = m;
        lq = lm;
      }
    }
    pts.push_back(0.5 * (p + q));
    is_junction.push_back(false);
    pt_pair.push_back(make_pair_sorted(lp, lq));
    return static_cast<int>(pts.size() - 1);
  };
  for (int j = 0; j < G; ++j)
    for (int i = 0; i + 1 < G; ++i)
      if (L(i, j) != L(i + 1, j)) edge_pt[static_cast<std::size_t>(j * (G - 1) + i)] = bisect(node(i, j), L(i, j), node(i + 1, j), L(i + 1, j));
  for (int j = 0; j + 1 < G; ++j)
    for (int i = 0; i < G; ++i)
      if (L(i, j) != L(i, j + 1)) edge_pt[static_cast<std::size_t>(H + j * G + i)] = bisect(node(i, j), L(i, j), node(i, j + 1), L(i, j + 1));

  // Segments tagged by label pair.
  std::map<Pair, std::vector<std::pair<int, int>>> segs;
  std::vector<cplx> junctions;
  auto connect = [&](int u, int v, Pair pr) { segs[pr].push_back({std::min(u, v), std::max(u, v)}); };
  auto add_junction = [&](cplx z, const std::vector<int>& members) {
    pts.push_back(z);
    is_junction.push_back(true);
    pt_pair.push_back({-1, -1});
    const int jn = static_cast<int>(pts.size() - 1);
    junctions.push_back(z);
    for (int m : members) connect(m, jn, pt_pair[static_cast<std::size_t>(m)]);
  };

  for (int j = 0; j + 1 < G; ++j)
    for (int i = 0; i + 1 < G; ++i) {
      const std::array<Label, 4> corner{L(i, j), L(i + 1, j), L(i + 1, j + 1), L(i, j + 1)};
      const std::array<int, 4> e{edge_pt[static_cast<std::size_t>(j * (G - 1) + i)],
                                 edge_pt[static_cast<std::size_t>(H + j * G + i + 1)],
                                 edge_pt[static_cast<std::size_t>((j + 1) * (G - 1) + i)],
                                 edge_pt[static_cast<std::size_t>(H + j * G + i)]};
      std::vector<int> present;
      for (int m : e)
        if (m >= 0) present.push_back(m);
      if (present.empty()) continue;

      std::map<Pair, std::vector<int>> groups;  // pair -> edge slots
      for (int slot = 0; slot < 4; ++slot)
        if (e[static_cast<std::size_t>(slot)] >= 0) groups[pt_pair[static_cast<std::size_t>(e[static_cast<std::size_t>(slot)])]].push_back(slot);
      std::set<Label> distinct(corner.begin(), corner.end());
      const cplx center = node(i, j) + cplx(0.5 * h, 0.5 * h);
      const Label lc = classify(center, s);

      bool singleton = false;
      for (const auto& [pr, slots] : groups)
        if (slots.size() % 2 == 1) singleton = true;

      auto inside_cell = [&](cplx z) {
        return z.real() >= node(i, j).real() && z.real() <= node(i + 1, j).real() &&
               z.imag() >= node(i, j).imag() && z.imag() <= node(i, j + 1).imag();
      };
      std::optional<cplx> tp;
      if (distinct.size() >= 3) {
        std::vector<Label> dl(distinct.begin(), distinct.end());
        for (std::size_t x = 0; x < dl.size() && !tp; ++x)
          for (std::size_t y = x + 1; y < dl.size() && !tp; ++y)
            for (std::size_t w = y + 1; w < dl.size() && !tp; ++w) {
              auto cand = triple_point(s, {dl[x], dl[y], dl[w]}, center);
              if (cand && inside_cell(*cand)) tp = cand;
            }
      }
      const bool center_is_corner = std::find(corner.begin(), corner.end(), lc) != corner.end();
      if (singleton || (tp && distinct.size() >= 3 && !(groups.size() == 2 && center_is_corner &&
                                                        std::count(corner.begin(), corner.end(), lc) == 2))) {
        cplx z = tp ? *tp : cplx(0.0);
        if (!tp) {
          for (int m : present) z += pts[static_cast<std::size_t>(m)];
          z /= static_cast<double>(present.size());
        }
        add_junction(z, present);
        continue;
      }
      for (const auto& [pr, slots] : groups) {
        if (slots.size() == 2) {
          connect(e[static_cast<std::size_t>(slots[0])], e[static_cast<std::size_t>(slots[1])], pr);
        } else if (slots.size() == 4) {
          // Saddle: cut off the corners whose label differs from the center.
          const Label keep = (lc == corner[0] || lc == corner[1]) ? lc : corner[0];
          for (int cidx = 0; cidx < 4; ++cidx) {
            if (corner[static_cast<std::size_t>(cidx)] == keep) continue;
            const int ea = (cidx + 3) % 4;
            const int eb = cidx;
            connect(e[static_cast<std::size_t>(ea)], e[static_cast<std::size_t>(eb)], pr);
          }
        }
      }
    }

  // Walk each pair graph; junctions and dangling ends start open arcs.
  CurveSet out;
  out.grid_resolution = grid;
  out.refine_tol = tol;
  out.junctions = junctions;
  for (auto& [pr, list] : segs) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    std::map<int, std::vector<std::pair<int, int>>> adj;  // node -> (neighbor, segment index)
    for (std::size_t si = 0; si < list.size(); ++si) {
      adj[list[si].first].push_back({list[si].second, static_cast<int>(si)});
      adj[list[si].second].push_back({list[si].first, static_cast<int>(si)});
    }
    std::vector<bool> used(list.size(), false);
    auto is_end = [&](int v) { return is_junction[static_cast<std::size_t>(v)] || adj[v].size() != 2; };

    auto walk = [&](int start) {
      std::vector<int> path{start};
      int cur = start;
      while (true) {
        int nxt = -1;
        for (const auto& [nb, si] : adj[cur])
          if (!used[static_cast<std::size_t>(si)]) {
            used[static_cast<std::size_t>(si)] = true;
            nxt = nb;
            break;
          }
        if (nxt < 0) break;
        path.push_back(nxt);
        cur = nxt;
        if (cur == start || is_end(cur)) break;
      }
      return path;
    };

    std::vector<std::vector<int>> paths;
    for (auto& [v, nbs] : adj) {
      if (!is_end(v)) continue;
      while (std::any_of(nbs.begin(), nbs.end(), [&](const auto& p) { return !used[static_cast<std::size_t>(p.second)]; }))
        paths.push_back(walk(v));
    }
    for (auto& [v, nbs] : adj)
      if (std::any_of(nbs.begin(), nbs.end(), [&](const auto& p) { return !used[static_cast<std::size_t>(p.second)]; }))
        paths.push_back(walk(v));

    for (const auto& path : paths) {
      Arc arc;
      arc.k = pr.first;
      arc.j = pr.second;
      arc.closed = path.size() > 2 && path.front() == path.back();
      for (int v : path) arc.points.push_back(pts[static_cast<std::size_t>(v)]);
      if (arc.points.size() < 3)
        throw Error(ErrorKind::DegenerateArc, "arc between regions " + std::to_string(arc.k) + " and " +
                                                  std::to_string(arc.j) + " has fewer than 3 points");
      int vote = 0;
      const double off = 0.25 * h;
      for (std::size_t m = 0; m + 1 < arc.points.size(); ++m) {
        const cplx d = arc.points[m + 1] - arc.points[m];
        if (std::abs(d) == 0.0) continue;
        const cplx mid = 0.5 * (arc.points[m] + arc.points[m + 1]);
        const Label left = classify(mid + off * cplx(0.0, 1.0) * d / std::abs(d), s);
        if (left == arc.j) ++vote;
        if (left == arc.k) --vote;
      }
      if (vote < 0) std::reverse(arc.points.begin(), arc.points.end());
      out.arcs.push_back(std::move(arc));
    }
  }
  return out;
}

/// Distance from z to a polyline.
inline double polyline_distance(cplx z, const std::vector<cplx>& poly) {
  double best = std::numeric_limits<double>::infinity();
  if (poly.size() == 1) return std::abs(z - poly.front());
  for (std::size_t m = 0; m + 1 < poly.size(); ++m) {
    const cplx p = poly[m], d = poly[m + 1] - poly[m];
    const double len2 = std::norm(d);
    double t = len2 > 0.0 ? std::real((z - p) * std::conj(d)) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    best = std::min(best, std::abs(z - (p + t * d)));
  }
  return best;
}

inline double curve_distance(cplx z, const CurveSet& cs) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& arc : cs.arcs) best = std::min(best, polyline_distance(z, arc.points));
  return best;
}

}  // namespace mszego
