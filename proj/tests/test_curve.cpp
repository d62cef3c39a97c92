#include <cmath>

#include <gtest/gtest.h>

#include "mszego/curve.hpp"
#include "mszego/io.hpp"

using namespace mszego;

namespace {

const double kA = 1.0 / std::sqrt(2.0);

SzegoStructure single() {
  Configuration cfg;
  cfg.a = {kA};
  cfg.c = {1.0};
  cfg.n = 16;
  return build_structure(cfg);
}

SzegoStructure two_point() {
  Configuration cfg;
  cfg.a = {{0.5, -0.5}, {-0.25, -0.5}};
  cfg.c = {1.0, 1.0};
  cfg.n = 16;
  return build_structure(cfg);
}

double chord_deviation(const std::vector<cplx>& pts) {
  const cplx p = pts.front(), q = pts.back();
  const cplx u = (q - p) / std::abs(q - p);
  double dev = 0.0;
  for (const auto& z : pts) dev = std::max(dev, std::abs(std::imag((z - p) * std::conj(u))));
  return dev;
}

}  // namespace

TEST(Curve, SinglePointEquation) {
  const double tol = 1e-8;
  const auto cs = trace_curve(single(), 200, tol);
  ASSERT_EQ(cs.arcs.size(), 1u);
  EXPECT_TRUE(cs.arcs[0].closed);
  EXPECT_GT(cs.arcs[0].points.size(), 50u);
  for (const auto& z : cs.arcs[0].points) {
    const double g = std::log(std::abs(z)) - kA * z.real() - std::log(kA) + kA * kA;
    EXPECT_LT(std::abs(g), 10 * tol);
    EXPECT_LT(std::abs(z), 1.0);
  }
}

TEST(Curve, TwoPointLabelsAndDisk) {
  const auto s = two_point();
  const auto cs = trace_curve(s, 200, 1e-8);
  std::set<std::pair<Label, Label>> pairs;
  for (const auto& arc : cs.arcs) {
    EXPECT_GT(arc.j, arc.k);
    EXPECT_LE(arc.j, 2);
    EXPECT_GE(arc.k, 0);
    pairs.insert({arc.k, arc.j});
    for (const auto& z : arc.points) {
      EXPECT_LT(std::abs(z), 1.0);
      const auto pv = phi_L(z, s.config.a, s.L, 1e-7);
      EXPECT_NE(std::find(pv.labels.begin(), pv.labels.end(), arc.j), pv.labels.end());
      EXPECT_NE(std::find(pv.labels.begin(), pv.labels.end(), arc.k), pv.labels.end());
    }
  }
  EXPECT_TRUE(pairs.count({0, 1}));
  EXPECT_TRUE(pairs.count({0, 2}));
}

TEST(Curve, InteriorArcsAreStraight) {
  const double tol = 1e-8;
  const auto cs = trace_curve(two_point(), 200, tol);
  int straight = 0;
  for (const auto& arc : cs.arcs) {
    if (arc.k == 0) continue;
    EXPECT_LE(chord_deviation(arc.points), 10 * tol);
    ++straight;
  }
  EXPECT_GE(straight, 1);
}

TEST(Curve, OrientationPutsJOnTheLeft) {
  const auto s = two_point();
  const auto cs = trace_curve(s, 200, 1e-8);
  for (const auto& arc : cs.arcs) {
    const std::size_t m = arc.points.size() / 2;
    const cplx p = arc.points[m], q = arc.points[m + 1];
    const cplx t = (q - p) / std::abs(q - p);
    const cplx mid = 0.5 * (p + q);
    const cplx left = mid + 1e-4 * cplx(0.0, 1.0) * t;
    const cplx right = mid - 1e-4 * cplx(0.0, 1.0) * t;
    EXPECT_EQ(classify(left, s), arc.j);
    EXPECT_EQ(classify(right, s), arc.k);
  }
}

TEST(Curve, SinglePointOrientation) {
  const auto s = single();
  const auto cs = trace_curve(s, 200, 1e-8);
  const auto& arc = cs.arcs[0];
  EXPECT_EQ(arc.j, 1);
  EXPECT_EQ(arc.k, 0);
  // Omega_1 is the bounded side, so the loop runs counterclockwise.
  double area = 0.0;
  for (std::size_t i = 0; i + 1 < arc.points.size(); ++i)
    area += std::imag(std::conj(arc.points[i]) * arc.points[i + 1]);
  EXPECT_GT(area, 0.0);
}

TEST(Curve, DistanceHelpers) {
  const std::vector<cplx> poly{0.0, 1.0, cplx(1.0, 1.0)};
  EXPECT_EQ(polyline_distance(0.5, poly), 0.0);
  EXPECT_NEAR(polyline_distance(cplx(0.5, -0.25), poly), 0.25, 1e-15);
  EXPECT_NEAR(polyline_distance(cplx(2.0, 0.5), poly), 1.0, 1e-15);
}

TEST(Curve, CsvLayout) {
  const auto cs = trace_curve(single(), 100, 1e-8);
  const auto text = curve_csv(cs);
  EXPECT_EQ(text.rfind("arc_id,j,k,re,im\n", 0), 0u);
  const auto rows = std::count(text.begin(), text.end(), '\n');
  EXPECT_EQ(static_cast<std::size_t>(rows), 1 + cs.arcs[0].points.size());
  EXPECT_EQ(text, curve_csv(trace_curve(single(), 100, 1e-8)));
}
