#include "twogoods/geometry.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace {

using namespace twogoods;

TEST(Geometry, SquarePolygonAreaAndOrientation) {
  for (double c : {0.0, 0.05, 0.5, 2.0}) {
    const Polygon sq = square_polygon(c);
    ASSERT_EQ(sq.size(), 4u);
    EXPECT_NEAR(polygon_area(sq), 1.0, 1e-15);
    EXPECT_NEAR(sq[0].x1, c, 1e-15);
    EXPECT_NEAR(sq[2].x2, c + 1.0, 1e-15);
  }
}

TEST(Geometry, ClipHalvesTheSquare) {
  const Polygon sq = square_polygon(0.0);
  const Polygon left = clip_polygon(sq, HalfPlane{1.0, 0.0, 0.5});  // x1 <= 0.5
  EXPECT_NEAR(polygon_area(left), 0.5, 1e-15);
  const Polygon tri = clip_polygon(sq, HalfPlane{1.0, 1.0, 1.0});  // x1+x2 <= 1
  EXPECT_NEAR(polygon_area(tri), 0.5, 1e-15);
}

TEST(Geometry, ClipToEmpty) {
  const Polygon sq = square_polygon(0.2);
  const Polygon none = clip_polygon(sq, HalfPlane{1.0, 0.0, 0.1});  // x1 <= 0.1
  EXPECT_TRUE(none.empty() || polygon_area(none) < 1e-15);
}

TEST(Geometry, RegionPolygonIntersectsWithSquare) {
  Region band;
  band.half_planes = {{-1.0, 0.0, -0.25}, {1.0, 0.0, 0.75}};  // 0.25<=x1<=0.75
  const Polygon poly = region_polygon(band, 0.0);
  EXPECT_NEAR(polygon_area(poly), 0.5, 1e-14);

  Region empty_region;
  empty_region.half_planes = {{1.0, 0.0, -1.0}};  // x1 <= -1
  const Polygon nothing = region_polygon(empty_region, 0.0);
  EXPECT_TRUE(nothing.empty() || polygon_area(nothing) < 1e-15);
}

TEST(Geometry, RegionContains) {
  Region r;
  r.half_planes = {{1.0, 1.0, 1.0}};  // x1 + x2 <= 1
  EXPECT_TRUE(r.contains({0.2, 0.2}));
  EXPECT_TRUE(r.contains({0.5, 0.5}));  // boundary counts as inside
  EXPECT_FALSE(r.contains({0.8, 0.8}));
}

TEST(Geometry, RegionLineInterval) {
  Region band;
  band.half_planes = {{-1.0, 0.0, -0.25}, {1.0, 0.0, 0.75},   // 0.25<=x1<=0.75
                      {0.0, 1.0, 0.6}};                        // x2 <= 0.6
  // Scan along x1 at x2 = 0.5 (inside the x2 bound).
  Interval along1 = region_line_interval(band, 1, 0.5, 0.0, 1.0);
  EXPECT_NEAR(along1.lo, 0.25, 1e-12);
  EXPECT_NEAR(along1.hi, 0.75, 1e-12);
  // Same scan at x2 = 0.7: the non-scan constraint excludes the whole line.
  Interval off = region_line_interval(band, 1, 0.7, 0.0, 1.0);
  EXPECT_TRUE(off.empty());
  // Scan along x2 at x1 = 0.5: only the x2 <= 0.6 bound is active.
  Interval along2 = region_line_interval(band, 2, 0.5, 0.0, 1.0);
  EXPECT_NEAR(along2.lo, 0.0, 1e-12);
  EXPECT_NEAR(along2.hi, 0.6, 1e-12);
  // A diagonal constraint cuts the scan line at a computed point.
  Region diag;
  diag.half_planes = {{1.0, 1.0, 1.0}};  // x1 + x2 <= 1
  Interval cut = region_line_interval(diag, 1, 0.3, 0.0, 1.0);
  EXPECT_NEAR(cut.lo, 0.0, 1e-12);
  EXPECT_NEAR(cut.hi, 0.7, 1e-12);
}

TEST(Geometry, IntersectCombinesConstraints) {
  Region a;
  a.half_planes = {{1.0, 0.0, 0.5}};   // x1 <= 0.5
  Region b;
  b.half_planes = {{0.0, 1.0, 0.25}};  // x2 <= 0.25
  const Region both = intersect(a, b);
  EXPECT_NEAR(polygon_area(region_polygon(both, 0.0)), 0.125, 1e-14);
}

TEST(Geometry, RefineProducesCommonCells) {
  Region left, right, bottom, top;
  left.half_planes = {{1.0, 0.0, 0.5}};
  left.label = "L";
  right.half_planes = {{-1.0, 0.0, -0.5}};
  right.label = "R";
  bottom.half_planes = {{0.0, 1.0, 0.5}};
  bottom.label = "B";
  top.half_planes = {{0.0, -1.0, -0.5}};
  top.label = "T";
  const auto cells = refine({left, right}, {bottom, top}, 0.0);
  ASSERT_EQ(cells.size(), 4u);
  double total = 0.0;
  for (const auto& cell : cells) total += polygon_area(region_polygon(cell, 0.0));
  EXPECT_NEAR(total, 1.0, 1e-12);
}

TEST(Geometry, PolygonQuadratureExactForQuartics) {
  const Polygon sq = square_polygon(0.0);
  // integral over [0,1]^2 of x1^2 x2^2 = 1/9.
  EXPECT_NEAR(integrate_polygon(sq, [](const Point& p) {
                return p.x1 * p.x1 * p.x2 * p.x2;
              }),
              1.0 / 9.0, 1e-14);
  // integral of x1^4 = 1/5 (total degree 4).
  EXPECT_NEAR(integrate_polygon(sq, [](const Point& p) {
                return p.x1 * p.x1 * p.x1 * p.x1;
              }),
              0.2, 1e-14);
  // Unit right triangle: integral of x1^2 x2^2 = 2!2!/6! = 1/180.
  const Polygon tri = {{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}};
  EXPECT_NEAR(integrate_polygon(tri, [](const Point& p) {
                return p.x1 * p.x1 * p.x2 * p.x2;
              }),
              1.0 / 180.0, 1e-15);
}

TEST(Geometry, QuadratureStableUnderSubdivision) {
  const Polygon sq = square_polygon(0.3);
  auto f = [](const Point& p) {
    return 1.7 + 0.3 * p.x1 - p.x2 + p.x1 * p.x2 + 0.25 * p.x2 * p.x2;
  };
  const double coarse = integrate_polygon(sq, f);
  QuadratureConfig fine;
  fine.subdivisions = 4;
  EXPECT_NEAR(coarse, integrate_polygon(sq, f, fine), 1e-12);
}

TEST(Geometry, SegmentQuadratureWithBreakpoints) {
  // |x - 0.5| on [0, 1] is piecewise affine; splitting at 0.5 makes the
  // 3-point rule exact.
  auto f = [](double x) { return std::abs(x - 0.5); };
  EXPECT_NEAR(integrate_segment(f, 0.0, 1.0, {0.5}), 0.25, 1e-15);
  // Exact for cubics without any breakpoints.
  auto cubic = [](double x) { return x * x * x; };
  EXPECT_NEAR(integrate_segment(cubic, 0.0, 2.0), 4.0, 1e-13);
  // Breakpoints outside the range and duplicates are ignored gracefully.
  EXPECT_NEAR(integrate_segment(f, 0.0, 1.0, {-1.0, 0.5, 0.5, 7.0}), 0.25,
              1e-14);
}

}  // namespace
