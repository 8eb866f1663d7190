#pragma once

#include <functional>
#include <string>
#include <vector>

namespace twogoods {

/// Shared absolute tolerance for geometric predicates (coordinates are O(1)).
inline constexpr double kGeomEps = 1e-12;

struct Point {
  double x1 = 0.0;
  double x2 = 0.0;
};

/// Closed half-plane {x : a1*x1 + a2*x2 <= b}.
struct HalfPlane {
  double a1 = 0.0;
  double a2 = 0.0;
  double b = 0.0;

  double signed_violation(const Point& p) const { return a1 * p.x1 + a2 * p.x2 - b; }
};

/// Convex region given as an intersection of closed half-planes.
/// Regions may be degenerate (zero area); emptiness is only detected
/// geometrically, by clipping against the type square.
struct Region {
  std::vector<HalfPlane> half_planes;
  std::string label;

  bool contains(const Point& p, double eps = kGeomEps) const;
};

using Polygon = std::vector<Point>;

/// Counter-clockwise vertex list of the type square [c, c+1]^2.
Polygon square_polygon(double c);

/// Sutherland-Hodgman clip of a convex polygon against one half-plane.
Polygon clip_polygon(const Polygon& poly, const HalfPlane& hp);

/// The (possibly empty) polygon of region ∩ [c, c+1]^2.
Polygon region_polygon(const Region& region, double c);

/// Shoelace area (polygons from clipping are convex and consistently wound).
double polygon_area(const Polygon& poly);

struct Interval {
  double lo = 0.0;
  double hi = -1.0;

  bool empty() const { return hi <= lo; }
  double length() const { return hi > lo ? hi - lo : 0.0; }
};

/// Parameter range {t in [lo, hi] : P(t) ∈ region} where P(t) is (t, other)
/// for axis 1 and (other, t) for axis 2.  Constraints that do not involve the
/// scan coordinate are treated as satisfied within kGeomEps.
Interval region_line_interval(const Region& region, int axis, double other,
                              double lo, double hi);

/// Region whose points satisfy both constraint sets.
Region intersect(const Region& a, const Region& b);

/// Common refinement of two cell lists: all pairwise intersections whose
/// clipped area inside the type square exceeds min_area.
std::vector<Region> refine(const std::vector<Region>& a,
                           const std::vector<Region>& b, double c,
                           double min_area = 1e-14);

struct QuadratureConfig {
  /// Uniform refinements applied to each triangle of the fan triangulation
  /// (1 = no subdivision).  Gauss order is fixed at 3x3 per sub-triangle,
  /// exact for polynomial integrands up to total degree 4.
  int subdivisions = 1;
};

/// Integral of f over a convex polygon: fan triangulation plus a collapsed
/// 3x3 Gauss-Legendre rule per (sub-)triangle.
double integrate_polygon(const Polygon& poly,
                         const std::function<double(const Point&)>& f,
                         const QuadratureConfig& cfg = {});

/// 1-D integral of f over [lo, hi], split at the given breakpoints, 3-point
/// Gauss-Legendre per piece (exact for piecewise quadratics split there).
double integrate_segment(const std::function<double(double)>& f, double lo,
                         double hi, std::vector<double> breakpoints = {});

}  // namespace twogoods
