#include "twogoods/geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace twogoods {

bool Region::contains(const Point& p, double eps) const {
  for (const HalfPlane& hp : half_planes) {
    if (hp.signed_violation(p) > eps) return false;
  }
  return true;
}

Polygon square_polygon(double c) {
  return {{c, c}, {c + 1.0, c}, {c + 1.0, c + 1.0}, {c, c + 1.0}};
}

Polygon clip_polygon(const Polygon& poly, const HalfPlane& hp) {
  Polygon out;
  const size_t m = poly.size();
  if (m == 0) return out;
  out.reserve(m + 1);
  for (size_t i = 0; i < m; ++i) {
    const Point& p = poly[i];
    const Point& q = poly[(i + 1) % m];
    const double fp = hp.signed_violation(p);
    const double fq = hp.signed_violation(q);
    if (fp <= 0.0) out.push_back(p);
    if ((fp < 0.0 && fq > 0.0) || (fq < 0.0 && fp > 0.0)) {
      const double t = fp / (fp - fq);
      out.push_back({p.x1 + t * (q.x1 - p.x1), p.x2 + t * (q.x2 - p.x2)});
    }
  }
  return out;
}

Polygon region_polygon(const Region& region, double c) {
  Polygon poly = square_polygon(c);
  for (const HalfPlane& hp : region.half_planes) {
    poly = clip_polygon(poly, hp);
    if (poly.empty()) break;
  }
  return poly;
}

double polygon_area(const Polygon& poly) {
  if (poly.size() < 3) return 0.0;
  double s = 0.0;
  const size_t m = poly.size();
  for (size_t i = 0; i < m; ++i) {
    const Point& p = poly[i];
    const Point& q = poly[(i + 1) % m];
    s += p.x1 * q.x2 - q.x1 * p.x2;
  }
  return std::abs(s) / 2.0;
}

Interval region_line_interval(const Region& region, int axis, double other,
                              double lo, double hi) {
  if (axis != 1 && axis != 2) throw std::invalid_argument("axis must be 1 or 2");
  Interval iv{lo, hi};
  for (const HalfPlane& hp : region.half_planes) {
    const double coef = (axis == 1) ? hp.a1 : hp.a2;
    const double rest = (axis == 1) ? hp.a2 * other : hp.a1 * other;
    const double rhs = hp.b - rest;
    if (std::abs(coef) <= 1e-14) {
      if (-rhs > kGeomEps) return Interval{lo, lo - 1.0};  // line misses region
      continue;
    }
    if (coef > 0.0) {
      iv.hi = std::min(iv.hi, rhs / coef);
    } else {
      iv.lo = std::max(iv.lo, rhs / coef);
    }
    if (iv.empty()) return iv;
  }
  return iv;
}

Region intersect(const Region& a, const Region& b) {
  Region out;
  out.half_planes = a.half_planes;
  out.half_planes.insert(out.half_planes.end(), b.half_planes.begin(),
                         b.half_planes.end());
  out.label = a.label + "&" + b.label;
  return out;
}

std::vector<Region> refine(const std::vector<Region>& a,
                           const std::vector<Region>& b, double c,
                           double min_area) {
  std::vector<Region> cells;
  for (const Region& ra : a) {
    for (const Region& rb : b) {
      Region cell = intersect(ra, rb);
      if (polygon_area(region_polygon(cell, c)) > min_area) {
        cells.push_back(std::move(cell));
      }
    }
  }
  return cells;
}

namespace {

// 3-point Gauss-Legendre nodes/weights on [0, 1].
constexpr double kGaussNode0 = 0.5 - 0.38729833462074168852;  // (1 - sqrt(3/5))/2
constexpr double kGaussNode1 = 0.5;
constexpr double kGaussNode2 = 0.5 + 0.38729833462074168852;
constexpr double kGaussWeight0 = 5.0 / 18.0;
constexpr double kGaussWeight1 = 8.0 / 18.0;
constexpr double kGaussWeight2 = 5.0 / 18.0;
constexpr std::array<double, 3> kGaussNodes{kGaussNode0, kGaussNode1, kGaussNode2};
constexpr std::array<double, 3> kGaussWeights{kGaussWeight0, kGaussWeight1,
                                              kGaussWeight2};

// Integral over the triangle (A, B, C) via the collapsed tensor rule:
// P(a, b) = A + a*(B - A) + a*b*(C - B), |J| = 2*area*a.
double integrate_triangle(const Point& A, const Point& B, const Point& C,
                          const std::function<double(const Point&)>& f) {
  const double twice_area =
      std::abs((B.x1 - A.x1) * (C.x2 - A.x2) - (C.x1 - A.x1) * (B.x2 - A.x2));
  if (twice_area == 0.0) return 0.0;
  double sum = 0.0;
  for (int i = 0; i < 3; ++i) {
    const double a = kGaussNodes[i];
    for (int j = 0; j < 3; ++j) {
      const double b = kGaussNodes[j];
      const Point p{A.x1 + a * (B.x1 - A.x1) + a * b * (C.x1 - B.x1),
                    A.x2 + a * (B.x2 - A.x2) + a * b * (C.x2 - B.x2)};
      sum += kGaussWeights[i] * kGaussWeights[j] * a * f(p);
    }
  }
  return sum * twice_area;
}

double integrate_triangle_subdivided(const Point& A, const Point& B,
                                     const Point& C,
                                     const std::function<double(const Point&)>& f,
                                     int levels) {
  if (levels <= 1) return integrate_triangle(A, B, C, f);
  const Point ab{(A.x1 + B.x1) / 2.0, (A.x2 + B.x2) / 2.0};
  const Point bc{(B.x1 + C.x1) / 2.0, (B.x2 + C.x2) / 2.0};
  const Point ca{(C.x1 + A.x1) / 2.0, (C.x2 + A.x2) / 2.0};
  return integrate_triangle_subdivided(A, ab, ca, f, levels - 1) +
         integrate_triangle_subdivided(ab, B, bc, f, levels - 1) +
         integrate_triangle_subdivided(ca, bc, C, f, levels - 1) +
         integrate_triangle_subdivided(ab, bc, ca, f, levels - 1);
}

}  // namespace

double integrate_polygon(const Polygon& poly,
                         const std::function<double(const Point&)>& f,
                         const QuadratureConfig& cfg) {
  if (poly.size() < 3) return 0.0;
  double sum = 0.0;
  for (size_t i = 1; i + 1 < poly.size(); ++i) {
    sum += integrate_triangle_subdivided(poly[0], poly[i], poly[i + 1], f,
                                         cfg.subdivisions);
  }
  return sum;
}

double integrate_segment(const std::function<double(double)>& f, double lo,
                         double hi, std::vector<double> breakpoints) {
  if (hi <= lo) return 0.0;
  breakpoints.push_back(lo);
  breakpoints.push_back(hi);
  std::sort(breakpoints.begin(), breakpoints.end());
  double sum = 0.0;
  double prev = lo;
  for (double t : breakpoints) {
    t = std::clamp(t, lo, hi);
    if (t - prev > 1e-15) {
      const double len = t - prev;
      for (int k = 0; k < 3; ++k) {
        sum += kGaussWeights[k] * f(prev + kGaussNodes[k] * len) * len;
      }
      prev = t;
    }
  }
  return sum;
}

}  // namespace twogoods
