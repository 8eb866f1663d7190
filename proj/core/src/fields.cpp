#include "twogoods/fields.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace twogoods {

namespace {

constexpr double kScanEps = 1e-12;

// Integral of the affine form along the scan line over [t0, t1], where the
// scanned coordinate is t and the other coordinate is fixed.
double affine_line_integral(const AffineForm& form, int axis, double other,
                            double t0, double t1) {
  const double bt = (axis == 1) ? form.b1 : form.b2;
  const double rest = form.a0 + ((axis == 1) ? form.b2 : form.b1) * other;
  return rest * (t1 - t0) + bt * (t1 * t1 - t0 * t0) / 2.0;
}

}  // namespace

double PiecewiseField::anchor_value(double t) const {
  for (const AnchorSegment& seg : anchors) {
    if (t >= seg.lo - kScanEps && t <= seg.hi + kScanEps) return seg.value(t);
  }
  return 0.0;
}

double PiecewiseField::value(const Point& p) const {
  const double other = (integration_axis == 1) ? p.x2 : p.x1;
  const double target = (integration_axis == 1) ? p.x1 : p.x2;
  double acc = anchor_value(other);
  if (target <= c + kScanEps) return acc;

  const size_t m = specs.size();
  std::vector<Interval> ivs(m);
  for (size_t i = 0; i < m; ++i) {
    ivs[i] = region_line_interval(specs[i].region, integration_axis, other, c,
                                  target);
  }

  double t = c;
  while (t < target - kScanEps) {
    size_t cur = m;
    for (size_t i = 0; i < m; ++i) {
      if (!ivs[i].empty() && ivs[i].lo <= t + kScanEps && ivs[i].hi > t + kScanEps) {
        cur = i;
        break;
      }
    }
    if (cur == m) {
      // Gap: integrate zero up to the next covered stretch.
      double next = target;
      for (size_t i = 0; i < m; ++i) {
        if (!ivs[i].empty() && ivs[i].lo > t + kScanEps) {
          next = std::min(next, ivs[i].lo);
        }
      }
      t = std::max(next, t + kScanEps);
      continue;
    }
    double next = std::min(ivs[cur].hi, target);
    // An earlier-listed cell starting inside the stretch takes over there.
    for (size_t i = 0; i < cur; ++i) {
      if (!ivs[i].empty() && ivs[i].lo > t + kScanEps && ivs[i].lo < next) {
        next = ivs[i].lo;
      }
    }
    const AffineForm& g =
        (integration_axis == 1) ? specs[cur].g1 : specs[cur].g2;
    acc += affine_line_integral(g, integration_axis, other, t, next);
    t = next;
  }
  return acc;
}

FieldValue PiecewiseField::evaluate(const Point& p) const {
  for (const GradientSpec& spec : specs) {
    if (spec.region.contains(p)) {
      return FieldValue{value(p), spec.g1(p), spec.g2(p)};
    }
  }
  throw std::runtime_error("PiecewiseField::evaluate: point (" +
                           std::to_string(p.x1) + ", " + std::to_string(p.x2) +
                           ") lies in no cell");
}

PiecewiseField PiecewiseField::transpose() const {
  PiecewiseField out;
  out.integration_axis = (integration_axis == 1) ? 2 : 1;
  out.c = c;
  out.anchors = anchors;
  out.specs.reserve(specs.size());
  for (const GradientSpec& spec : specs) {
    GradientSpec t;
    t.region.label = spec.region.label + "'";
    t.region.half_planes.reserve(spec.region.half_planes.size());
    for (const HalfPlane& hp : spec.region.half_planes) {
      t.region.half_planes.push_back({hp.a2, hp.a1, hp.b});
    }
    t.g1 = AffineForm{spec.g2.a0, spec.g2.b2, spec.g2.b1};
    t.g2 = AffineForm{spec.g1.a0, spec.g1.b2, spec.g1.b1};
    out.specs.push_back(std::move(t));
  }
  return out;
}

std::vector<Region> PiecewiseField::regions() const {
  std::vector<Region> out;
  out.reserve(specs.size());
  for (const GradientSpec& spec : specs) out.push_back(spec.region);
  return out;
}

PartitionReport partition_check(const std::vector<GradientSpec>& specs,
                                double c, double tol) {
  PartitionReport report;
  const size_t m = specs.size();
  std::vector<Polygon> polys(m);
  for (size_t i = 0; i < m; ++i) {
    polys[i] = region_polygon(specs[i].region, c);
    report.total_area += polygon_area(polys[i]);
  }
  report.area_defect = std::abs(report.total_area - 1.0);
  for (size_t i = 0; i < m; ++i) {
    if (polys[i].empty()) continue;
    for (size_t j = i + 1; j < m; ++j) {
      Polygon overlap = polys[i];
      for (const HalfPlane& hp : specs[j].region.half_planes) {
        overlap = clip_polygon(overlap, hp);
        if (overlap.empty()) break;
      }
      const double a = polygon_area(overlap);
      if (a > report.max_overlap) {
        report.max_overlap = a;
        report.worst_pair =
            specs[i].region.label + " / " + specs[j].region.label;
      }
    }
  }
  report.pass = report.area_defect <= tol && report.max_overlap <= tol;
  return report;
}

double integrate_cells(const std::vector<Region>& cells, double c,
                       const std::function<double(const Point&)>& f,
                       const QuadratureConfig& cfg) {
  double sum = 0.0;
  for (const Region& cell : cells) {
    const Polygon poly = region_polygon(cell, c);
    if (poly.size() >= 3) sum += integrate_polygon(poly, f, cfg);
  }
  return sum;
}

}  // namespace twogoods
