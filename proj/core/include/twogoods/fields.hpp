#pragma once

#include <string>
#include <utility>
#include <vector>

#include "twogoods/geometry.hpp"

namespace twogoods {

/// Affine expression a0 + b1*x1 + b2*x2.
struct AffineForm {
  double a0 = 0.0;
  double b1 = 0.0;
  double b2 = 0.0;

  double operator()(const Point& p) const { return a0 + b1 * p.x1 + b2 * p.x2; }
};

/// One cell of a piecewise field: a convex region with affine gradient
/// components (g1, g2).  For scanned fields only the component along the
/// integration axis is meaningful everywhere; the other is reported as given.
struct GradientSpec {
  Region region;
  AffineForm g1;
  AffineForm g2;
};

/// Anchor value on a piece [lo, hi] of the starting edge, affine in the edge
/// coordinate t: value = a0 + slope * t.
struct AnchorSegment {
  double lo = 0.0;
  double hi = 0.0;
  double a0 = 0.0;
  double slope = 0.0;

  double value(double t) const { return a0 + slope * t; }
};

struct FieldValue {
  double value = 0.0;
  double g1 = 0.0;
  double g2 = 0.0;
};

/// A function on the type square [c, c+1]^2 defined by per-cell affine
/// gradients plus an anchor on the starting edge of the integration axis
/// (x1 = c for axis 1, x2 = c for axis 2).  Pointwise values are recovered by
/// integrating the axis gradient in closed form along the scan line.  Where
/// cells overlap the first-listed cell wins; uncovered stretches integrate
/// zero.
struct PiecewiseField {
  std::vector<GradientSpec> specs;
  std::vector<AnchorSegment> anchors;
  int integration_axis = 1;  ///< 1 or 2
  double c = 0.0;

  double anchor_value(double t) const;

  /// Value at p (scan integral; defined even between cells).
  double value(const Point& p) const;

  /// Value and gradient at p.  Throws std::runtime_error if p lies in no cell
  /// (the gradient is undefined there).
  FieldValue evaluate(const Point& p) const;

  /// The reflected field x -> value(x2, x1): swapped half-plane coefficients,
  /// swapped gradient components, same anchors, opposite axis.
  PiecewiseField transpose() const;

  std::vector<Region> regions() const;
};

struct PartitionReport {
  double total_area = 0.0;     ///< sum of cell areas inside the square
  double area_defect = 0.0;    ///< |total_area - 1|
  double max_overlap = 0.0;    ///< largest pairwise intersection area
  std::string worst_pair;      ///< labels of the most-overlapping cells
  bool pass = false;           ///< area_defect <= tol and max_overlap <= tol
};

/// Checks that the cells tile the square: areas sum to 1 and pairwise
/// overlaps are negligible (both within tol).
PartitionReport partition_check(const std::vector<GradientSpec>& specs,
                                double c, double tol = 1e-9);

/// Integral of f over the square decomposed into the given cells (each cell
/// clipped to the square).  Exact when f is polynomial of degree <= 4 on each
/// cell.
double integrate_cells(const std::vector<Region>& cells, double c,
                       const std::function<double(const Point&)>& f,
                       const QuadratureConfig& cfg = {});

}  // namespace twogoods
