#pragma once

#include "twogoods/closed_forms.hpp"
#include "twogoods/fields.hpp"
#include "twogoods/mechanisms.hpp"

namespace twogoods {

enum class Regime { A, B };
enum class DualVariant { standard, alternative };

/// A primal utility field together with the matching dual pair (z1, z2).
struct SolutionPair {
  PiecewiseField u;
  PiecewiseField z1;
  PiecewiseField z2;
  Regime regime;
  DualVariant variant = DualVariant::standard;
  double c = 0.0;
};

/// The candidate optimal utility field for the given regime.  Regime A
/// requires 0 <= c <= cbar() unless force is set (out-of-range builds are for
/// failure studies and are never certificates).  Regime B accepts any c >= 0;
/// below cbar() its dual loses nonnegativity, which verification reports.
PiecewiseField build_primal(double c, Regime regime, bool force = false);

/// The dual pair (z1, z2); z2 is the reflection of z1 through the diagonal.
/// Domain rules as in build_primal.  The alternative variant differs from the
/// standard one only in regime A (a steeper interior tent and a split wedge);
/// for regime B the variant argument is ignored.
std::pair<PiecewiseField, PiecewiseField> build_dual(
    double c, Regime regime, DualVariant variant = DualVariant::standard,
    bool force = false);

SolutionPair build_pair(double c, Regime regime,
                        DualVariant variant = DualVariant::standard,
                        bool force = false);

struct MenuExtraction {
  bool convex = false;  ///< u equals the upper envelope of its cell planes
  Menu menu;            ///< valid when convex
  Point witness;        ///< a point with u < envelope - tol when not convex
  double deficit = 0.0; ///< envelope - u at the witness
};

/// If u is the upper envelope of its per-cell affine extensions (checked on a
/// dense grid with tolerance tol), returns the menu whose options are the
/// cell gradients priced at t = grad·x - u; otherwise returns a witness of
/// the failure.  Zero-area cells contribute no option.
MenuExtraction extract_menu(const PiecewiseField& u, int grid_n = 201,
                            double tol = 1e-9);

/// Minimum of the field over the horizontal segment {x2} x [lo, hi]
/// (dense scan plus golden-section polish; deterministic).
double min_on_horizontal(const PiecewiseField& field, double x2, double lo,
                         double hi);

}  // namespace twogoods
