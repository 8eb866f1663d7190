#pragma once

#include "twogoods/fields.hpp"
#include "twogoods/solutions.hpp"

namespace twogoods {

/// Outcome of one family of sampled constraint checks.
struct CheckFragment {
  bool pass = true;
  double max_violation = 0.0;
  Point worst{0.0, 0.0};
};

/// Primal feasibility: u >= 0 and both gradient components <= 1.
/// The minimum gradient components are reported but not enforced.
struct PrimalCheckResult {
  CheckFragment feasibility;
  double min_g1 = 0.0;
  double min_g2 = 0.0;
};

struct VerificationReport {
  PrimalCheckResult primal;
  CheckFragment dual;
  CheckFragment complementarity;
  double primal_objective = 0.0;         ///< boundary form
  double primal_objective_direct = 0.0;  ///< direct cell quadrature
  /// False when the two primal-objective computations disagree beyond 1e-6
  /// (a structurally broken field, e.g. overlapping cells); never certified.
  bool objectives_consistent = true;
  double dual_objective = 0.0;
  double duality_gap = 0.0;  ///< dual_objective - primal_objective
  bool certified = false;
  int sample_grid = 0;
};

/// Expected payment functional of a utility field: the cell-wise quadrature of
/// grad(u) . x - u over the square.
double primal_objective_direct(const PiecewiseField& u);

/// Same functional via integration by parts:
///   (c+1) [ int u(c+1, t) dt + int u(t, c+1) dt ]
///   - c   [ int u(c, t) dt   + int u(t, c) dt   ]  - 3 int int u.
double primal_objective_boundary(const PiecewiseField& u);

/// Returns the boundary form after checking it against the direct form.
/// Throws std::runtime_error if the two disagree by more than 1e-6.
double primal_objective(const PiecewiseField& u);

/// Quadrature of z1 + z2 over the square, on the common refinement of the two
/// fields' cell decompositions.
double dual_objective(const PiecewiseField& z1, const PiecewiseField& z2);

/// Samples an n x n interior grid (inset 1e-7 from the boundary) and records
/// the worst of (gradient - 1)+ and (-u)+.
PrimalCheckResult check_primal(const PiecewiseField& u, int grid_n = 200,
                               double tol = 1e-9);

/// Interior samples: d z1/d x1 + d z2/d x2 <= 3 and z1, z2 >= 0.
/// Edge samples: z1(c,.) <= c, z2(.,c) <= c, z1(c+1,.) >= c+1,
/// z2(.,c+1) >= c+1.
CheckFragment check_dual(const PiecewiseField& z1, const PiecewiseField& z2,
                         int grid_n = 200, double tol = 1e-9);

/// Where u > tol the active constraint must be tight: interior samples need
/// d z1/d x1 + d z2/d x2 = 3, edge samples need the edge value pinned to c or
/// c+1.  Where z_j > tol the matching gradient of u must equal 1.
CheckFragment check_complementarity(const SolutionPair& pair, int grid_n = 200,
                                    double tol = 1e-9);

/// Runs every check and the two objectives; certified means all checks pass
/// and |duality_gap| <= obj_tol.
VerificationReport full_verify(const SolutionPair& pair, int grid_n = 200,
                               double tol = 1e-9, double obj_tol = 1e-6);

}  // namespace twogoods
