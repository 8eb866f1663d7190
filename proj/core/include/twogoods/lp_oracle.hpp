#pragma once

#include <string>
#include <vector>

#include "twogoods/fields.hpp"

namespace twogoods {

enum class LpStatus { optimal, unbounded, infeasible };

/// Discretized revenue program on an n x n grid over [c, c+1]^2.
/// Variables u_ij >= 0 at nodes (c + i*delta, c + j*delta), delta = 1/(n-1),
/// stored row-major (index i*n + j).  Constraints: forward differences
/// u_{i+1,j} - u_{ij} <= delta and u_{i,j+1} - u_{ij} <= delta.
/// Objective: trapezoid discretization of the boundary revenue form,
/// maximize sum w_ij u_ij.
struct LpInstance {
  int n = 0;
  double c = 0.0;
  double delta = 0.0;
  std::vector<double> w;  ///< objective weights, row-major

  double weight(int i, int j) const { return w[static_cast<size_t>(i) * n + j]; }
};

struct LpSolution {
  LpStatus status = LpStatus::optimal;
  double value = 0.0;
  std::vector<double> u_grid;  ///< row-major node values
  long iterations = 0;
};

/// Builds the grid program.  Requires n >= 4.
LpInstance build_lp(double c, int n);

/// Objective value w . u of an arbitrary grid vector (u need not be feasible).
double lp_objective(const LpInstance& lp, const std::vector<double>& u);

/// Samples a field at the instance's grid nodes (row-major).
std::vector<double> restrict_field(const PiecewiseField& field, int n);

/// Solves the instance exactly.  Dispatches on size: dense tableau simplex
/// with Bland's rule for n <= 12, min-cost-flow (successive shortest paths)
/// for larger n.  Both are exact and deterministic; they agree to rounding.
LpSolution solve(const LpInstance& lp);
LpSolution solve_simplex(const LpInstance& lp);
LpSolution solve_mcf(const LpInstance& lp);

/// build + solve, returning only the optimal value.
double oracle_value(double c, int n);

/// oracle_value bundled with the closed-form benchmarks it is compared to.
struct OracleReport {
  double c = 0.0;
  int n = 0;
  double value = 0.0;
  double bundle_revenue = 0.0;    ///< brev(c)
  double det_revenue = 0.0;       ///< best deterministic-menu revenue
  bool exceeds_bundle = false;    ///< value > bundle_revenue
  bool exceeds_det = false;       ///< value > det_revenue
};
OracleReport oracle_report(double c, int n);

/// Plain-text LP-format dump (objective, constraints, bounds) for external
/// cross-checking.
std::string dump_lp(const LpInstance& lp);

/// Generic dense-tableau simplex for max obj.x s.t. rows.x <= rhs, x >= 0,
/// rhs >= 0 (slack basis start).  Bland's rule; iteration cap throws.
struct DenseLp {
  int num_vars = 0;
  std::vector<std::vector<double>> rows;  ///< each of size num_vars
  std::vector<double> rhs;
  std::vector<double> objective;
};

struct DenseLpResult {
  LpStatus status = LpStatus::optimal;
  double value = 0.0;
  std::vector<double> x;
  long iterations = 0;
};

DenseLpResult simplex_maximize(const DenseLp& lp, long max_iterations = 1000000);

}  // namespace twogoods
