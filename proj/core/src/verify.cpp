#include "twogoods/verify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace twogoods {

namespace {

constexpr double kInset = 1e-7;

void note(CheckFragment& frag, double violation, Point where, double tol) {
  if (violation > frag.max_violation) {
    frag.max_violation = violation;
    frag.worst = where;
  }
  if (violation > tol) frag.pass = false;
}

double grid_coord(double c, int i, int n) {
  return c + kInset + (1.0 - 2.0 * kInset) * i / static_cast<double>(n - 1);
}

/// Breakpoints of a field restricted to a line (axis/other as in
/// region_line_interval), for exact piecewise integration along edges.
std::vector<double> edge_breakpoints(const PiecewiseField& field, int axis,
                                     double other) {
  std::vector<double> pts;
  const double lo = field.c, hi = field.c + 1.0;
  for (const GradientSpec& spec : field.specs) {
    const Interval iv = region_line_interval(spec.region, axis, other, lo, hi);
    if (iv.empty()) continue;
    pts.push_back(iv.lo);
    pts.push_back(iv.hi);
  }
  return pts;
}

double edge_integral(const PiecewiseField& u, int axis, double other) {
  const double lo = u.c, hi = u.c + 1.0;
  auto f = [&](double t) {
    return axis == 1 ? u.value({t, other}) : u.value({other, t});
  };
  return integrate_segment(f, lo, hi, edge_breakpoints(u, axis, other));
}

}  // namespace

double primal_objective_direct(const PiecewiseField& u) {
  auto integrand = [&](Point x) {
    const FieldValue v = u.evaluate(x);
    return v.g1 * x.x1 + v.g2 * x.x2 - v.value;
  };
  return integrate_cells(u.regions(), u.c, integrand);
}

double primal_objective_boundary(const PiecewiseField& u) {
  const double c = u.c;
  auto value = [&](Point x) { return u.value(x); };
  const double top = edge_integral(u, 1, c + 1.0);
  const double bottom = edge_integral(u, 1, c);
  const double right = edge_integral(u, 2, c + 1.0);
  const double left = edge_integral(u, 2, c);
  const double mass = integrate_cells(u.regions(), c, value);
  return (c + 1.0) * (top + right) - c * (bottom + left) - 3.0 * mass;
}

double primal_objective(const PiecewiseField& u) {
  const double direct = primal_objective_direct(u);
  const double boundary = primal_objective_boundary(u);
  if (std::abs(direct - boundary) > 1e-6) {
    throw std::runtime_error(
        "objective computations disagree: direct=" + std::to_string(direct) +
        " boundary=" + std::to_string(boundary));
  }
  return boundary;
}

double dual_objective(const PiecewiseField& z1, const PiecewiseField& z2) {
  const std::vector<Region> cells = refine(z1.regions(), z2.regions(), z1.c);
  auto f = [&](const Point& x) { return z1.value(x) + z2.value(x); };
  return integrate_cells(cells, z1.c, f);
}

PrimalCheckResult check_primal(const PiecewiseField& u, int grid_n,
                               double tol) {
  PrimalCheckResult out;
  out.min_g1 = 1.0;
  out.min_g2 = 1.0;
  const double c = u.c;
  for (int i = 0; i < grid_n; ++i) {
    const double x1 = grid_coord(c, i, grid_n);
    for (int j = 0; j < grid_n; ++j) {
      const Point x{x1, grid_coord(c, j, grid_n)};
      const FieldValue v = u.evaluate(x);
      note(out.feasibility, -v.value, x, tol);
      note(out.feasibility, v.g1 - 1.0, x, tol);
      note(out.feasibility, v.g2 - 1.0, x, tol);
      out.min_g1 = std::min(out.min_g1, v.g1);
      out.min_g2 = std::min(out.min_g2, v.g2);
    }
  }
  return out;
}

CheckFragment check_dual(const PiecewiseField& z1, const PiecewiseField& z2,
                         int grid_n, double tol) {
  CheckFragment frag;
  const double c = z1.c;
  for (int i = 0; i < grid_n; ++i) {
    const double x1 = grid_coord(c, i, grid_n);
    for (int j = 0; j < grid_n; ++j) {
      const Point x{x1, grid_coord(c, j, grid_n)};
      const double psi1 = z1.evaluate(x).g1;
      const double psi2 = z2.evaluate(x).g2;
      note(frag, psi1 + psi2 - 3.0, x, tol);
      note(frag, -z1.value(x), x, tol);
      note(frag, -z2.value(x), x, tol);
    }
  }
  for (int i = 0; i < grid_n; ++i) {
    const double t = grid_coord(c, i, grid_n);
    note(frag, z1.value({c, t}) - c, {c, t}, tol);
    note(frag, z2.value({t, c}) - c, {t, c}, tol);
    note(frag, (c + 1.0) - z1.value({c + 1.0, t}), {c + 1.0, t}, tol);
    note(frag, (c + 1.0) - z2.value({t, c + 1.0}), {t, c + 1.0}, tol);
  }
  return frag;
}

CheckFragment check_complementarity(const SolutionPair& pair, int grid_n,
                                    double tol) {
  CheckFragment frag;
  const double c = pair.c;
  const PiecewiseField& u = pair.u;
  const PiecewiseField& z1 = pair.z1;
  const PiecewiseField& z2 = pair.z2;
  for (int i = 0; i < grid_n; ++i) {
    const double x1 = grid_coord(c, i, grid_n);
    for (int j = 0; j < grid_n; ++j) {
      const Point x{x1, grid_coord(c, j, grid_n)};
      const FieldValue uv = u.evaluate(x);
      if (uv.value > tol) {
        const double psi1 = z1.evaluate(x).g1;
        const double psi2 = z2.evaluate(x).g2;
        note(frag, std::abs(psi1 + psi2 - 3.0), x, tol);
      }
      if (z1.value(x) > tol) note(frag, std::abs(uv.g1 - 1.0), x, tol);
      if (z2.value(x) > tol) note(frag, std::abs(uv.g2 - 1.0), x, tol);
    }
  }
  for (int i = 0; i < grid_n; ++i) {
    const double t = grid_coord(c, i, grid_n);
    if (u.value({c, t}) > tol) {
      note(frag, std::abs(z1.value({c, t}) - c), {c, t}, tol);
    }
    if (u.value({c + 1.0, t}) > tol) {
      note(frag, std::abs(z1.value({c + 1.0, t}) - (c + 1.0)), {c + 1.0, t},
           tol);
    }
    if (u.value({t, c}) > tol) {
      note(frag, std::abs(z2.value({t, c}) - c), {t, c}, tol);
    }
    if (u.value({t, c + 1.0}) > tol) {
      note(frag, std::abs(z2.value({t, c + 1.0}) - (c + 1.0)), {t, c + 1.0},
           tol);
    }
  }
  return frag;
}

VerificationReport full_verify(const SolutionPair& pair, int grid_n, double tol,
                               double obj_tol) {
  VerificationReport report;
  report.sample_grid = grid_n;
  report.primal = check_primal(pair.u, grid_n, tol);
  report.dual = check_dual(pair.z1, pair.z2, grid_n, tol);
  report.complementarity = check_complementarity(pair, grid_n, tol);
  report.primal_objective_direct = primal_objective_direct(pair.u);
  report.primal_objective = primal_objective_boundary(pair.u);
  report.objectives_consistent =
      std::abs(report.primal_objective - report.primal_objective_direct) <= 1e-6;
  report.dual_objective = dual_objective(pair.z1, pair.z2);
  report.duality_gap = report.dual_objective - report.primal_objective;
  report.certified = report.primal.feasibility.pass && report.dual.pass &&
                     report.complementarity.pass &&
                     report.objectives_consistent &&
                     std::abs(report.duality_gap) <= obj_tol;
  return report;
}

}  // namespace twogoods
