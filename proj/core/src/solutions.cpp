#include "twogoods/solutions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace twogoods {

namespace {

// Half-plane constructors, reading as the constraint they impose.
HalfPlane x1_le(double v) { return {1.0, 0.0, v}; }
HalfPlane x1_ge(double v) { return {-1.0, 0.0, -v}; }
HalfPlane x2_le(double v) { return {0.0, 1.0, v}; }
HalfPlane x2_ge(double v) { return {0.0, -1.0, -v}; }
HalfPlane sum_le(double v) { return {1.0, 1.0, v}; }
HalfPlane sum_ge(double v) { return {-1.0, -1.0, -v}; }
HalfPlane below_diag() { return {-1.0, 1.0, 0.0}; }  // x2 <= x1
HalfPlane above_diag() { return {1.0, -1.0, 0.0}; }  // x1 <= x2

AffineForm constant(double v) { return {v, 0.0, 0.0}; }
AffineForm in_x1(double a0, double b1) { return {a0, b1, 0.0}; }
AffineForm in_x2(double a0, double b2) { return {a0, 0.0, b2}; }

GradientSpec cell(std::string label, std::vector<HalfPlane> hps, AffineForm g1,
                  AffineForm g2) {
  GradientSpec spec;
  spec.region.label = std::move(label);
  spec.region.half_planes = std::move(hps);
  spec.g1 = g1;
  spec.g2 = g2;
  return spec;
}

void check_regime_a_domain(double c, bool force) {
  if (!std::isfinite(c)) throw std::domain_error("c must be finite");
  if (!force && (c < 0.0 || c > cbar())) {
    throw std::domain_error("regime A construction requires 0 <= c <= cbar");
  }
}

PiecewiseField primal_a(double c, bool force) {
  check_regime_a_domain(c, force);
  const RegimeAParams P = params_a_unchecked(c);
  const AffineForm one = constant(1.0), zero = constant(0.0);
  PiecewiseField u;
  u.c = c;
  u.integration_axis = 2;
  u.specs = {
      cell("T", {x1_le(P.d), sum_ge(P.q + P.d)}, one, one),
      cell("T'", {x2_le(P.d), sum_ge(P.q + P.d)}, one, one),
      cell("U2", {x1_ge(P.d), x1_le(P.b), x2_ge(P.q)}, zero, one),
      cell("U1", {x1_ge(P.q), x2_ge(P.d), x2_le(P.b)}, one, zero),
      cell("C", {x1_ge(P.b), x2_ge(P.b), sum_ge(P.p)}, one, one),
      cell("Wmid",
           {sum_ge(P.q + P.d), sum_le(P.p), x1_ge(P.d), x1_le(P.q),
            x2_ge(P.d), x2_le(P.q)},
           zero, zero),
      cell("Wlow", {sum_le(P.q + P.d)}, zero, zero),
  };
  // Bottom edge utility: 0 left of r, then x1 - r (T' reaches the edge).
  u.anchors = {{c, P.r, 0.0, 0.0}, {P.r, c + 1.0, -P.r, 1.0}};
  return u;
}

PiecewiseField primal_b(double c) {
  if (!std::isfinite(c) || c < 0.0) {
    throw std::domain_error("regime B construction requires c >= 0");
  }
  const RegimeBParams B = params_b(c);
  PiecewiseField u;
  u.c = c;
  u.integration_axis = 2;
  u.specs = {
      cell("bundle", {sum_ge(B.p)}, constant(1.0), constant(1.0)),
      cell("white", {sum_le(B.p)}, constant(0.0), constant(0.0)),
  };
  u.anchors = {{c, B.q, 0.0, 0.0}, {B.q, c + 1.0, c - B.p, 1.0}};
  return u;
}

// First coordinate of z1's gradient is the transfer density psi1; the second
// component is unused for scanned dual fields and set to zero.
GradientSpec dual_cell(std::string label, std::vector<HalfPlane> hps,
                       AffineForm psi) {
  return cell(std::move(label), std::move(hps), psi, constant(0.0));
}

PiecewiseField dual_z1_a_standard(double c, bool force) {
  check_regime_a_domain(c, force);
  const RegimeAParams P = params_a_unchecked(c);
  const double mu = 9.0 / (2.0 * (c + 1.0));
  // psi on the top band left of d: 3 - phi(x1) = 3 (x1 - d) / rho.
  const AffineForm top_dip = in_x1(-3.0 * P.d / P.rho, 3.0 / P.rho);
  const AffineForm phi_of_x2 =
      in_x2((4.0 * c + 1.0) / P.rho, -3.0 / P.rho);
  PiecewiseField z1;
  z1.c = c;
  z1.integration_axis = 1;
  // Listed order is semantic: where cells share a boundary the first match
  // wins, and the order below keeps the reflected pair summing to 3 on the
  // shared lines inside {u > 0}.
  z1.specs = {
      dual_cell("Tup", {x1_le(P.d), x2_ge(P.r)}, top_dip),
      dual_cell("TopL", {x1_ge(P.d), x1_le(P.b), x2_ge(P.q)}, constant(0.0)),
      dual_cell("TupLow",
                {x1_le(P.d), x2_ge(P.q), x2_le(P.r), sum_ge(P.q + P.d)},
                constant(0.0)),
      dual_cell("CV", {x1_ge(P.b), x1_le(P.q), x2_ge(P.q)},
                in_x1(-mu * P.b, mu)),
      dual_cell("CH", {x1_ge(P.q), x2_ge(P.b), x2_le(P.q)},
                in_x2(3.0 + mu * P.b, -mu)),
      dual_cell("TR", {x1_ge(P.q), x2_ge(P.q)}, constant(1.5)),
      dual_cell("Wedge", {sum_ge(P.p), x1_le(P.q), x2_ge(P.b), x2_le(P.q)},
                constant(1.5)),
      dual_cell("WmidB",
                {sum_ge(P.q + P.d), sum_le(P.p), x2_ge(P.b), x2_le(P.q)},
                constant(0.0)),
      dual_cell("U1z", {x1_ge(P.q), x2_ge(P.d), x2_le(P.b)}, constant(3.0)),
      dual_cell("WmidL",
                {sum_ge(P.q + P.d), x1_le(P.q), x2_ge(P.d), x2_le(P.b)},
                constant(0.0)),
      dual_cell("Wlow", {sum_le(P.q + P.d)}, constant(0.0)),
      dual_cell("TpR", {x1_ge(P.r), x2_le(P.d)}, phi_of_x2),
      dual_cell("TpL", {sum_ge(P.q + P.d), x1_le(P.r), x2_le(P.d)},
                constant(3.0)),
  };
  // z1 on the left edge: complementarity forces z1(c, x2) = c exactly where
  // u(c, x2) > 0, i.e. above r.
  z1.anchors = {{c, P.r, 0.0, 0.0}, {P.r, c + 1.0, c, 0.0}};
  return z1;
}

PiecewiseField dual_z1_a_alternative(double c, bool force) {
  check_regime_a_domain(c, force);
  const RegimeAParams P = params_a_unchecked(c);
  const AffineForm top_dip = in_x1(-3.0 * P.d / P.rho, 3.0 / P.rho);
  const AffineForm phi_of_x2 =
      in_x2((4.0 * c + 1.0) / P.rho, -3.0 / P.rho);
  // Steeper interior tent: nu1(x) = 9 (x - b) / (c+1) rising to 3*sqrt(2)/2
  // at h, then nu2(x) = 3 (2(c+1) - 3x) / (c+1) falling back.
  const double cp1 = c + 1.0;
  const AffineForm nu1 = in_x1(-9.0 * P.b / cp1, 9.0 / cp1);
  const AffineForm nu2 = in_x1(6.0, -9.0 / cp1);
  const AffineForm three_minus_nu1_x2 = in_x2(3.0 + 9.0 * P.b / cp1, -9.0 / cp1);
  const AffineForm three_minus_nu2_x2 = in_x2(-3.0, 9.0 / cp1);
  PiecewiseField z1;
  z1.c = c;
  z1.integration_axis = 1;
  z1.specs = {
      dual_cell("Tup", {x1_le(P.d), x2_ge(P.r)}, top_dip),
      dual_cell("TopL", {x1_ge(P.d), x1_le(P.b), x2_ge(P.q)}, constant(0.0)),
      dual_cell("TupLow",
                {x1_le(P.d), x2_ge(P.q), x2_le(P.r), sum_ge(P.q + P.d)},
                constant(0.0)),
      dual_cell("CV1", {x1_ge(P.b), x1_le(P.h), x2_ge(P.q)}, nu1),
      dual_cell("CV2", {x1_ge(P.h), x1_le(P.q), x2_ge(P.q)}, nu2),
      dual_cell("CH1", {x1_ge(P.q), x2_ge(P.b), x2_le(P.h)},
                three_minus_nu1_x2),
      dual_cell("CH2", {x1_ge(P.q), x2_ge(P.h), x2_le(P.q)},
                three_minus_nu2_x2),
      dual_cell("TR", {x1_ge(P.q), x2_ge(P.q)}, constant(1.5)),
      dual_cell("WDiag",
                {sum_ge(P.p), x1_le(P.q), x2_le(P.q), above_diag(),
                 below_diag()},
                constant(1.5)),
      dual_cell("WUp", {sum_ge(P.p), x2_le(P.q), above_diag()}, constant(0.0)),
      dual_cell("WLowB", {sum_ge(P.p), x1_le(P.q), below_diag(), x2_le(P.h)},
                constant(3.0)),
      dual_cell("WLowT", {sum_ge(P.p), x1_le(P.q), below_diag(), x2_ge(P.h)},
                constant(3.0)),
      dual_cell("WmidB",
                {sum_ge(P.q + P.d), sum_le(P.p), x2_ge(P.b), x2_le(P.q)},
                constant(0.0)),
      dual_cell("U1z", {x1_ge(P.q), x2_ge(P.d), x2_le(P.b)}, constant(3.0)),
      dual_cell("WmidL",
                {sum_ge(P.q + P.d), x1_le(P.q), x2_ge(P.d), x2_le(P.b)},
                constant(0.0)),
      dual_cell("Wlow", {sum_le(P.q + P.d)}, constant(0.0)),
      dual_cell("TpR", {x1_ge(P.r), x2_le(P.d)}, phi_of_x2),
      dual_cell("TpL", {sum_ge(P.q + P.d), x1_le(P.r), x2_le(P.d)},
                constant(3.0)),
  };
  z1.anchors = {{c, P.r, 0.0, 0.0}, {P.r, c + 1.0, c, 0.0}};
  return z1;
}

PiecewiseField dual_z1_b(double c) {
  if (!std::isfinite(c) || c < 0.0) {
    throw std::domain_error("regime B construction requires c >= 0");
  }
  const RegimeBParams B = params_b(c);
  const double den = c + 1.0 - B.q;
  // phi_b(x) = (4c + 1 - 3x) / den; the top band dips by 3 - phi_b(x1) on
  // (c, h) and mirrors it on (h, q).
  const AffineForm top_left = in_x1(3.0 - (4.0 * c + 1.0) / den, 3.0 / den);
  const AffineForm top_mirror =
      in_x1(3.0 - (4.0 * c + 1.0 - 3.0 * B.p) / den, -3.0 / den);
  const AffineForm right_mirror =
      in_x2((4.0 * c + 1.0 - 3.0 * B.p) / den, 3.0 / den);
  const AffineForm right_low = in_x2((4.0 * c + 1.0) / den, -3.0 / den);
  PiecewiseField z1;
  z1.c = c;
  z1.integration_axis = 1;
  z1.specs = {
      dual_cell("TL", {x1_le(B.h), x2_ge(B.q)}, top_left),
      dual_cell("TM", {x1_ge(B.h), x1_le(B.q), x2_ge(B.q)}, top_mirror),
      dual_cell("MR", {x1_ge(B.q), x2_ge(B.h), x2_le(B.q)}, right_mirror),
      dual_cell("BR", {x1_ge(B.q), x2_le(B.h)}, right_low),
      dual_cell("TR", {x1_ge(B.q), x2_ge(B.q)}, constant(1.5)),
      dual_cell("WDiag",
                {sum_ge(B.p), x1_le(B.q), x2_le(B.q), above_diag(),
                 below_diag()},
                constant(1.5)),
      dual_cell("WUp", {sum_ge(B.p), x2_le(B.q), above_diag()}, constant(0.0)),
      dual_cell("WLowB", {sum_ge(B.p), x1_le(B.q), below_diag(), x2_le(B.h)},
                constant(3.0)),
      dual_cell("WLowT", {sum_ge(B.p), x1_le(B.q), below_diag(), x2_ge(B.h)},
                constant(3.0)),
      dual_cell("White", {sum_le(B.p)}, constant(0.0)),
  };
  z1.anchors = {{c, B.q, 0.0, 0.0}, {B.q, c + 1.0, c, 0.0}};
  return z1;
}

}  // namespace

PiecewiseField build_primal(double c, Regime regime, bool force) {
  return regime == Regime::A ? primal_a(c, force) : primal_b(c);
}

std::pair<PiecewiseField, PiecewiseField> build_dual(double c, Regime regime,
                                                     DualVariant variant,
                                                     bool force) {
  PiecewiseField z1;
  if (regime == Regime::A) {
    z1 = (variant == DualVariant::standard) ? dual_z1_a_standard(c, force)
                                            : dual_z1_a_alternative(c, force);
  } else {
    z1 = dual_z1_b(c);
  }
  PiecewiseField z2 = z1.transpose();
  return {std::move(z1), std::move(z2)};
}

SolutionPair build_pair(double c, Regime regime, DualVariant variant,
                        bool force) {
  SolutionPair pair;
  pair.u = build_primal(c, regime, force);
  auto duals = build_dual(c, regime, variant, force);
  pair.z1 = std::move(duals.first);
  pair.z2 = std::move(duals.second);
  pair.regime = regime;
  pair.variant = variant;
  pair.c = c;
  return pair;
}

MenuExtraction extract_menu(const PiecewiseField& u, int grid_n, double tol) {
  struct Plane {
    double g1, g2, t;
  };
  std::vector<Plane> planes;
  const double c = u.c;
  for (const GradientSpec& spec : u.specs) {
    const Polygon poly = region_polygon(spec.region, c);
    if (polygon_area(poly) <= 1e-12) continue;
    Point centroid{0.0, 0.0};
    for (const Point& v : poly) {
      centroid.x1 += v.x1;
      centroid.x2 += v.x2;
    }
    centroid.x1 /= static_cast<double>(poly.size());
    centroid.x2 /= static_cast<double>(poly.size());
    const double g1 = spec.g1(centroid);
    const double g2 = spec.g2(centroid);
    const double t = g1 * centroid.x1 + g2 * centroid.x2 - u.value(centroid);
    planes.push_back({g1, g2, t});
  }

  MenuExtraction out;
  const double inset = 1e-7;
  double worst = 0.0;
  for (int i = 0; i < grid_n; ++i) {
    const double x1 =
        c + inset + (1.0 - 2.0 * inset) * i / static_cast<double>(grid_n - 1);
    for (int j = 0; j < grid_n; ++j) {
      const double x2 = c + inset +
                        (1.0 - 2.0 * inset) * j / static_cast<double>(grid_n - 1);
      const Point x{x1, x2};
      double envelope = 0.0;  // outside option
      for (const Plane& pl : planes) {
        envelope = std::max(envelope, pl.g1 * x1 + pl.g2 * x2 - pl.t);
      }
      const double deficit = envelope - u.value(x);
      if (deficit > worst) {
        worst = deficit;
        out.witness = x;
      }
    }
  }
  out.deficit = worst;
  if (worst > tol) {
    out.convex = false;
    return out;
  }
  out.convex = true;
  for (const Plane& pl : planes) {
    MenuOption opt{pl.g1, pl.g2, pl.t};
    // Snap the implicit outside option to exactly zero.
    if (std::abs(opt.a1) < 1e-12 && std::abs(opt.a2) < 1e-12 &&
        std::abs(opt.t) < 1e-9) {
      opt = MenuOption{0.0, 0.0, 0.0};
    }
    bool dup = false;
    for (const MenuOption& seen : out.menu.options) {
      if (std::abs(seen.a1 - opt.a1) < 1e-12 &&
          std::abs(seen.a2 - opt.a2) < 1e-12 &&
          std::abs(seen.t - opt.t) < 1e-9) {
        dup = true;
        break;
      }
    }
    if (!dup) out.menu.options.push_back(opt);
  }
  return out;
}

double min_on_horizontal(const PiecewiseField& field, double x2, double lo,
                         double hi) {
  const int n = 2000;
  double best_t = lo;
  double best_v = field.value({lo, x2});
  for (int i = 1; i <= n; ++i) {
    const double t = lo + (hi - lo) * i / static_cast<double>(n);
    const double v = field.value({t, x2});
    if (v < best_v) {
      best_v = v;
      best_t = t;
    }
  }
  // Golden-section polish on the bracketing interval.
  const double step = (hi - lo) / n;
  double a = std::max(lo, best_t - step);
  double b = std::min(hi, best_t + step);
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1g = b - inv_phi * (b - a);
  double x2g = a + inv_phi * (b - a);
  double f1 = field.value({x1g, x2});
  double f2 = field.value({x2g, x2});
  while (b - a > 1e-12) {
    if (f1 > f2) {
      a = x1g;
      x1g = x2g;
      f1 = f2;
      x2g = a + inv_phi * (b - a);
      f2 = field.value({x2g, x2});
    } else {
      b = x2g;
      x2g = x1g;
      f2 = f1;
      x1g = b - inv_phi * (b - a);
      f1 = field.value({x1g, x2});
    }
  }
  return std::min(best_v, field.value({(a + b) / 2.0, x2}));
}

}  // namespace twogoods
