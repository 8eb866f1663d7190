#pragma once

namespace twogoods {

/// Parameters of the low-cost construction on the type square [c, c+1]^2.
/// All lengths satisfy (when 0 <= c <= cbar()):
///   q = 2(c+1)/3,  p = (4 - sqrt(2))(c+1)/3,  h = p/2,  b = p - q,
///   r = (2 + c + s)/3,  d = (2c + s)/3  with s = sqrt(c(2 + 3c)),
/// and the identities r - q = d - c, p = q + b, (3/2)(d-c)^2 = c * rho
/// with rho = c + 1 - r.
struct RegimeAParams {
  double c;
  double q;
  double p;
  double h;
  double b;
  double r;
  double d;
  double rho;  ///< c + 1 - r, the denominator of phi
};

/// Parameters of the pure-bundling construction: p solves the bundle-price
/// first-order condition, q = p - c, h = p/2.
struct RegimeBParams {
  double c;
  double p;
  double q;
  double h;
};

/// Threshold between the two constructions:
/// cbar = sqrt(15 - 8*sqrt(2)) - 2*sqrt(2) + 1, the positive root of
/// c^2 + (4*sqrt(2) - 2) c - (6 - 4*sqrt(2)) = 0.
double cbar();

/// Construction parameters for 0 <= c <= cbar().  Throws std::domain_error
/// outside that range (and on non-finite input).
RegimeAParams params_a(double c);

/// Same formulas without the domain gate, for out-of-range studies of how the
/// construction degrades (b < d flips the ordering chain above cbar).
RegimeAParams params_a_unchecked(double c);

/// Bundling construction parameters for c >= 0.  The formulas are well defined
/// below cbar() too (the resulting dual fails nonnegativity there); callers
/// that treat the result as a certificate should gate on cbar() themselves.
RegimeBParams params_b(double c);

/// phi(x1) = (c + 1 - 3(x1 - c)) / rho, the top-band transfer density.
double phi(double x1, const RegimeAParams& params);

/// Same shape with denominator c + 1 - q, used by the bundling construction.
double phi_b(double x1, const RegimeBParams& params);

/// Optimal relaxed revenue for 0 <= c <= cbar().  Throws std::domain_error
/// outside that range.
double opt_value(double c);

/// Optimal full-bundling revenue (2/27)(-4c^3 + sqrt(2)(2c^2+3)^{3/2} + 18c),
/// valid for all c >= 0.
double brev(double c);

/// The same revenue computed as price * Pr[x1 + x2 >= price]; agrees with
/// brev() to ~1e-12 (consistency cross-check form).
double brev_via_price(double c);

/// The revenue-maximizing full-bundle price (4c + sqrt(4c^2 + 6))/3.
double bundle_price(double c);

/// Residual of the bundle-price first-order condition
///   27 s^3 - 108 s^2 c + s (108 c^2 - 54) - 16 c^3
///     + 4 sqrt(2) (2c^2 + 3)^{3/2} + 72 c
/// which vanishes at s = bundle_price(c).
double bundle_price_foc_residual(double s, double c);

}  // namespace twogoods
