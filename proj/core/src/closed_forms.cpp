#include "twogoods/closed_forms.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace twogoods {

namespace {

const double kSqrt2 = std::sqrt(2.0);

void require_finite(double c) {
  if (!std::isfinite(c)) throw std::domain_error("c must be finite");
}

}  // namespace

double cbar() { return std::sqrt(15.0 - 8.0 * kSqrt2) - 2.0 * kSqrt2 + 1.0; }

RegimeAParams params_a_unchecked(double c) {
  require_finite(c);
  const double s = std::sqrt(std::max(0.0, c * (2.0 + 3.0 * c)));
  RegimeAParams out;
  out.c = c;
  out.q = 2.0 * (c + 1.0) / 3.0;
  out.p = (4.0 - kSqrt2) / 3.0 * (c + 1.0);
  out.h = out.p / 2.0;
  out.b = out.p - out.q;
  out.r = (2.0 + c + s) / 3.0;
  out.d = (2.0 * c + s) / 3.0;
  out.rho = (c + 1.0) - out.r;
  return out;
}

RegimeAParams params_a(double c) {
  require_finite(c);
  if (c < 0.0 || c > cbar()) {
    throw std::domain_error("params_a: c=" + std::to_string(c) +
                            " outside [0, cbar]");
  }
  return params_a_unchecked(c);
}

RegimeBParams params_b(double c) {
  require_finite(c);
  if (c < 0.0) throw std::domain_error("params_b: c must be >= 0");
  RegimeBParams out;
  out.c = c;
  out.p = (4.0 * c + std::sqrt(4.0 * c * c + 6.0)) / 3.0;
  out.q = out.p - c;
  out.h = out.p / 2.0;
  return out;
}

double phi(double x1, const RegimeAParams& params) {
  return (params.c + 1.0 - 3.0 * (x1 - params.c)) / params.rho;
}

double phi_b(double x1, const RegimeBParams& params) {
  return (params.c + 1.0 - 3.0 * (x1 - params.c)) / (params.c + 1.0 - params.q);
}

double opt_value(double c) {
  require_finite(c);
  if (c < 0.0 || c > cbar()) {
    throw std::domain_error("opt_value: c=" + std::to_string(c) +
                            " outside [0, cbar]");
  }
  const double s = std::sqrt(c * (3.0 * c + 2.0));
  return 2.0 / 27.0 *
         ((kSqrt2 - 4.0) * c * c * c + 3.0 * (s + kSqrt2 + 1.0) * c * c +
          (2.0 * s + 3.0 * kSqrt2 + 12.0) * c + kSqrt2 + 6.0);
}

double brev(double c) {
  require_finite(c);
  if (c < 0.0) throw std::domain_error("brev: c must be >= 0");
  const double base = 2.0 * c * c + 3.0;
  return 2.0 / 27.0 *
         (-4.0 * c * c * c + kSqrt2 * std::sqrt(base * base * base) + 18.0 * c);
}

double brev_via_price(double c) {
  const double p = bundle_price(c);
  const double tail = p - 2.0 * c;  // in [0, 1]: the bundle line cuts the square
  return (1.0 - tail * tail / 2.0) * p;
}

double bundle_price(double c) {
  require_finite(c);
  if (c < 0.0) throw std::domain_error("bundle_price: c must be >= 0");
  return (4.0 * c + std::sqrt(4.0 * c * c + 6.0)) / 3.0;
}

double bundle_price_foc_residual(double s, double c) {
  const double base = 2.0 * c * c + 3.0;
  return 27.0 * s * s * s - 108.0 * s * s * c + s * (108.0 * c * c - 54.0) -
         16.0 * c * c * c + 4.0 * kSqrt2 * std::sqrt(base * base * base) +
         72.0 * c;
}

}  // namespace twogoods
