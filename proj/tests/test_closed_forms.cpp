#include "twogoods/closed_forms.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace {

using namespace twogoods;

constexpr double kCbar = 0.091544620101957299108;

TEST(ClosedForms, ThresholdConstant) {
  EXPECT_NEAR(cbar(), kCbar, 1e-15);
  // cbar is the positive root of c^2 + (4*sqrt(2) - 2) c - (6 - 4*sqrt(2)).
  const double s2 = std::sqrt(2.0);
  const double c = cbar();
  EXPECT_NEAR(c * c + (4.0 * s2 - 2.0) * c - (6.0 - 4.0 * s2), 0.0, 1e-14);
}

TEST(ClosedForms, OptimalValueTable) {
  EXPECT_NEAR(opt_value(0.0), 0.54920100462022926287, 1e-12);
  EXPECT_NEAR(opt_value(0.02), 0.57409669872210840292, 1e-12);
  EXPECT_NEAR(opt_value(0.05), 0.61328705238594647477, 1e-12);
  EXPECT_NEAR(opt_value(0.08), 0.65440835382777631493, 1e-12);
  EXPECT_NEAR(opt_value(0.078), 0.65160855998069561098, 1e-12);
  EXPECT_NEAR(opt_value(0.085), 0.66144405682245672866, 1e-12);
  EXPECT_NEAR(opt_value(0.09), 0.66853142751701787315, 1e-12);
}

TEST(ClosedForms, BundleRevenueTable) {
  EXPECT_NEAR(brev(0.0), 2.0 * std::sqrt(6.0) / 9.0, 1e-15);
  EXPECT_NEAR(brev(0.0), 0.54433105395181735515, 1e-12);
  EXPECT_NEAR(brev(0.05), 0.61232207807043622038, 1e-12);
  EXPECT_NEAR(brev(0.2), 0.83054510858743464172, 1e-12);
  EXPECT_NEAR(brev(0.5), 1.3155651547204494124, 1e-12);
  EXPECT_NEAR(brev(1.0), 2.2082509852475479007, 1e-12);
  EXPECT_NEAR(brev(2.0), 4.1181165450413129704, 1e-12);
  EXPECT_NEAR(brev(0.078), 0.65150551189152200477, 1e-12);
  EXPECT_NEAR(brev(0.085), 0.66141994812896622633, 1e-12);
  EXPECT_NEAR(brev(0.09), 0.66853008240268676773, 1e-12);
}

TEST(ClosedForms, BundlePriceTable) {
  EXPECT_NEAR(bundle_price(0.0), std::sqrt(6.0) / 3.0, 1e-15);
  EXPECT_NEAR(bundle_price(0.05), 0.88384337814208419025, 1e-12);
  EXPECT_NEAR(bundle_price(0.2), 1.0939782430660571064, 1e-12);
  EXPECT_NEAR(bundle_price(0.5), 1.5485837703548635302, 1e-12);
  EXPECT_NEAR(bundle_price(1.0), 2.3874258867227931107, 1e-12);
  EXPECT_NEAR(bundle_price(2.0), 4.2301385866078098515, 1e-12);
}

TEST(ClosedForms, ValuesMeetAtThreshold) {
  EXPECT_NEAR(opt_value(cbar()), brev(cbar()), 1e-12);
  EXPECT_NEAR(opt_value(cbar()), 0.67073132127135467, 1e-12);
}

TEST(ClosedForms, RegimeAParamsAtC005) {
  const RegimeAParams a = params_a(0.05);
  EXPECT_NEAR(a.q, 0.7, 1e-15);
  EXPECT_NEAR(a.p, 0.905025253169417, 1e-12);
  EXPECT_NEAR(a.h, 0.452512626584708, 1e-12);
  EXPECT_NEAR(a.b, 0.205025253169417, 1e-12);
  EXPECT_NEAR(a.r, 0.792623975405033, 1e-12);
  EXPECT_NEAR(a.d, 0.142623975405033, 1e-12);
  EXPECT_NEAR(a.rho, 0.257376024594967, 1e-12);
}

TEST(ClosedForms, RegimeAIdentitiesOnGrid) {
  const int n = 101;
  for (int i = 0; i < n; ++i) {
    const double c = std::min(cbar() * i / (n - 1), cbar());
    const RegimeAParams a = params_a(c);
    EXPECT_NEAR(a.r - a.q, a.d - c, 1e-12) << "c=" << c;
    EXPECT_NEAR(a.p, a.q + a.b, 1e-12) << "c=" << c;
    EXPECT_NEAR(a.h, a.p / 2.0, 1e-15) << "c=" << c;
    EXPECT_NEAR(a.rho, c + 1.0 - a.r, 1e-12) << "c=" << c;
    // Anchor cancellation: c + integral_c^d 3(t-d)/rho dt = 0.
    EXPECT_NEAR(1.5 * (a.d - c) * (a.d - c), c * a.rho, 1e-12) << "c=" << c;
    // The interior tent slope mu = 9 / (2(c+1)) satisfies mu (q-b)^2 / 2 =
    // (c+1)/2, i.e. q - b = sqrt(2)(c+1)/3.
    EXPECT_NEAR(a.q - a.b, std::sqrt(2.0) * (c + 1.0) / 3.0, 1e-12)
        << "c=" << c;
    // phi is affine with phi(d) picked so that 3 - phi(x) = 3(x-d)/rho.
    const double x = c + 0.8 * i / (n - 1.0);
    EXPECT_NEAR(3.0 - phi(x, a), 3.0 * (x - a.d) / a.rho, 1e-9) << "c=" << c;
  }
}

TEST(ClosedForms, RegimeADegeneratesAtThreshold) {
  const RegimeAParams a = params_a(cbar());
  EXPECT_NEAR(a.d, a.b, 1e-12);            // the wedge collapses
  EXPECT_NEAR(a.p - a.r, cbar(), 1e-12);   // and p - r hits the threshold
  EXPECT_NEAR(a.q, 0.72769641340130487, 1e-12);
  EXPECT_NEAR(a.p, 0.94083375824141782, 1e-12);
  EXPECT_NEAR(a.b, 0.21313734484011296, 1e-12);
  EXPECT_NEAR(a.r, 0.84928913813946052, 1e-12);
}

TEST(ClosedForms, RegimeBIdentitiesOnGrid) {
  const int n = 101;
  for (int i = 0; i < n; ++i) {
    const double c = cbar() + (3.0 - cbar()) * i / (n - 1);
    const RegimeBParams b = params_b(c);
    EXPECT_NEAR(b.q, b.p - c, 1e-12) << "c=" << c;
    EXPECT_NEAR(b.h, b.p / 2.0, 1e-15) << "c=" << c;
    EXPECT_NEAR(b.p, bundle_price(c), 1e-15) << "c=" << c;
    EXPECT_NEAR(brev(c), brev_via_price(c), 1e-9) << "c=" << c;
    EXPECT_NEAR(bundle_price_foc_residual(b.p, c), 0.0, 1e-9) << "c=" << c;
    // 3 - phi_b(x) = 3 (x - tstar) / (c + 1 - q) with tstar = p - (2c+2)/3.
    const double den = c + 1.0 - b.q;
    const double tstar = b.p - (2.0 * c + 2.0) / 3.0;
    const double x = c + 0.37;
    EXPECT_NEAR(3.0 - phi_b(x, b), 3.0 * (x - tstar) / den, 1e-9) << "c=" << c;
  }
}

TEST(ClosedForms, BundleDipSignFlipsAtThreshold) {
  // The bundling dual dips to c - (3/2)(tstar - c)^2 / (c + 1 - q); the dip
  // is nonnegative exactly when c >= cbar.
  auto dip = [](double c) {
    const RegimeBParams b = params_b(c);
    const double den = c + 1.0 - b.q;
    const double tstar = b.p - (2.0 * c + 2.0) / 3.0;
    return c - 1.5 * (tstar - c) * (tstar - c) / den;
  };
  EXPECT_NEAR(dip(cbar()), 0.0, 1e-12);
  EXPECT_GT(dip(cbar() + 1e-3), 0.0);
  EXPECT_LT(dip(cbar() - 1e-3), 0.0);
  EXPECT_NEAR(dip(cbar() - 1e-3), -1.66e-3, 2e-4);
  EXPECT_GT(dip(0.5), 0.0);
  EXPECT_GT(dip(2.0), 0.0);
}

TEST(ClosedForms, BundlePriceMaximizesRevenue) {
  // rev(s) = s (1 - (s - 2c)^2 / 2) for s in [2c, 2c+1]; the closed-form
  // price must be a stationary point and beat nearby prices.
  for (double c : {0.0, 0.05, cbar(), 0.3, 1.0, 2.0}) {
    auto rev = [c](double s) { return s * (1.0 - 0.5 * (s - 2 * c) * (s - 2 * c)); };
    const double p = bundle_price(c);
    ASSERT_GT(p, 2 * c);
    ASSERT_LT(p, 2 * c + 1);
    const double fd = (rev(p + 1e-5) - rev(p - 1e-5)) / 2e-5;
    EXPECT_NEAR(fd, 0.0, 1e-6) << "c=" << c;
    EXPECT_GE(rev(p), rev(p + 1e-3));
    EXPECT_GE(rev(p), rev(p - 1e-3));
    EXPECT_NEAR(rev(p), brev(c), 1e-12) << "c=" << c;
  }
}

TEST(ClosedForms, DomainErrors) {
  EXPECT_THROW(params_a(-0.01), std::domain_error);
  EXPECT_THROW(params_a(cbar() + 1e-6), std::domain_error);
  EXPECT_NO_THROW(params_a(0.0));
  EXPECT_NO_THROW(params_a(cbar()));
  EXPECT_NO_THROW(params_a_unchecked(0.2));
  EXPECT_THROW(params_b(-0.1), std::domain_error);
  EXPECT_THROW(opt_value(-0.01), std::domain_error);
  EXPECT_THROW(opt_value(cbar() + 0.01), std::domain_error);
  EXPECT_THROW(brev(-0.1), std::domain_error);
  EXPECT_THROW(bundle_price(-1.0), std::domain_error);
  EXPECT_THROW(params_a(std::nan("")), std::domain_error);
}

TEST(ClosedForms, OrderingChainFlipsOutsideDomain) {
  // Inside the domain d <= b; the unchecked formulas flip the order above
  // cbar, which is exactly why the construction stops there.
  EXPECT_LT(params_a(0.05).d, params_a(0.05).b);
  EXPECT_GT(params_a_unchecked(0.15).d, params_a_unchecked(0.15).b);
}

TEST(ClosedForms, RatioAtZero) {
  EXPECT_NEAR(opt_value(0.0) / brev(0.0), 1.0089466706576012876, 1e-12);
}

}  // namespace
