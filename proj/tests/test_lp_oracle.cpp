#include "twogoods/lp_oracle.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>
#include <string>

#include "twogoods/closed_forms.hpp"
#include "twogoods/mechanisms.hpp"
#include "twogoods/solutions.hpp"

namespace {

using namespace twogoods;

int count_occurrences(const std::string& hay, const std::string& needle) {
  int count = 0;
  for (size_t pos = hay.find(needle); pos != std::string::npos;
       pos = hay.find(needle, pos + needle.size())) {
    ++count;
  }
  return count;
}

TEST(LpOracle, InstanceShape) {
  const LpInstance lp = build_lp(0.5, 4);
  EXPECT_EQ(lp.n, 4);
  EXPECT_NEAR(lp.delta, 1.0 / 3.0, 1e-15);
  ASSERT_EQ(lp.w.size(), 16u);
  // The weights implement the boundary revenue form, whose value on the
  // constant field 1 is (c+1) * 2 - c * 2 - 3 = -1, at every resolution.
  for (double c : {0.0, 0.3, 1.0}) {
    for (int n : {4, 9, 17}) {
      const LpInstance inst = build_lp(c, n);
      double sum = 0.0;
      for (double w : inst.w) sum += w;
      EXPECT_NEAR(sum, -1.0, 1e-12) << "c=" << c << " n=" << n;
    }
  }
}

TEST(LpOracle, CornerWeights) {
  // Trapezoid weights at the corners, written out by hand for n=4, c=0:
  // w_00 = -3 delta^2 / 4 and w_33 = delta - 3 delta^2 / 4.
  const LpInstance lp = build_lp(0.0, 4);
  const double d = lp.delta;
  EXPECT_NEAR(lp.weight(0, 0), -3.0 * d * d / 4.0, 1e-15);
  EXPECT_NEAR(lp.weight(3, 3), d - 3.0 * d * d / 4.0, 1e-15);
  // Off-corner top-edge node: full tau on the edge coordinate.
  EXPECT_NEAR(lp.weight(3, 1), d - 3.0 * d * d / 2.0, 1e-15);
}

TEST(LpOracle, ObjectiveIsDotProduct) {
  const LpInstance lp = build_lp(0.2, 5);
  const std::vector<double> ones(25, 1.0);
  double sum = 0.0;
  for (double w : lp.w) sum += w;
  EXPECT_NEAR(lp_objective(lp, ones), sum, 1e-14);
}

TEST(LpOracle, TinyDenseProgram) {
  DenseLp lp;
  lp.num_vars = 2;
  lp.rows = {{1.0, 0.0}, {0.0, 1.0}};
  lp.rhs = {1.0, 1.0};
  lp.objective = {1.0, 1.0};
  const DenseLpResult res = simplex_maximize(lp);
  EXPECT_EQ(res.status, LpStatus::optimal);
  EXPECT_NEAR(res.value, 2.0, 1e-12);
  ASSERT_EQ(res.x.size(), 2u);
  EXPECT_NEAR(res.x[0], 1.0, 1e-12);
  EXPECT_NEAR(res.x[1], 1.0, 1e-12);
  EXPECT_GT(res.iterations, 0);
}

TEST(LpOracle, UnboundedDenseProgram) {
  DenseLp lp;
  lp.num_vars = 1;
  lp.rows = {};
  lp.rhs = {};
  lp.objective = {1.0};
  EXPECT_EQ(simplex_maximize(lp).status, LpStatus::unbounded);
}

TEST(LpOracle, SimplexMatchesFlowSolver) {
  for (double c : {0.0, 0.05, 0.5}) {
    for (int n : {4, 6, 8, 12}) {
      const LpInstance lp = build_lp(c, n);
      const LpSolution a = solve_simplex(lp);
      const LpSolution b = solve_mcf(lp);
      ASSERT_EQ(a.status, LpStatus::optimal);
      ASSERT_EQ(b.status, LpStatus::optimal);
      EXPECT_NEAR(a.value, b.value, 1e-9) << "c=" << c << " n=" << n;
    }
  }
}

TEST(LpOracle, SmallGridValues) {
  EXPECT_NEAR(oracle_value(0.0, 4), 19.0 / 36.0, 1e-9);
  EXPECT_NEAR(oracle_value(0.0, 6), 0.540, 1e-9);
  EXPECT_NEAR(oracle_value(0.0, 8), 0.545189504373, 1e-9);
  EXPECT_NEAR(oracle_value(0.0, 12), 0.546393688956, 1e-9);
  EXPECT_NEAR(oracle_value(0.0, 16), 0.548666666667, 1e-9);
  EXPECT_NEAR(oracle_value(0.05, 4), 0.577777777778, 1e-9);
  EXPECT_NEAR(oracle_value(0.05, 6), 0.604, 1e-9);
  EXPECT_NEAR(oracle_value(0.05, 8), 0.606413994169, 1e-9);
  EXPECT_NEAR(oracle_value(0.05, 12), 0.611720510894, 1e-9);
  EXPECT_NEAR(oracle_value(0.05, 16), 0.612444444444, 1e-9);
  EXPECT_NEAR(oracle_value(0.5, 4), 1.277777777778, 1e-9);
  EXPECT_NEAR(oracle_value(0.5, 6), 1.306, 1e-9);
  EXPECT_NEAR(oracle_value(0.5, 8), 1.311953352770, 1e-9);
  EXPECT_NEAR(oracle_value(0.5, 12), 1.314425244177, 1e-9);
  EXPECT_NEAR(oracle_value(0.5, 16), 1.314666666667, 1e-9);
}

TEST(LpOracle, MediumGridValuesAndTrend) {
  const double v0_20 = oracle_value(0.0, 20);
  const double v0_40 = oracle_value(0.0, 40);
  const double v0_60 = oracle_value(0.0, 60);
  const double v0_80 = oracle_value(0.0, 80);
  EXPECT_NEAR(v0_20, 0.548403557370, 1e-9);
  EXPECT_NEAR(v0_40, 0.549056794619, 1e-9);
  EXPECT_NEAR(v0_60, 0.549144508445, 1e-9);
  EXPECT_NEAR(v0_80, 0.549170552431, 1e-9);
  EXPECT_LT(v0_20, v0_40);
  EXPECT_LT(v0_40, v0_60);
  EXPECT_LT(v0_60, v0_80);
  EXPECT_LT(v0_80, opt_value(0.0));

  EXPECT_NEAR(oracle_value(0.05, 20), 0.612567429654, 1e-9);
  EXPECT_NEAR(oracle_value(0.05, 40), 0.613083497699, 1e-9);
  EXPECT_NEAR(oracle_value(cbar(), 20), 0.669689011999, 1e-9);
  EXPECT_NEAR(oracle_value(cbar(), 40), 0.670442092316, 1e-9);
  EXPECT_NEAR(oracle_value(0.5, 20), 1.314550225980, 1e-9);
  EXPECT_NEAR(oracle_value(0.5, 40), 1.315341627472, 1e-9);

  const double v1_20 = oracle_value(1.0, 20);
  const double v1_40 = oracle_value(1.0, 40);
  const double v1_60 = oracle_value(1.0, 60);
  const double v1_80 = oracle_value(1.0, 80);
  EXPECT_NEAR(v1_20, 2.207428196530, 1e-9);
  EXPECT_NEAR(v1_40, 2.208175289536, 1e-9);
  EXPECT_NEAR(v1_60, 2.208213838805, 1e-9);
  EXPECT_NEAR(v1_80, 2.208196004779, 1e-9);
  // The doubling sequence 20/40/80 increases toward the continuum value, but
  // the full sequence is not monotone: the trapezoid boundary error is not
  // one-sided, and at c = 1 the n = 60 value overshoots n = 80.
  EXPECT_LT(v1_20, v1_40);
  EXPECT_LT(v1_40, v1_80);
  EXPECT_GT(v1_60, v1_80);
  EXPECT_LT(std::abs(v1_80 - brev(1.0)), 0.02);
}

TEST(LpOracle, RestrictedCertificatesAreFeasible) {
  const int n = 20;
  for (double c : {0.0, 0.05, cbar(), 0.5, 1.0}) {
    const Regime regime = (c <= cbar()) ? Regime::A : Regime::B;
    const PiecewiseField u = build_primal(c, regime);
    const std::vector<double> grid = restrict_field(u, n);
    const LpInstance lp = build_lp(c, n);
    ASSERT_EQ(grid.size(), static_cast<size_t>(n * n));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const double uij = grid[static_cast<size_t>(i) * n + j];
        EXPECT_GE(uij, -1e-12);
        if (i + 1 < n) {
          EXPECT_LE(grid[static_cast<size_t>(i + 1) * n + j] - uij,
                    lp.delta + 1e-12);
        }
        if (j + 1 < n) {
          EXPECT_LE(grid[static_cast<size_t>(i) * n + j + 1] - uij,
                    lp.delta + 1e-12);
        }
      }
    }
    // Any feasible point is dominated by the LP optimum.
    const double restricted = lp_objective(lp, grid);
    const double optimum = solve(lp).value;
    EXPECT_LE(restricted, optimum + 1e-9) << "c=" << c;
  }
}

TEST(LpOracle, RestrictionApproachesContinuumValue) {
  const int n = 40;
  const PiecewiseField u = build_primal(1.0, Regime::B);
  const LpInstance lp = build_lp(1.0, n);
  const double restricted = lp_objective(lp, restrict_field(u, n));
  EXPECT_NEAR(restricted, brev(1.0), 5.0 / n);
}

TEST(LpOracle, GridValueSeparatesFromBundlingNearThreshold) {
  // Below the threshold the true optimum strictly exceeds the bundling value
  // by a whisker (1.03e-4 at c = 0.078, 2.41e-5 at c = 0.085).  The raw
  // n = 80 grid value still sits below the bundling revenue, but the
  // Richardson extrapolation of the doubling pair (40, 80) separates from it:
  // measured margins 1.00e-4 and 8.04e-6 respectively, asserted here with
  // the thresholds they clear.
  {
    const double c = 0.078;
    const double v40 = oracle_value(c, 40);
    const double v80 = oracle_value(c, 80);
    const double extrapolated = v80 + (v80 - v40) / 3.0;
    EXPECT_GT(extrapolated, brev(c) + 1e-4);
    EXPECT_LT(extrapolated, opt_value(c) + 1e-4);
  }
  {
    const double c = 0.085;
    const double v40 = oracle_value(c, 40);
    const double v80 = oracle_value(c, 80);
    const double extrapolated = v80 + (v80 - v40) / 3.0;
    EXPECT_GT(extrapolated, brev(c) + 5e-6);
    EXPECT_LT(extrapolated, opt_value(c) + 1e-4);
  }
}

TEST(LpOracle, SolveIsDeterministic) {
  const LpInstance lp = build_lp(0.5, 20);
  const LpSolution a = solve(lp);
  const LpSolution b = solve(lp);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.iterations, b.iterations);
  ASSERT_EQ(a.u_grid.size(), b.u_grid.size());
  for (size_t i = 0; i < a.u_grid.size(); ++i) {
    EXPECT_EQ(a.u_grid[i], b.u_grid[i]);
  }
}

TEST(LpOracle, ReportFlags) {
  const OracleReport low = oracle_report(0.0, 8);
  EXPECT_NEAR(low.value, 0.545189504373, 1e-9);
  EXPECT_TRUE(low.exceeds_bundle);   // 0.5452 > 0.5443
  EXPECT_FALSE(low.exceeds_det);     // 0.5452 < 0.5492

  const OracleReport mid = oracle_report(0.05, 16);
  EXPECT_TRUE(mid.exceeds_bundle);
  EXPECT_TRUE(mid.exceeds_det);      // best deterministic = pure bundle here
}

TEST(LpOracle, DumpFormat) {
  const LpInstance lp = build_lp(0.3, 4);
  const std::string text = dump_lp(lp);
  EXPECT_NE(text.find("Maximize"), std::string::npos);
  EXPECT_NE(text.find("Subject To"), std::string::npos);
  EXPECT_NE(text.find("Bounds"), std::string::npos);
  EXPECT_NE(text.find("End"), std::string::npos);
  EXPECT_NE(text.find("u_0_0"), std::string::npos);
  EXPECT_EQ(count_occurrences(text, "d1_"), 12);
  EXPECT_EQ(count_occurrences(text, "d2_"), 12);
}

TEST(LpOracle, DomainErrors) {
  EXPECT_THROW(build_lp(0.5, 3), std::domain_error);
  EXPECT_THROW(build_lp(-0.1, 10), std::domain_error);
  EXPECT_THROW(oracle_value(0.5, 2), std::domain_error);
  EXPECT_NO_THROW(build_lp(0.5, 4));
}

}  // namespace
