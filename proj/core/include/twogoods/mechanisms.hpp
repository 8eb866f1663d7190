#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "twogoods/fields.hpp"
#include "twogoods/geometry.hpp"

namespace twogoods {

/// A lottery (a1, a2) at price t: the buyer receives item j with probability
/// aj and pays t.  The outside option (0, 0, 0) is always implicitly present.
struct MenuOption {
  double a1 = 0.0;
  double a2 = 0.0;
  double t = 0.0;

  double utility(const Point& x) const { return a1 * x.x1 + a2 * x.x2 - t; }
};

struct Menu {
  std::vector<MenuOption> options;
};

/// The utility-maximizing option at type x.  Ties go to the higher payment,
/// then to the lexicographically larger (a1, a2).  May return the outside
/// option (0, 0, 0).
MenuOption buyer_choice(const Menu& menu, const Point& x);

/// Exact expected revenue over uniform types on [c, c+1]^2: each option's
/// winning cell is a convex polygon (dominance constraints against every
/// other option), whose area is computed exactly.  Exactly duplicated options
/// are counted once.
double menu_revenue(const Menu& menu, double c);

/// The winning cell of each retained option (exact duplicates pruned),
/// clipped to the type square.  Exposed for diagnostics and tests.
std::vector<std::pair<MenuOption, Polygon>> choice_cells(const Menu& menu,
                                                         double c);

struct BundleResult {
  double price = 0.0;
  double revenue = 0.0;
};

/// The optimal single-price full-bundle menu {(1,1,price)}: closed form,
/// cross-validated internally against a golden-section maximization of the
/// exact menu revenue (throws std::logic_error if they disagree by > 1e-6).
BundleResult best_full_bundle(double c);

struct DeterministicResult {
  double item_price = 0.0;
  double bundle_price = 0.0;
  double revenue = 0.0;
};

/// Best symmetric deterministic menu {(1,0,s), (0,1,s), (1,1,P)}: exhaustive
/// grid over s, P in [c, 2c+2] at step 1e-3, then deterministic pattern
/// refinement to 1e-7.  Uses a closed-form cell-area evaluation of this
/// family's revenue (validated against menu_revenue in the test suite).
DeterministicResult best_deterministic(double c);

/// Closed-form revenue of {(1,0,s), (0,1,s), (1,1,P)} on [c, c+1]^2.
double deterministic_menu_revenue(double c, double s, double P);

struct MenuSearchResult {
  Menu menu;
  double revenue = 0.0;
};

/// Best found menu in the symmetric randomized family; a lower bound on the
/// optimal revenue, not a certificate.  k = 3 searches
/// {(1,l,t), (l,1,t), (1,1,P)}; k = 4 searches two symmetric lottery pairs
/// {(1,l1,t1), (l1,1,t1), (1,l2,t2), (l2,1,t2)} (a superset: l2 = 1 recovers
/// k = 3).  Multi-start Nelder-Mead (20 seeded starts plus deterministic
/// embeddings of the best deterministic and best bundle menus) followed by
/// coordinate-wise refinement to 1e-6.  Deterministic for a fixed seed.
MenuSearchResult best_symmetric_menu(double c, int k, std::uint64_t seed = 0);

/// The buyer-utility surface of a menu as a piecewise field: one cell per
/// retained option (choice region = dominance half-planes), gradient equal to
/// the option's allocation, bottom-edge anchor segments from the edge
/// envelope.  The result is a convex piecewise-affine field whose expected
/// payment equals menu_revenue(menu, c).
PiecewiseField utility_field(const Menu& menu, double c);

}  // namespace twogoods
