#include "twogoods/mechanisms.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>

#include "twogoods/closed_forms.hpp"

namespace twogoods {

namespace {

bool same_option(const MenuOption& a, const MenuOption& b) {
  return a.a1 == b.a1 && a.a2 == b.a2 && a.t == b.t;
}

// Later exact duplicates removed; order otherwise preserved.
std::vector<MenuOption> pruned_options(const Menu& menu) {
  std::vector<MenuOption> out;
  for (const MenuOption& opt : menu.options) {
    bool dup = false;
    for (const MenuOption& seen : out) {
      if (same_option(seen, opt)) {
        dup = true;
        break;
      }
    }
    if (!dup) out.push_back(opt);
  }
  return out;
}

bool prefer(const MenuOption& a, const MenuOption& b) {
  // Is a preferred to b under the tie-break (assumes equal utility)?
  if (a.t != b.t) return a.t > b.t;
  if (a.a1 != b.a1) return a.a1 > b.a1;
  return a.a2 > b.a2;
}

}  // namespace

MenuOption buyer_choice(const Menu& menu, const Point& x) {
  MenuOption best{0.0, 0.0, 0.0};
  double best_u = 0.0;
  for (const MenuOption& opt : menu.options) {
    const double u = opt.utility(x);
    if (u > best_u || (u == best_u && prefer(opt, best))) {
      best = opt;
      best_u = u;
    }
  }
  return best;
}

std::vector<std::pair<MenuOption, Polygon>> choice_cells(const Menu& menu,
                                                         double c) {
  std::vector<MenuOption> opts = pruned_options(menu);
  std::vector<std::pair<MenuOption, Polygon>> cells;
  cells.reserve(opts.size());
  const MenuOption zero{0.0, 0.0, 0.0};
  for (size_t k = 0; k < opts.size(); ++k) {
    Polygon poly = square_polygon(c);
    auto dominate = [&](const MenuOption& other) {
      // Keep {x : utility_k(x) >= utility_other(x)}, i.e.
      // (a1_o - a1_k) x1 + (a2_o - a2_k) x2 <= t_o - t_k.
      poly = clip_polygon(poly, HalfPlane{other.a1 - opts[k].a1,
                                          other.a2 - opts[k].a2,
                                          other.t - opts[k].t});
    };
    for (size_t j = 0; j < opts.size() && !poly.empty(); ++j) {
      if (j != k) dominate(opts[j]);
    }
    if (!poly.empty()) dominate(zero);
    cells.emplace_back(opts[k], std::move(poly));
  }
  return cells;
}

double menu_revenue(const Menu& menu, double c) {
  double rev = 0.0;
  for (const auto& [opt, poly] : choice_cells(menu, c)) {
    rev += opt.t * polygon_area(poly);
  }
  return rev;
}

namespace {

double clamp_to_square(double v, double c) { return std::clamp(v, c, c + 1.0); }

// Area of {x1 + x2 <= p} inside [lo, hi]^2.
double corner_triangle_area(double p, double lo, double hi) {
  const double side = hi - lo;
  if (side <= 0.0) return 0.0;
  const double a = p - 2.0 * lo;
  if (a <= 0.0) return 0.0;
  if (a <= side) return a * a / 2.0;
  if (a < 2.0 * side) {
    const double rest = 2.0 * side - a;
    return side * side - rest * rest / 2.0;
  }
  return side * side;
}

}  // namespace

double deterministic_menu_revenue(double c, double s, double P) {
  const double g = P - s;  // marginal price of the second item
  const double G = clamp_to_square(g, c);
  const double S = clamp_to_square(s, c);
  double item_area;
  if (g <= s) {
    item_area = (c + 1.0 - S) * (G - c);
  } else {
    const double gh = G - c;
    const double sh = S - c;
    item_area = (gh * gh - sh * sh) / 2.0 + (c + 1.0 - G) * gh;
  }
  const double side = c + 1.0 - G;
  const double bundle_area = side * side - corner_triangle_area(P, G, c + 1.0);
  return 2.0 * s * item_area + P * bundle_area;
}

BundleResult best_full_bundle(double c) {
  BundleResult out;
  out.price = bundle_price(c);
  out.revenue = brev(c);
  // Golden-section cross-check on the exact menu revenue of {(1,1,s)}.
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = c, hi = 2.0 * c + 2.0;
  auto rev = [&](double s) {
    return menu_revenue(Menu{{MenuOption{1.0, 1.0, s}}}, c);
  };
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = rev(x1), f2 = rev(x2);
  while (hi - lo > 1e-9) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = rev(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = rev(x1);
    }
  }
  const double gs_price = (lo + hi) / 2.0;
  const double gs_rev = rev(gs_price);
  if (std::abs(gs_rev - out.revenue) > 1e-6 ||
      std::abs(gs_price - out.price) > 1e-4) {
    throw std::logic_error("best_full_bundle: closed form and search disagree");
  }
  return out;
}

DeterministicResult best_deterministic(double c) {
  const double lo = c, hi = 2.0 * c + 2.0;
  const double step = 1e-3;
  const int m = static_cast<int>(std::floor((hi - lo) / step + 1e-9));
  DeterministicResult best;
  best.revenue = -1.0;
  for (int i = 0; i <= m; ++i) {
    const double s = lo + i * step;
    for (int j = 0; j <= m; ++j) {
      const double P = lo + j * step;
      const double rev = deterministic_menu_revenue(c, s, P);
      if (rev > best.revenue) {
        best = DeterministicResult{s, P, rev};
      }
    }
  }
  // Deterministic pattern refinement around the best grid point.
  double h = step / 2.0;
  while (h > 5e-8) {
    bool moved = true;
    while (moved) {
      moved = false;
      for (int di = -1; di <= 1; ++di) {
        for (int dj = -1; dj <= 1; ++dj) {
          if (di == 0 && dj == 0) continue;
          const double s = std::clamp(best.item_price + di * h, lo, hi);
          const double P = std::clamp(best.bundle_price + dj * h, lo, hi);
          const double rev = deterministic_menu_revenue(c, s, P);
          if (rev > best.revenue) {
            best = DeterministicResult{s, P, rev};
            moved = true;
          }
        }
      }
    }
    h /= 2.0;
  }
  return best;
}

namespace {

// Deterministic Nelder-Mead maximization with box penalty.
// f returns -1 outside the box, so the simplex stays inside.
std::pair<std::vector<double>, double> nelder_mead(
    const std::function<double(const std::vector<double>&)>& f,
    std::vector<double> x0, double scale, int max_iter) {
  const size_t n = x0.size();
  std::vector<std::vector<double>> simplex(n + 1, x0);
  std::vector<double> fv(n + 1);
  for (size_t i = 0; i < n; ++i) simplex[i + 1][i] += scale;
  for (size_t i = 0; i <= n; ++i) fv[i] = f(simplex[i]);

  auto order = [&]() {
    std::vector<size_t> idx(n + 1);
    for (size_t i = 0; i <= n; ++i) idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(),
                     [&](size_t a, size_t b) { return fv[a] > fv[b]; });
    std::vector<std::vector<double>> s2(n + 1);
    std::vector<double> f2(n + 1);
    for (size_t i = 0; i <= n; ++i) {
      s2[i] = simplex[idx[i]];
      f2[i] = fv[idx[i]];
    }
    simplex = std::move(s2);
    fv = std::move(f2);
  };

  for (int it = 0; it < max_iter; ++it) {
    order();
    double spread = 0.0;
    for (size_t i = 0; i < n; ++i) {
      spread = std::max(spread, std::abs(simplex[n][i] - simplex[0][i]));
    }
    if (spread < 1e-10 && std::abs(fv[0] - fv[n]) < 1e-14) break;

    std::vector<double> centroid(n, 0.0);
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < n; ++j) centroid[j] += simplex[i][j];
    }
    for (size_t j = 0; j < n; ++j) centroid[j] /= static_cast<double>(n);

    auto blend = [&](double coef) {
      std::vector<double> x(n);
      for (size_t j = 0; j < n; ++j) {
        x[j] = centroid[j] + coef * (simplex[n][j] - centroid[j]);
      }
      return x;
    };

    std::vector<double> xr = blend(-1.0);
    const double fr = f(xr);
    if (fr > fv[0]) {
      std::vector<double> xe = blend(-2.0);
      const double fe = f(xe);
      if (fe > fr) {
        simplex[n] = std::move(xe);
        fv[n] = fe;
      } else {
        simplex[n] = std::move(xr);
        fv[n] = fr;
      }
    } else if (fr > fv[n - 1]) {
      simplex[n] = std::move(xr);
      fv[n] = fr;
    } else {
      std::vector<double> xc = blend(fr > fv[n] ? -0.5 : 0.5);
      const double fc = f(xc);
      if (fc > std::max(fr, fv[n])) {
        simplex[n] = std::move(xc);
        fv[n] = fc;
      } else {
        for (size_t i = 1; i <= n; ++i) {
          for (size_t j = 0; j < n; ++j) {
            simplex[i][j] = (simplex[i][j] + simplex[0][j]) / 2.0;
          }
          fv[i] = f(simplex[i]);
        }
      }
    }
  }
  order();
  return {simplex[0], fv[0]};
}

// Coordinate-wise pattern refinement of a maximizer down to the given step.
void coordinate_refine(const std::function<double(const std::vector<double>&)>& f,
                       std::vector<double>& x, double& fx, double h0,
                       double h_min) {
  for (double h = h0; h > h_min; h /= 2.0) {
    bool moved = true;
    while (moved) {
      moved = false;
      for (size_t j = 0; j < x.size(); ++j) {
        for (double sgn : {1.0, -1.0}) {
          std::vector<double> y = x;
          y[j] += sgn * h;
          const double fy = f(y);
          if (fy > fx) {
            x = std::move(y);
            fx = fy;
            moved = true;
          }
        }
      }
    }
  }
}

}  // namespace

MenuSearchResult best_symmetric_menu(double c, int k, std::uint64_t seed) {
  if (k != 3 && k != 4) {
    throw std::invalid_argument("best_symmetric_menu: k must be 3 or 4");
  }
  const double t_max = 4.0 * (c + 1.0);
  const double p_max = 2.0 * (c + 1.0);

  auto make_menu = [&](const std::vector<double>& v) {
    Menu menu;
    if (k == 3) {
      menu.options = {MenuOption{1.0, v[0], v[1]}, MenuOption{v[0], 1.0, v[1]},
                      MenuOption{1.0, 1.0, v[2]}};
    } else {
      menu.options = {MenuOption{1.0, v[0], v[1]}, MenuOption{v[0], 1.0, v[1]},
                      MenuOption{1.0, v[2], v[3]}, MenuOption{v[2], 1.0, v[3]}};
    }
    return menu;
  };
  auto objective = [&](const std::vector<double>& v) {
    if (v[0] < 0.0 || v[0] > 1.0) return -1.0;    // lottery weight
    if (v[1] < 0.0 || v[1] > t_max) return -1.0;  // lottery payment
    if (k == 3) {
      if (v[2] < 0.0 || v[2] > p_max) return -1.0;  // bundle price
    } else {
      if (v[2] < 0.0 || v[2] > 1.0) return -1.0;    // second lottery weight
      if (v[3] < 0.0 || v[3] > t_max) return -1.0;  // second lottery payment
    }
    return menu_revenue(make_menu(v), c);
  };

  const DeterministicResult det = best_deterministic(c);
  const BundleResult bundle = best_full_bundle(c);

  std::vector<std::vector<double>> starts;
  if (k == 3) {
    starts.push_back({0.0, det.item_price, det.bundle_price});
    starts.push_back({1.0, bundle.price, bundle.price});
  } else {
    starts.push_back({0.0, det.item_price, 1.0, det.bundle_price});
    starts.push_back({0.5, c + 0.7, 1.0, bundle.price});
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 20; ++i) {
    std::vector<double> v;
    v.push_back(unit(rng));
    v.push_back(c + unit(rng) * (c + 1.0));
    if (k == 3) {
      v.push_back(2.0 * c + 0.5 + unit(rng) * 0.75);
    } else {
      v.push_back(unit(rng));
      v.push_back(2.0 * c + 0.5 + unit(rng) * 0.75);
    }
    starts.push_back(std::move(v));
  }

  std::vector<double> best_x;
  double best_f = -1.0;
  for (const auto& x0 : starts) {
    auto [x, fx] = nelder_mead(objective, x0, 0.05, 2000);
    if (fx > best_f) {
      best_f = fx;
      best_x = std::move(x);
    }
  }
  coordinate_refine(objective, best_x, best_f, 1e-3, 5e-7);

  MenuSearchResult out{make_menu(best_x), best_f};
  // The family contains the deterministic menu (l = 0) and the pure bundle;
  // never report less than those embedded lower bounds.
  if (det.revenue > out.revenue) {
    out.revenue = det.revenue;
    out.menu = make_menu(k == 3
                             ? std::vector<double>{0.0, det.item_price,
                                                   det.bundle_price}
                             : std::vector<double>{0.0, det.item_price, 1.0,
                                                   det.bundle_price});
  }
  if (bundle.revenue > out.revenue) {
    out.revenue = bundle.revenue;
    out.menu = Menu{{MenuOption{1.0, 1.0, bundle.price}}};
  }
  return out;
}

PiecewiseField utility_field(const Menu& menu, double c) {
  std::vector<MenuOption> opts = pruned_options(menu);
  const MenuOption zero{0.0, 0.0, 0.0};
  bool has_zero = false;
  for (const MenuOption& opt : opts) {
    if (same_option(opt, zero)) has_zero = true;
  }
  if (!has_zero) opts.push_back(zero);

  PiecewiseField field;
  field.c = c;
  field.integration_axis = 2;
  for (size_t k = 0; k < opts.size(); ++k) {
    GradientSpec spec;
    spec.region.label = "opt" + std::to_string(k);
    for (size_t j = 0; j < opts.size(); ++j) {
      if (j == k) continue;
      spec.region.half_planes.push_back(HalfPlane{
          opts[j].a1 - opts[k].a1, opts[j].a2 - opts[k].a2,
          opts[j].t - opts[k].t});
    }
    spec.g1 = AffineForm{opts[k].a1, 0.0, 0.0};
    spec.g2 = AffineForm{opts[k].a2, 0.0, 0.0};
    field.specs.push_back(std::move(spec));
  }

  // Bottom-edge envelope u(x1, c) as anchor segments: winner of the affine
  // family a1 x1 + (a2 c - t) on each sub-interval between line crossings.
  const double lo = c, hi = c + 1.0;
  std::vector<double> cuts{lo, hi};
  for (size_t i = 0; i < opts.size(); ++i) {
    for (size_t j = i + 1; j < opts.size(); ++j) {
      const double ds = opts[i].a1 - opts[j].a1;
      if (std::abs(ds) < 1e-14) continue;
      const double x = ((opts[j].a2 - opts[i].a2) * c -
                        (opts[j].t - opts[i].t)) / ds;
      if (x > lo && x < hi) cuts.push_back(x);
    }
  }
  std::sort(cuts.begin(), cuts.end());
  for (size_t s = 0; s + 1 < cuts.size(); ++s) {
    const double a = cuts[s], b = cuts[s + 1];
    if (b - a < 1e-12) continue;
    const double mid = (a + b) / 2.0;
    size_t win = 0;
    double best = -1e300;
    for (size_t k = 0; k < opts.size(); ++k) {
      const double v = opts[k].a1 * mid + opts[k].a2 * c - opts[k].t;
      if (v > best || (v == best && prefer(opts[k], opts[win]))) {
        best = v;
        win = k;
      }
    }
    field.anchors.push_back(
        {a, b, opts[win].a2 * c - opts[win].t, opts[win].a1});
  }
  return field;
}

}  // namespace twogoods
