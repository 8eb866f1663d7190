// Command-line front end for the two-goods certificate library: parameter
// tables, certificate verification, closed-form revenues, menu searches, the
// grid-LP cross-check, and CSV ratio sweeps.
#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "twogoods/closed_forms.hpp"
#include "twogoods/lp_oracle.hpp"
#include "twogoods/mechanisms.hpp"
#include "twogoods/solutions.hpp"
#include "twogoods/verify.hpp"

namespace {

using namespace twogoods;

constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t row) {
  // splitmix64 step over seed ^ golden-ratio-scrambled row index.
  std::uint64_t z = seed ^ (row * 0x9E3779B97F4A7C15ull);
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

std::string fmt15(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

int cmd_params(double c, double tol) {
  const double cb = cbar();
  std::cout << "c " << fmt15(c) << "\n";
  std::cout << "cbar " << fmt15(cb) << "\n";
  if (c <= cb) {
    const RegimeAParams P = params_a(c);
    std::cout << "regime A\n";
    std::cout << "q " << fmt15(P.q) << "\np " << fmt15(P.p) << "\nh "
              << fmt15(P.h) << "\nb " << fmt15(P.b) << "\nr " << fmt15(P.r)
              << "\nd " << fmt15(P.d) << "\nrho " << fmt15(P.rho) << "\n";
    const double id1 = std::abs((P.r - P.q) - (P.d - c));
    const double id2 = std::abs(P.p - (P.q + P.b));
    std::cout << "identity r-q=d-c residual " << fmt(id1)
              << (id1 <= tol ? " pass" : " fail") << "\n";
    std::cout << "identity p=q+b residual " << fmt(id2)
              << (id2 <= tol ? " pass" : " fail") << "\n";
    if (id1 > tol || id2 > tol) return kExitVerifyFail;
  } else {
    const RegimeBParams B = params_b(c);
    std::cout << "regime B\n";
    std::cout << "q " << fmt15(B.q) << "\np " << fmt15(B.p) << "\nh "
              << fmt15(B.h) << "\n";
    const double id1 = std::abs(B.q - (B.p - c));
    std::cout << "identity q=p-c residual " << fmt(id1)
              << (id1 <= tol ? " pass" : " fail") << "\n";
    if (id1 > tol) return kExitVerifyFail;
  }
  if (c < cb) {
    // params_b works here too, but the matching dual field dips negative.
    std::cout << "note bundle-only parameters below cbar describe a dual "
                 "field that loses nonnegativity\n";
  }
  return 0;
}

int cmd_verify(double c, const std::string& variant_name,
               const std::string& force_regime, int grid, double tol,
               double obj_tol) {
  const double cb = cbar();
  Regime regime = (c <= cb) ? Regime::A : Regime::B;
  bool force = false;
  if (force_regime == "a") {
    force = c > cb;
    regime = Regime::A;
  } else if (force_regime == "b") {
    force = c < cb;
    regime = Regime::B;
  }
  const DualVariant variant = (variant_name == "alt")
                                  ? DualVariant::alternative
                                  : DualVariant::standard;
  const SolutionPair pair = build_pair(c, regime, variant, force);
  const VerificationReport r = full_verify(pair, grid, tol, obj_tol);
  std::cout << "c " << fmt15(c) << "\n";
  std::cout << "regime " << (regime == Regime::A ? "A" : "B") << "\n";
  std::cout << "variant "
            << (variant == DualVariant::standard ? "standard" : "alt") << "\n";
  std::cout << "grid " << r.sample_grid << "\n";
  std::cout << "primal_feasible " << (r.primal.feasibility.pass ? "pass" : "fail")
            << " max_violation " << fmt(r.primal.feasibility.max_violation)
            << "\n";
  std::cout << "min_gradient " << fmt(r.primal.min_g1) << " "
            << fmt(r.primal.min_g2) << "\n";
  std::cout << "dual_feasible " << (r.dual.pass ? "pass" : "fail")
            << " max_violation " << fmt(r.dual.max_violation) << " at ("
            << fmt(r.dual.worst.x1) << ", " << fmt(r.dual.worst.x2) << ")\n";
  std::cout << "complementarity " << (r.complementarity.pass ? "pass" : "fail")
            << " max_violation " << fmt(r.complementarity.max_violation)
            << " at (" << fmt(r.complementarity.worst.x1) << ", "
            << fmt(r.complementarity.worst.x2) << ")\n";
  std::cout << "primal_objective " << fmt15(r.primal_objective) << "\n";
  std::cout << "primal_objective_direct " << fmt15(r.primal_objective_direct)
            << "\n";
  std::cout << "objectives_consistent " << (r.objectives_consistent ? "yes" : "no")
            << "\n";
  std::cout << "dual_objective " << fmt15(r.dual_objective) << "\n";
  std::cout << "duality_gap " << fmt(r.duality_gap) << "\n";
  std::cout << "certified " << (r.certified ? "yes" : "no") << "\n";
  return r.certified ? 0 : kExitVerifyFail;
}

int cmd_opt(double c) {
  const double cb = cbar();
  if (c <= cb) {
    std::cout << "opt " << fmt15(opt_value(c)) << "\n";
  } else {
    // Beyond the threshold the relaxed optimum coincides with bundling.
    std::cout << "opt " << fmt15(brev(c)) << "\n";
  }
  return 0;
}

int cmd_brev(double c) {
  std::cout << "brev " << fmt15(brev(c)) << "\n";
  std::cout << "bundle_price " << fmt15(bundle_price(c)) << "\n";
  return 0;
}

int cmd_drev(double c) {
  const DeterministicResult det = best_deterministic(c);
  std::cout << "item_price " << fmt15(det.item_price) << "\n";
  std::cout << "bundle_price " << fmt15(det.bundle_price) << "\n";
  std::cout << "drev " << fmt15(det.revenue) << "\n";
  return 0;
}

int cmd_menu_search(double c, int k, std::uint64_t seed) {
  const MenuSearchResult res = best_symmetric_menu(c, k, seed);
  std::cout << "k " << k << "\n";
  for (const MenuOption& o : res.menu.options) {
    std::cout << "option " << fmt15(o.a1) << " " << fmt15(o.a2) << " "
              << fmt15(o.t) << "\n";
  }
  std::cout << "rrev " << fmt15(res.revenue) << "\n";
  return 0;
}

int cmd_lp(double c, int grid, const std::string& dump_path) {
  const LpInstance lp = build_lp(c, grid);
  if (!dump_path.empty()) {
    std::ofstream out(dump_path);
    if (!out) {
      std::cerr << "error: cannot write " << dump_path << "\n";
      return kExitUsage;
    }
    out << dump_lp(lp);
  }
  const OracleReport rep = oracle_report(c, grid);
  std::cout << "c " << fmt15(c) << "\n";
  std::cout << "grid " << grid << "\n";
  std::cout << "lp_value " << fmt15(rep.value) << "\n";
  std::cout << "brev " << fmt15(rep.bundle_revenue) << "\n";
  std::cout << "drev " << fmt15(rep.det_revenue) << "\n";
  std::cout << "lp_exceeds_brev " << (rep.exceeds_bundle ? "yes" : "no") << "\n";
  std::cout << "lp_exceeds_drev " << (rep.exceeds_det ? "yes" : "no") << "\n";
  return 0;
}

struct SweepRow {
  double c, opt, brev_v, drev_v, rrev_v, lp_v;
  bool has_lp;
};

int cmd_sweep(double from, double to, double step, const std::string& out_path,
              int with_lp, int jobs, std::uint64_t seed) {
  if (!(from >= 0.0) || !(to > from) || !(step > 0.0)) {
    std::cerr << "error: need 0 <= from < to and step > 0\n";
    return kExitUsage;
  }
  std::vector<double> cs;
  for (double c = from; c <= to + 1e-12; c += step) cs.push_back(std::min(c, to));
  if (cs.back() < to - 1e-12) cs.push_back(to);
  const double cb = cbar();

  std::vector<SweepRow> rows(cs.size());
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      const size_t i = next.fetch_add(1);
      if (i >= cs.size()) return;
      const double c = cs[i];
      SweepRow row{};
      row.c = c;
      row.opt = (c <= cb) ? opt_value(c) : brev(c);
      row.brev_v = brev(c);
      row.drev_v = best_deterministic(c).revenue;
      row.rrev_v = best_symmetric_menu(c, 3, mix_seed(seed, i)).revenue;
      row.has_lp = with_lp > 0;
      row.lp_v = row.has_lp ? oracle_value(c, with_lp) : 0.0;
      rows[i] = row;
    }
  };
  const int nthreads =
      std::max(1, jobs > 0 ? jobs
                           : static_cast<int>(std::thread::hardware_concurrency()));
  std::vector<std::thread> pool;
  for (int t = 1; t < nthreads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "error: cannot write " << out_path << "\n";
    return kExitUsage;
  }
  out << "c,opt,brev,drev,rrev,lp_value,ratio_bundle,ratio_det,ratio_rand\n";
  double max_rb = 0.0, max_rd = 0.0, max_rr = 0.0;
  for (const SweepRow& r : rows) {
    const double rb = r.opt / r.brev_v;
    const double rd = r.opt / r.drev_v;
    const double rr = r.opt / r.rrev_v;
    max_rb = std::max(max_rb, rb);
    max_rd = std::max(max_rd, rd);
    max_rr = std::max(max_rr, rr);
    out << fmt(r.c) << ',' << fmt(r.opt) << ',' << fmt(r.brev_v) << ','
        << fmt(r.drev_v) << ',' << fmt(r.rrev_v) << ','
        << (r.has_lp ? fmt(r.lp_v) : std::string()) << ',' << fmt(rb) << ','
        << fmt(rd) << ',' << fmt(rr) << '\n';
  }
  std::cout << "rows " << rows.size() << "\n";
  std::cout << "max_ratio_bundle " << fmt(max_rb) << "\n";
  std::cout << "max_ratio_det " << fmt(max_rd) << "\n";
  std::cout << "max_ratio_rand " << fmt(max_rr) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"two-goods optimal-sale certificates, menus, and LP oracle"};
  app.require_subcommand(1);

  double c = 0.0;
  double tol = 1e-9;
  double obj_tol = 1e-6;
  int grid = 200;
  int lp_grid = 40;
  int k = 3;
  std::uint64_t seed = 0;
  std::string variant = "standard";
  std::string force_regime;
  std::string out_path, dump_path;
  double from = 0.0, to = 0.0, step = 0.0;
  int with_lp = 0, jobs = 0;

  auto add_c = [&](CLI::App* sub) {
    sub->add_option("--c", c, "type-support base c (square [c, c+1]^2)")
        ->required()
        ->check(CLI::NonNegativeNumber);
  };

  CLI::App* p_params = app.add_subcommand("params", "closed-form parameter table");
  add_c(p_params);
  p_params->add_option("--tol", tol, "identity tolerance");

  CLI::App* p_verify =
      app.add_subcommand("verify", "build and verify the certificate pair");
  add_c(p_verify);
  p_verify->add_option("--variant", variant, "dual variant: standard|alt")
      ->check(CLI::IsMember({"standard", "alt"}));
  p_verify->add_option("--grid", grid, "sample grid resolution");
  p_verify->add_option("--force-regime", force_regime,
                       "force construction regime: a|b")
      ->check(CLI::IsMember({"a", "b"}));
  p_verify->add_option("--tol", tol, "feasibility tolerance");
  p_verify->add_option("--obj-tol", obj_tol, "duality-gap tolerance");

  CLI::App* p_opt = app.add_subcommand("opt", "optimal relaxed revenue");
  add_c(p_opt);
  CLI::App* p_brev = app.add_subcommand("brev", "best full-bundle revenue");
  add_c(p_brev);
  CLI::App* p_drev = app.add_subcommand("drev", "best deterministic-menu revenue");
  add_c(p_drev);

  CLI::App* p_menu =
      app.add_subcommand("menu-search", "search symmetric randomized menus");
  add_c(p_menu);
  p_menu->add_option("--k", k, "nontrivial option count (3 or 4)")
      ->check(CLI::IsMember({3, 4}));
  p_menu->add_option("--seed", seed, "search seed");

  CLI::App* p_lp = app.add_subcommand("lp", "discretized-LP oracle");
  add_c(p_lp);
  p_lp->add_option("--grid", lp_grid, "grid resolution n (>= 4)");
  p_lp->add_option("--dump", dump_path, "write plain-text LP to this file");

  CLI::App* p_sweep = app.add_subcommand("sweep", "CSV ratio sweep");
  p_sweep->add_option("--from", from, "first c")->required();
  p_sweep->add_option("--to", to, "last c")->required();
  p_sweep->add_option("--step", step, "c increment")->required();
  p_sweep->add_option("--out", out_path, "output CSV path")->required();
  p_sweep->add_option("--with-lp", with_lp, "also solve the LP at this n");
  p_sweep->add_option("--jobs", jobs, "worker threads (default: hardware)");
  p_sweep->add_option("--seed", seed, "search seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (p_params->parsed()) return cmd_params(c, tol);
    if (p_verify->parsed())
      return cmd_verify(c, variant, force_regime, grid, tol, obj_tol);
    if (p_opt->parsed()) return cmd_opt(c);
    if (p_brev->parsed()) return cmd_brev(c);
    if (p_drev->parsed()) return cmd_drev(c);
    if (p_menu->parsed()) return cmd_menu_search(c, k, seed);
    if (p_lp->parsed()) return cmd_lp(c, lp_grid, dump_path);
    if (p_sweep->parsed())
      return cmd_sweep(from, to, step, out_path, with_lp, jobs, seed);
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFail;
  }
  return kExitUsage;
}
