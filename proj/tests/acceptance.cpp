// Acceptance suite: one test per criterion, each printing a PASS/FAIL line.
// Register through ctest as acceptance_C01 .. acceptance_C10 (gtest filters),
// or run the binary directly for the whole table.

#include <gtest/gtest.h>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "dexlab/dyadic_gen.hpp"
#include "dexlab/energy.hpp"
#include "dexlab/experiment.hpp"
#include "dexlab/pinned_web.hpp"
#include "dexlab/poly_text.hpp"
#include "dexlab/projection.hpp"
#include "dexlab/remez.hpp"
#include "dexlab/report_io.hpp"
#include "dexlab/rng.hpp"
#include "dexlab/web.hpp"
#include "dexlab/whitney.hpp"
#include "oracles/oracle_poly.hpp"

using namespace dexlab;

namespace {

class Criterion {
 public:
  Criterion(int number, std::string title, double budget_seconds)
      : number_(number), title_(std::move(title)), budget_(budget_seconds) {
    start_ = std::chrono::steady_clock::now();
  }

  void check(bool ok, const std::string& what) {
    EXPECT_TRUE(ok) << what;
    if (!ok) failures_.push_back(what);
  }

  ~Criterion() {
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    bool in_budget = elapsed < budget_;
    EXPECT_TRUE(in_budget) << "runtime " << elapsed << "s exceeds " << budget_ << "s";
    bool ok = failures_.empty() && in_budget;
    std::ostringstream line;
    line << "[criterion " << number_ << "] " << (ok ? "PASS" : "FAIL") << " " << title_ << " ("
         << elapsed << "s / " << budget_ << "s budget)";
    if (!ok) {
      for (const auto& f : failures_) line << "\n    failed: " << f;
    }
    std::cout << line.str() << std::endl;
  }

 private:
  int number_;
  std::string title_;
  double budget_;
  std::chrono::steady_clock::time_point start_;
  std::vector<std::string> failures_;
};

Rational random_point(Rng& rng) { return Rational(rng.next_int(-12, 12), 1 + rng.next_int(0, 5)); }

BivariatePoly random_poly_deg(Rng& rng, int max_deg) {
  BivariatePoly p;
  int terms = 2 + static_cast<int>(rng.next_below(6));
  for (int n = 0; n < terms; ++n) {
    int i = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(max_deg) + 1));
    int j = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(max_deg - i) + 1));
    p.add_term(i, j, Rational(rng.next_int(-5, 5)));
  }
  return p;
}

int run_cli(const std::string& args) {
  std::string cmd = std::string(EXPCLI_PATH) + " " + args + " >/dev/null 2>&1";
  return WEXITSTATUS(std::system(cmd.c_str()));
}

std::string slurp(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  std::stringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

ExperimentConfig elekes_config() {
  ExperimentConfig cfg;
  cfg.experiment = "E2";
  cfg.scale_k = 12;
  cfg.alpha = 1.0;  // the 2D surrogate dimension of the AP(64) x AP(64) image
  cfg.kappa = 1.0;
  cfg.params["input_n"] = "64";
  cfg.params["collinear_pins"] = "-1,0;0,0;1,0";  // on the x-axis
  cfg.params["triangle_pins"] = "0.5,0;-0.5,0;0,0.5";
  return cfg;
}

}  // namespace

TEST(Acceptance, C01_SpecialFormDetector) {
  Criterion c(1, "special-form detector on composed instances and witnesses", 5.0);
  Rng rng(211);
  for (int n = 0; n < 100; ++n) {
    BivariatePoly p =
        (n % 2 == 0) ? random_additive_special(rng) : random_multiplicative_special(rng);
    auto d = is_special_form(p);
    c.check(d.kind != SpecialFormKind::NotSpecial,
            "composed instance classified NotSpecial: " + poly_to_string(p));
  }
  for (const char* text : {"x^2 + x*y + y^2", "x^2 + x*y", "x^3 + x*y^2 + y"}) {
    BivariatePoly p = parse_poly(text);
    oracle::OPoly np = oracle::curvature_numerator_oracle(oracle::from_bivariate(p));
    c.check(!np.is_zero(), std::string("oracle says N_P == 0 for witness ") + text);
    c.check(is_special_form(p).kind == SpecialFormKind::NotSpecial,
            std::string("witness not classified NotSpecial: ") + text);
  }
}

TEST(Acceptance, C02_IdentitySuite) {
  Criterion c(2, "curvature three-way identity and H_F consistency, exact", 10.0);
  Rng rng(223);
  int polys_checked = 0;
  for (int n = 0; n < 500 && polys_checked < 50; ++n) {
    BivariatePoly p = random_poly_deg(rng, 5);
    oracle::OPoly op = oracle::from_bivariate(p);
    oracle::OPoly px = op.dx(), py = op.dy(), pxy = op.dx().dy(), pyy = op.dy().dy();
    if (px.is_zero() || py.is_zero() || pxy.is_zero()) continue;
    ++polys_checked;
    using oracle::ORat;
    ORat rpx = ORat::of(px), rpy = ORat::of(py), rpxy = ORat::of(pxy);
    ORat q = rpx * rpy / rpxy;
    ORat kp = rpx * q.dy() - rpy * q.dx();                  // K_P as a rational function
    ORat dy_log_dx = (rpxy / rpx - ORat::of(pyy) / rpy).dx();  // d/dx d/dy log(Px/Py)
    oracle::OPoly np = oracle::from_bivariate(curvature_numerator(p));

    int points = 0;
    for (int m = 0; m < 400 && points < 50; ++m) {
      Rational x = random_point(rng), y = random_point(rng);
      Rational vx = px.eval(x, y), vy = py.eval(x, y), vxy = pxy.eval(x, y);
      if (vx == 0 || vy == 0 || vxy == 0) continue;
      ++points;
      Rational n_val = np.eval(x, y);
      bool kp_ok = n_val == vxy * vxy * kp.eval(x, y);
      bool log_ok = n_val == dy_log_dx.eval(x, y) * (vx * vy) * (vx * vy);
      c.check(kp_ok, "N_P != Pxy^2 K_P at a rational point");
      c.check(log_ok, "N_P != (Px Py)^2 dxdy log(Px/Py) at a rational point");
      if (!kp_ok || !log_ok) break;
    }
    c.check(points > 0, "no admissible rational points found");
  }
  c.check(polys_checked == 50, "fewer than 50 admissible polynomials");

  Rng rng2(227);
  for (int n = 0; n < 100; ++n) {
    BivariatePoly p = random_poly_deg(rng2, 4);
    oracle::OPoly4 f = oracle::difference_lift(p);
    std::array<Rational, 4> z{random_point(rng2), random_point(rng2), random_point(rng2),
                              random_point(rng2)};
    c.check(eval_hf_exact(p, z[0], z[1], z[2], z[3]) == oracle::general_hf_oracle(f, z),
            "general H_F formula disagrees with the reduced one");
  }
}

TEST(Acceptance, C03_PinnedCurvature) {
  Criterion c(3, "pinned curvature: collinear zero and fd cross-check", 5.0);
  PinnedWeb collinear{0.5, 0.3, 0.0};
  Rng rng(229);
  int checked = 0;
  while (checked < 100) {
    double x = rng.next_unit(), y = rng.next_unit();
    auto v = pinned_curvature(collinear, x, y);
    if (!v) continue;
    ++checked;
    c.check(*v == 0.0, "collinear pins gave a nonzero curvature value");
  }

  PinnedWeb web{0.5, 0.0, 1.0};
  auto phis = pinned_web_functions(web);
  int points = 0;
  for (double x : {0.12, 0.3, 0.52, 0.7, 0.88}) {
    for (double y : {0.18, 0.33, 0.47, 0.66, 0.82}) {
      if (points >= 20) break;
      auto closed = pinned_curvature(web, x, y);
      if (!closed || std::fabs(*closed) < 1e-2) continue;
      auto fd = fd_blaschke_curvature(phis[0], phis[1], phis[2], x, y, 1e-4);
      if (!fd) continue;
      ++points;
      // Documented normalization: fd = -2 * (b f / g^2) (leading 2 of the
      // curvature form, opposite orientation of the closed-form density).
      double rel = std::fabs(*fd / (-2.0 * *closed) - 1.0);
      c.check(rel < 1e-4, "fd vs closed form relative error " + std::to_string(rel));
    }
  }
  c.check(points == 20, "fewer than 20 admissible cross-check points");
}

TEST(Acceptance, C04_ElekesPhenomenon) {
  Criterion c(4, "elekes identity exact; x-axis pinned exponents <= 0.62 at k=12", 30.0);
  // Exact identity over every generated cell-center pair, for each pin.
  DyadicSet1D ap = gen_ap(12, 64);
  for (Rational s : {Rational(-1), Rational(0), Rational(1)}) {
    for (std::uint64_t ci : ap.cells) {
      Rational a = make_rational(2 * BigInt(ci) + 1, BigInt(1) << 13);
      for (std::uint64_t cj : ap.cells) {
        Rational b = make_rational(2 * BigInt(cj) + 1, BigInt(1) << 13);
        Rational lhs = (a / 2 - s) * (a / 2 - s) + Rational(1) + b - a * a / 4;
        if (lhs != s * s + 1 + (b - s * a)) {
          c.check(false, "algebraic identity violated");
          break;
        }
      }
    }
  }
  ExperimentReport rep = run_experiment(elekes_config());
  for (const PinRecord& pin : rep.pins) {
    if (pin.triple != "collinear") continue;
    c.check(pin.exponent <= 0.62, "pin (" + std::to_string(pin.pin_x) + ",0) exponent " +
                                      std::to_string(pin.exponent) + " > 0.62");
  }
}

TEST(Acceptance, C05_TriangleContrast) {
  Criterion c(5, "triangle pins beat collinear pins by >= 0.15 at k=12", 60.0);
  ExperimentReport rep = run_experiment(elekes_config());
  double margin = rep.measured_value("triangle_minus_collinear_margin");
  c.check(rep.measured_value("triangle_pins_area") == 0.25, "triangle pins area is not 1/4");
  c.check(margin >= 0.15,
          "triangle max exponent exceeds collinear max by only " + std::to_string(margin));
}

TEST(Acceptance, C06_ConvexFourthProjection) {
  Criterion c(6, "four projections at k=16: flat <= 0.55, convex >= 0.8", 60.0);
  ExperimentConfig cfg;
  cfg.experiment = "E3";
  cfg.scale_k = 16;
  cfg.alpha = 1.0;
  cfg.kappa = 1.0;
  ExperimentReport rep = run_experiment(cfg);
  for (const ImageRecord& img : rep.images) {
    if (img.name == "convex") {
      c.check(img.exponent >= 0.8,
              "x^2+y image exponent " + std::to_string(img.exponent) + " < 0.8");
    } else {
      c.check(img.exponent <= 0.55,
              img.name + " image exponent " + std::to_string(img.exponent) + " > 0.55");
    }
  }
}

TEST(Acceptance, C07_EnergyCounts) {
  Criterion c(7, "two-pointer energy == brute force; AP regression value", 30.0);
  Rng rng(233);
  for (int n = 0; n < 50; ++n) {
    int k = 5 + static_cast<int>(rng.next_below(4));
    std::vector<Cell2> cells;
    std::size_t m = 50 + rng.next_below(1951);
    for (std::size_t t = 0; t < m; ++t)
      cells.push_back(Cell2{static_cast<std::uint32_t>(rng.next_below(std::uint64_t{1} << k)),
                            static_cast<std::uint32_t>(rng.next_below(std::uint64_t{1} << k))});
    DyadicSet2D e = DyadicSet2D::from_cells(k, std::move(cells));
    BivariatePoly p = random_poly_deg(rng, 3);
    double tol = 0.5 + rng.next_unit() * 2.0;
    if (energy_count(p, e, tol).quadruple_count != energy_count_brute_force(p, e, tol)) {
      c.check(false, "two-pointer disagrees with brute force");
      break;
    }
  }
  DyadicSet1D a = gen_ap(8, 16);
  EnergyCount ec = energy_count(parse_poly("x + y"), product(a, a), 1.0);
  c.check(ec.quadruple_count == 2736, "AP(16)^2 regression count " +
                                          std::to_string(ec.quadruple_count) + " != 2736");
}

TEST(Acceptance, C08_EntropyGrowth) {
  Criterion c(8, "entropy growth direction at k=16 on the quarter Cantor set", 120.0);
  ExperimentConfig cfg;
  cfg.experiment = "E4";
  cfg.scale_k = 16;
  cfg.alpha = 0.5;
  cfg.kappa = 0.5;
  ExperimentReport rep = run_experiment(cfg);
  for (const AuditRecord& a : rep.audits)
    c.check(a.audit.passed && a.audit.worst_ratio <= 4.0,
            "non-concentration audit failed for " + a.subject + " (worst ratio " +
                std::to_string(a.audit.worst_ratio) + ")");
  double image_exp = rep.measured_value("main_image_exponent");
  double energy_exp = rep.measured_value("main_energy_exponent");
  double contrast_exp = rep.measured_value("contrast_image_exponent");
  c.check(image_exp >= cfg.alpha + 0.1, "image exponent " + std::to_string(image_exp) +
                                            " below alpha + 0.1");
  c.check(energy_exp <= 3.0 * cfg.alpha - 0.1,
          "energy exponent " + std::to_string(energy_exp) + " above 3 alpha - 0.1");
  c.check(contrast_exp <= cfg.alpha + 0.05, "contrast (x+y) image exponent " +
                                                std::to_string(contrast_exp) +
                                                " above alpha + 0.05");
}

TEST(Acceptance, C09_WhitneyAndRemez) {
  Criterion c(9, "whitney invariants to depth 10; remez on 100 random polynomials", 30.0);
  for (auto omega : {omega_open_unit_cube(2), omega_offdiagonal()}) {
    WhitneyResult r = whitney_decompose(omega, 2, 10);
    std::uint64_t total = std::uint64_t{1} << 20;
    c.check(r.interior_units + r.exterior_units + r.unresolved_units == total,
            "volume ledger does not close exactly");
    std::set<std::pair<int, std::uint64_t>> seen;
    for (const WhitneyCube& cube : r.cubes) {
      BoxD b = cube_box(cube, 2);
      c.check(omega(b) == BoxStatus::Inside, "emitted cube not certified inside");
      double side = std::ldexp(1.0, -cube.depth);
      BoxD grown = b;
      for (int d = 0; d < 2; ++d) {
        grown.lo[d] = std::max(0.0, b.lo[d] - 3.5 * side);
        grown.hi[d] = std::min(1.0, b.hi[d] + 3.5 * side);
      }
      // dist <= 4 sqrt(2) side < 6 side: a 6-side-grown box must leave Omega.
      c.check(omega(grown) != BoxStatus::Inside, "cube too deep inside (dilate stays in Omega)");
      std::uint64_t key = (std::uint64_t{cube.index[0]} << 20) | cube.index[1];
      c.check(seen.insert({cube.depth, key}).second, "duplicate cube");
    }
  }
  Rng rng(239);
  for (int n = 0; n < 100; ++n) {
    BivariatePoly p;
    for (int t = 0; t < 5; ++t) {
      int i = static_cast<int>(rng.next_below(5));
      int j = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(5 - i)));
      p.add_term(i, j, Rational(rng.next_int(-8, 8)));
    }
    if (p.is_zero()) p = parse_poly("x + y");
    RemezCheck rc = remez_check(p, Box{0, 1, 0, 1}, 0.02 + 0.3 * rng.next_unit(), 256);
    c.check(rc.passed, "remez bound violated for " + poly_to_string(p));
  }
}

TEST(Acceptance, C10_Determinism) {
  Criterion c(10, "identical configs give byte-identical reports", 60.0);
  for (const char* spec : {"E2 --scale-k 10 --set input_n=32", "E4 --scale-k 12"}) {
    std::string base = std::string("/tmp/dexlab_acc_") + (spec[1] == '2' ? "e2" : "e4");
    std::string args = std::string("run --experiment ") + spec + " --seed 21 --out ";
    c.check(run_cli(args + base + "_a.json") == 0, "run failed");
    c.check(run_cli(args + base + "_b.json") == 0, "rerun failed");
    std::string a = slurp(base + "_a.json"), b = slurp(base + "_b.json");
    c.check(!a.empty() && a == b, "reports differ between identical runs");
  }
}
