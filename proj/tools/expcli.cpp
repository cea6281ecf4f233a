// expcli: batch experiment harness for the dyadic expansion lab.
//
// Subcommands: gen, audit, image, energy, whitney, run. Exit codes:
//   0 success, 2 config error, 3 hypothesis-audit failure (a partial report
//   is still emitted).

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "dexlab/dyadic_gen.hpp"
#include "dexlab/energy.hpp"
#include "dexlab/experiment.hpp"
#include "dexlab/nonconcentration.hpp"
#include "dexlab/poly_text.hpp"
#include "dexlab/projection.hpp"
#include "dexlab/report_io.hpp"
#include "dexlab/whitney.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitAudit = 3;

void write_output(const std::string& path, const std::string& body) {
  if (path.empty() || path == "-") {
    std::cout << body;
    return;
  }
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open output file '" + path + "'");
  os << body;
}

dexlab::DyadicSet2D load_set_2d(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open set file '" + path + "'");
  dexlab::DyadicSet1D s1;
  dexlab::DyadicSet2D s2;
  if (dexlab::load_set(is, s1, s2) != 2)
    throw std::runtime_error("expected a 2d set in '" + path + "'");
  return s2;
}

dexlab::DyadicSet1D load_set_1d(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open set file '" + path + "'");
  dexlab::DyadicSet1D s1;
  dexlab::DyadicSet2D s2;
  if (dexlab::load_set(is, s1, s2) != 1)
    throw std::runtime_error("expected a 1d set in '" + path + "'");
  return s1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dyadic discretized-set expansion lab"};
  app.require_subcommand(1);
  app.fallthrough();

  int scale_k = 12;
  std::uint64_t seed = 1;
  std::string out_path;
  std::string format = "json";
  app.add_option("--scale-k", scale_k, "dyadic scale k (delta = 2^-k)")->capture_default_str();
  app.add_option("--seed", seed, "seed for every sampled quantity")->capture_default_str();
  app.add_option("--out", out_path, "output path (default: stdout)");
  app.add_option("--format", format, "report format: json or csv")->capture_default_str();

  // gen
  auto* gen = app.add_subcommand("gen", "generate a dyadic set file");
  std::string gen_type;
  std::uint64_t gen_n = 64;
  std::string gen_digits = "03";
  int gen_out_scale = -1;
  gen->add_option("--type", gen_type, "ap | cantor | full | product-ap | elekes-ap")->required();
  gen->add_option("--n", gen_n, "cell count for ap-type recipes")->capture_default_str();
  gen->add_option("--digits", gen_digits, "kept base-4 digits for cantor")->capture_default_str();
  gen->add_option("--out-scale-k", gen_out_scale, "output scale for elekes (default 2k)");

  // audit
  auto* audit = app.add_subcommand("audit", "non-concentration window scan of a set file");
  std::string audit_in;
  double audit_alpha = 0.5, audit_kappa = 0.5, audit_threshold = 4.0;
  audit->add_option("--in", audit_in, "set file (1d or 2d)")->required();
  audit->add_option("--alpha", audit_alpha)->capture_default_str();
  audit->add_option("--kappa", audit_kappa)->capture_default_str();
  audit->add_option("--threshold", audit_threshold)->capture_default_str();

  // image
  auto* image_cmd = app.add_subcommand("image", "project a 2d set file through a family");
  std::string image_in, image_family = "linear", image_poly = "x + y";
  std::string image_u = "x^2", image_v = "y";
  double image_ex = 1.0, image_ey = 0.0, image_px = 0.0, image_py = 0.0;
  bool image_unsquared = false;
  image_cmd->add_option("--in", image_in, "2d set file")->required();
  image_cmd->add_option("--family", image_family, "linear | pinned | graph | convex")
      ->capture_default_str();
  image_cmd->add_option("--ex", image_ex, "linear direction x")->capture_default_str();
  image_cmd->add_option("--ey", image_ey, "linear direction y")->capture_default_str();
  image_cmd->add_option("--px", image_px, "pin x")->capture_default_str();
  image_cmd->add_option("--py", image_py, "pin y")->capture_default_str();
  image_cmd->add_flag("--unsquared", image_unsquared, "pinned: use |p-q| instead of |p-q|^2");
  image_cmd->add_option("--poly", image_poly, "graph polynomial")->capture_default_str();
  image_cmd->add_option("--u", image_u, "convex: polynomial in x")->capture_default_str();
  image_cmd->add_option("--v", image_v, "convex: polynomial in y")->capture_default_str();

  // energy
  auto* energy_cmd = app.add_subcommand("energy", "delta-approximate energy of P on a 2d set");
  std::string energy_in, energy_poly = "x + y";
  double energy_tol = 1.0;
  energy_cmd->add_option("--in", energy_in, "2d set file")->required();
  energy_cmd->add_option("--poly", energy_poly)->capture_default_str();
  energy_cmd->add_option("--tolerance-c", energy_tol, "window is c*delta")->capture_default_str();

  // whitney
  auto* whitney_cmd = app.add_subcommand("whitney", "whitney cube decomposition");
  std::string whitney_omega = "open-square";
  int whitney_depth = 8, whitney_dim = 2;
  whitney_cmd->add_option("--omega", whitney_omega, "open-square | offdiag | corner | poly:<P>")
      ->capture_default_str();
  whitney_cmd->add_option("--max-depth", whitney_depth)->capture_default_str();
  whitney_cmd->add_option("--dim", whitney_dim)->capture_default_str();

  // run
  auto* run_cmd = app.add_subcommand("run", "run a configured experiment");
  std::string run_config, run_experiment_name;
  std::vector<std::string> run_sets;
  run_cmd->add_option("--config", run_config, "config file (key=value or JSON)");
  run_cmd->add_option("--experiment", run_experiment_name, "E1..E5 (with defaults)");
  run_cmd->add_option("--set", run_sets, "extra key=value config overrides");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      using namespace dexlab;
      std::string body;
      if (gen_type == "ap") {
        body = set_to_string(gen_ap(scale_k, gen_n));
      } else if (gen_type == "cantor") {
        std::set<int> digits;
        for (char c : gen_digits) digits.insert(c - '0');
        body = set_to_string(gen_cantor(scale_k, digits));
      } else if (gen_type == "full") {
        body = set_to_string(make_set_1d("full", scale_k));
      } else if (gen_type == "product-ap") {
        DyadicSet1D a = gen_ap(scale_k, gen_n);
        body = set_to_string(product(a, a));
      } else if (gen_type == "elekes-ap") {
        DyadicSet1D a = gen_ap(scale_k, gen_n);
        int out_k = gen_out_scale > 0 ? gen_out_scale : std::min(2 * scale_k, 26);
        ElekesImage el = gen_elekes(a, a, out_k);
        std::cerr << "elekes: pairs=" << el.total_pairs << " cells=" << el.cells.size()
                  << " dropped_out_of_chart=" << el.dropped_out_of_chart << "\n";
        body = set_to_string(el.cells);
      } else {
        std::cerr << "unknown --type '" << gen_type << "'\n";
        return kExitConfig;
      }
      write_output(out_path, body);
      return 0;
    }

    if (audit->parsed()) {
      using namespace dexlab;
      std::ifstream is(audit_in);
      if (!is) throw std::runtime_error("cannot open set file '" + audit_in + "'");
      DyadicSet1D s1;
      DyadicSet2D s2;
      int dim = load_set(is, s1, s2);
      NonConcentrationAudit a = dim == 1
                                    ? audit_nonconcentration(s1, audit_alpha, audit_kappa,
                                                             audit_threshold)
                                    : audit_nonconcentration(s2, audit_alpha, audit_kappa,
                                                             audit_threshold);
      std::ostringstream os;
      os << "worst_ratio," << a.worst_ratio << "\n"
         << "worst_window_scale," << a.worst_window_scale << "\n"
         << "worst_window_position," << a.worst_window_position << "\n"
         << "passed," << a.passed << "\n";
      write_output(out_path, os.str());
      return a.passed ? 0 : kExitAudit;
    }

    if (image_cmd->parsed()) {
      using namespace dexlab;
      DyadicSet2D x = load_set_2d(image_in);
      ProjectionFamily fam;
      if (image_family == "linear")
        fam = make_linear(image_ex, image_ey);
      else if (image_family == "pinned")
        fam = PinnedDistanceFamily{image_px, image_py, !image_unsquared};
      else if (image_family == "graph")
        fam = GraphFamily{parse_poly(image_poly)};
      else if (image_family == "convex")
        fam = make_additive_convex(image_u, image_v);
      else
        throw ConfigError("unknown family '" + image_family + "'");
      auto [img, est] = image(fam, x);
      std::cerr << "inner=" << est.inner_count << " outer=" << est.outer_count
                << " lipschitz=" << est.lipschitz_bound_used << " chart=[" << est.chart_lo << ","
                << est.chart_hi << "]"
                << " exponent=" << covering_exponent(est.inner_count, x.scale_k) << "\n";
      write_output(out_path, set_to_string(img));
      return 0;
    }

    if (energy_cmd->parsed()) {
      using namespace dexlab;
      DyadicSet2D e = load_set_2d(energy_in);
      EnergyCount ec = energy_count(parse_poly(energy_poly), e, energy_tol);
      std::ostringstream os;
      os << "m," << ec.m << "\n"
         << "quadruple_count," << ec.quadruple_count << "\n"
         << "tolerance_c," << ec.tolerance_c << "\n"
         << "normalized_exponent," << ec.normalized_exponent << "\n";
      write_output(out_path, os.str());
      return 0;
    }

    if (whitney_cmd->parsed()) {
      using namespace dexlab;
      BoxPredicate omega;
      if (whitney_omega == "open-square")
        omega = omega_open_unit_cube(whitney_dim);
      else if (whitney_omega == "offdiag")
        omega = omega_offdiagonal();
      else if (whitney_omega == "corner")
        omega = omega_deleted_corner(0.0, 0.0);
      else if (whitney_omega.rfind("poly:", 0) == 0)
        omega = omega_poly_complement(parse_poly(whitney_omega.substr(5)));
      else
        throw ConfigError("unknown --omega '" + whitney_omega + "'");
      WhitneyResult r = whitney_decompose(omega, whitney_dim, whitney_depth);
      std::cerr << "cubes=" << r.cubes.size() << " interior_units=" << r.interior_units
                << " unresolved_units=" << r.unresolved_units
                << " exterior_units=" << r.exterior_units << " unit=" << r.unit_volume << "\n";
      write_output(out_path, whitney_to_string(r));
      return 0;
    }

    // run
    using namespace dexlab;
    ExperimentConfig cfg;
    if (!run_config.empty()) {
      std::ifstream is(run_config);
      if (!is) throw std::runtime_error("cannot open config '" + run_config + "'");
      std::stringstream ss;
      ss << is.rdbuf();
      cfg = parse_config(ss.str());
    } else if (!run_experiment_name.empty()) {
      cfg.experiment = run_experiment_name;
      cfg.scale_k = scale_k;
      cfg.seed = seed;
      // Per-experiment defaults for the hypothesis parameters.
      if (run_experiment_name.rfind("E2", 0) == 0 || run_experiment_name.rfind("E3", 0) == 0) {
        cfg.alpha = 1.0;
        cfg.kappa = 1.0;
      } else {
        cfg.alpha = 0.5;
        cfg.kappa = 0.5;
      }
    } else {
      throw ConfigError("run: need --config or --experiment");
    }
    // Precedence: defaults < config file < global flags < --set overrides.
    if (app.count("--scale-k") > 0) cfg.scale_k = scale_k;
    if (app.count("--seed") > 0) cfg.seed = seed;
    if (app.count("--format") > 0) cfg.format = format;
    if (!out_path.empty()) cfg.out_path = out_path;
    for (const auto& kv : run_sets) {
      auto eq = kv.find('=');
      if (eq == std::string::npos) throw ConfigError("--set needs key=value");
      apply_config_override(cfg, kv.substr(0, eq), kv.substr(eq + 1));
    }

    auto t0 = std::chrono::steady_clock::now();
    ExperimentReport rep = run_experiment(cfg);
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    // Timings are logged, never serialized: reports must be byte-identical
    // across reruns of the same config.
    std::cerr << "experiment " << rep.config.experiment << " wall_ms=" << ms << "\n";
    write_output(cfg.out_path, emit_report(rep, cfg.format));
    if (!rep.hypothesis_audits_passed) {
      std::cerr << "hypothesis audit failed; partial report emitted\n";
      return kExitAudit;
    }
    return 0;
  } catch (const dexlab::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const dexlab::GeneratorError& e) {
    std::cerr << "generator error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
