#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "dexlab/bivariate_poly.hpp"
#include "dexlab/dyadic_gen.hpp"
#include "dexlab/nonconcentration.hpp"
#include "dexlab/rng.hpp"

namespace dexlab {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct GeneratorError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Batch experiment configuration. Experiment-specific keys (set recipes,
/// polynomials, pin lists) travel in `params`; every field is addressable
/// from the key=value or JSON config grammar.
struct ExperimentConfig {
  std::string experiment;  // E1_SpecialForm .. E5_CurvedFlat (short forms E1..E5 accepted)
  int scale_k = 12;
  double alpha = 0.5;
  double kappa = 0.5;
  double tolerance_c = 1.0;
  std::uint64_t seed = 1;
  std::string out_path;        // empty: stdout
  std::string format = "json"; // json | csv
  std::map<std::string, std::string> params;

  std::string param(const std::string& key, const std::string& fallback) const;
  double param_f64(const std::string& key, double fallback) const;
  std::uint64_t param_u64(const std::string& key, std::uint64_t fallback) const;
};

/// Parses the flat key=value grammar ('#' comments) or a JSON object with
/// the same keys. Unknown keys land in params.
ExperimentConfig parse_config(const std::string& text);

/// Applies one key=value assignment using the config-file key set.
void apply_config_override(ExperimentConfig& cfg, const std::string& key,
                           const std::string& value);

/// Validates ranges (0 < kappa <= alpha, alpha below the dimension-dependent
/// cap) and the experiment name; throws ConfigError.
void validate_config(const ExperimentConfig& cfg);

// ---- report model ----------------------------------------------------------

struct AuditRecord {
  std::string subject;
  bool required = false;
  NonConcentrationAudit audit;
};

struct PinRecord {
  int pin_index = 0;
  double pin_x = 0.0;  // construction coordinates
  double pin_y = 0.0;
  double triangle_area = 0.0;  // of the pin triple this row belongs to
  std::uint64_t inner_count = 0;
  std::uint64_t outer_count = 0;
  double exponent = 0.0;  // covering exponent of the distance set at scale_k
  std::string triple;     // "collinear" | "triangle"
};

struct ImageRecord {
  std::string name;
  std::uint64_t inner_count = 0;
  std::uint64_t outer_count = 0;
  double exponent = 0.0;       // at the config scale k
  double exponent_next = 0.0;  // at the k+2 ladder rung
  double drift = 0.0;          // exponent_next - exponent
};

struct EnergyRecord {
  std::string poly;
  std::uint64_t m = 0;
  std::uint64_t quadruple_count = 0;
  double tolerance_c = 1.0;
  double exponent = 0.0;
  double benchmark_3alpha = 0.0;
};

struct SpecialFormRow {
  std::string poly;
  std::string classification;  // Special | NotSpecial | DegenerateSpecial
  bool px_zero = false, py_zero = false, pxy_zero = false;
  std::uint64_t np_terms = 0;
};

struct TripleStatsRow {
  std::string set_name;
  double fitted_beta = 0.0;
  bool flat_flagged = false;
  std::uint64_t samples = 0;
};

struct ExperimentReport {
  ExperimentConfig config;
  std::vector<SpecialFormRow> special_forms;             // E1
  std::vector<PinRecord> pins;                           // E2
  std::vector<ImageRecord> images;                       // E3, E4
  std::vector<EnergyRecord> energies;                    // E4
  std::vector<AuditRecord> audits;                       // E2-E4
  std::vector<TripleStatsRow> triple_stats;              // E5
  std::vector<std::pair<std::string, double>> measured;  // named measured quantities
  std::vector<std::string> notes;                        // logged checks, caveats
  bool hypothesis_audits_passed = true;

  double measured_value(const std::string& name) const;  // throws if absent
};

/// Runs the configured experiment. Deterministic for a fixed config: the
/// report carries no wall-clock data (timings are logged to stderr by the
/// CLI instead).
ExperimentReport run_experiment(const ExperimentConfig& cfg);

// ---- shared generators ------------------------------------------------

/// Random univariate polynomial of degree <= max_deg with coefficients in
/// [-3,3]; the leading coefficient is forced nonzero.
std::vector<Rational> random_univariate_coeffs(Rng& rng, int max_deg);

/// h(a(x) + b(y)) with random h, a, b of degree <= 3.
BivariatePoly random_additive_special(Rng& rng);

/// h(a(x) * b(y)) with random h, a, b of degree <= 3.
BivariatePoly random_multiplicative_special(Rng& rng);

/// 1D recipe grammar: "ap:N", "cantor:DIGITS" (e.g. cantor:03), "full".
DyadicSet1D make_set_1d(const std::string& recipe, int scale_k);

}  // namespace dexlab
