#pragma once

#include "dexlab/dyadic_set.hpp"

namespace dexlab {

/// Result of the exhaustive Frostman-type window scan. worst_ratio maximizes
/// E_delta(s ∩ J) / (|J|^kappa * delta^-alpha) over every dyadic window J
/// (all scales 0..scale_k, all positions). Dyadic windows approximate general
/// intervals up to a factor 2, so thresholds should carry that slack.
struct NonConcentrationAudit {
  double alpha = 0.0;
  double kappa = 0.0;
  double threshold = 0.0;
  double worst_ratio = 0.0;
  int worst_window_scale = 0;
  std::uint64_t worst_window_position = 0;
  bool passed = false;
};

NonConcentrationAudit audit_nonconcentration(const DyadicSet1D& s, double alpha, double kappa,
                                             double threshold = 4.0);

/// Ball form over all dyadic squares; the window size r is the square side.
NonConcentrationAudit audit_nonconcentration(const DyadicSet2D& s, double alpha, double kappa,
                                             double threshold = 4.0);

}  // namespace dexlab
