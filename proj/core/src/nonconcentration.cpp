#include "dexlab/nonconcentration.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace dexlab {

namespace {

void check_params(double alpha, double kappa) {
  if (!(kappa > 0.0) || !(kappa <= alpha))
    throw std::invalid_argument("audit: need 0 < kappa <= alpha");
}

}  // namespace

NonConcentrationAudit audit_nonconcentration(const DyadicSet1D& s, double alpha, double kappa,
                                             double threshold) {
  check_params(alpha, kappa);
  NonConcentrationAudit a;
  a.alpha = alpha;
  a.kappa = kappa;
  a.threshold = threshold;
  const double delta_pow = std::exp2(static_cast<double>(s.scale_k) * alpha);  // delta^-alpha
  for (int wk = 0; wk <= s.scale_k; ++wk) {
    int sh = s.scale_k - wk;
    double denom = std::exp2(-static_cast<double>(wk) * kappa) * delta_pow;  // |J|^kappa * delta^-alpha
    std::uint64_t run = 0, prev = 0;
    bool open = false;
    auto close_run = [&]() {
      if (!open) return;
      double ratio = static_cast<double>(run) / denom;
      if (ratio > a.worst_ratio) {
        a.worst_ratio = ratio;
        a.worst_window_scale = wk;
        a.worst_window_position = prev;
      }
    };
    for (std::uint64_t c : s.cells) {
      std::uint64_t w = c >> sh;
      if (!open || w != prev) {
        close_run();
        prev = w;
        run = 0;
        open = true;
      }
      ++run;
    }
    close_run();
  }
  a.passed = a.worst_ratio <= threshold;
  return a;
}

NonConcentrationAudit audit_nonconcentration(const DyadicSet2D& s, double alpha, double kappa,
                                             double threshold) {
  check_params(alpha, kappa);
  NonConcentrationAudit a;
  a.alpha = alpha;
  a.kappa = kappa;
  a.threshold = threshold;
  const double delta_pow = std::exp2(static_cast<double>(s.scale_k) * alpha);
  std::unordered_map<std::uint64_t, std::uint64_t> counts;
  for (int wk = 0; wk <= s.scale_k; ++wk) {
    int sh = s.scale_k - wk;
    double denom = std::exp2(-static_cast<double>(wk) * kappa) * delta_pow;
    counts.clear();
    for (const Cell2& c : s.cells) {
      std::uint64_t key = (static_cast<std::uint64_t>(c.i >> sh) << 32) |
                          static_cast<std::uint64_t>(c.j >> sh);
      ++counts[key];
    }
    for (const auto& [key, n] : counts) {
      double ratio = static_cast<double>(n) / denom;
      if (ratio > a.worst_ratio) {
        a.worst_ratio = ratio;
        a.worst_window_scale = wk;
        a.worst_window_position = key;
      }
    }
  }
  a.passed = a.worst_ratio <= threshold;
  return a;
}

}  // namespace dexlab
