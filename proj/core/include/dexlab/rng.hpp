#pragma once

#include <cstdint>
#include <random>

namespace dexlab {

/// mt19937_64 with explicit value mappings. The standard distributions are
/// implementation-defined, so every sampled value in the lab goes through
/// these helpers to keep reports bit-reproducible across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0, 1) with 53 random bits.
  double next_unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform in [0, n) by rejection-free multiply-shift (n << 2^64 here, the
  /// modulo bias is below any quantity we measure).
  std::uint64_t next_below(std::uint64_t n) { return n == 0 ? 0 : engine_() % n; }

  /// Uniform integer in [lo, hi].
  std::int64_t next_int(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(next_below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace dexlab
