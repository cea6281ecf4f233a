#include <benchmark/benchmark.h>

#include "dexlab/dyadic_gen.hpp"
#include "dexlab/energy.hpp"
#include "dexlab/experiment.hpp"
#include "dexlab/nonconcentration.hpp"
#include "dexlab/poly_text.hpp"
#include "dexlab/projection.hpp"
#include "dexlab/rng.hpp"
#include "dexlab/web.hpp"
#include "dexlab/whitney.hpp"

namespace {

void bm_curvature_numerator(benchmark::State& state) {
  dexlab::Rng rng(5);
  dexlab::BivariatePoly p = dexlab::random_additive_special(rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(dexlab::curvature_numerator(p));
  }
}

void bm_energy_two_pointer(benchmark::State& state) {
  auto n = static_cast<std::uint64_t>(state.range(0));
  int k = 16;
  dexlab::DyadicSet1D a = dexlab::gen_cantor(k, {0, 3});
  dexlab::DyadicSet2D e = dexlab::product(a, a);
  dexlab::BivariatePoly p = dexlab::parse_poly("x^2 + x*y + y^2");
  (void)n;
  for (auto _ : state) {
    benchmark::DoNotOptimize(dexlab::energy_count(p, e, 1.0));
  }
}

void bm_audit_1d(benchmark::State& state) {
  int k = static_cast<int>(state.range(0));
  dexlab::DyadicSet1D a = dexlab::gen_cantor(k, {0, 3});
  for (auto _ : state) {
    benchmark::DoNotOptimize(dexlab::audit_nonconcentration(a, 0.5, 0.5));
  }
}

void bm_image_graph(benchmark::State& state) {
  int k = static_cast<int>(state.range(0));
  dexlab::DyadicSet1D a = dexlab::gen_ap(k, std::uint64_t{1} << (k / 2));
  dexlab::DyadicSet2D x = dexlab::product(a, a);
  dexlab::GraphFamily fam{dexlab::parse_poly("x^2 + y")};
  for (auto _ : state) {
    benchmark::DoNotOptimize(dexlab::image(fam, x));
  }
}

void bm_whitney_offdiag(benchmark::State& state) {
  auto omega = dexlab::omega_offdiagonal();
  int depth = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(dexlab::whitney_decompose(omega, 2, depth));
  }
}

}  // namespace

BENCHMARK(bm_curvature_numerator);
BENCHMARK(bm_energy_two_pointer)->Arg(16);
BENCHMARK(bm_audit_1d)->Arg(16)->Arg(20);
BENCHMARK(bm_image_graph)->Arg(12)->Arg(16);
BENCHMARK(bm_whitney_offdiag)->Arg(8)->Arg(10);

BENCHMARK_MAIN();
