#include <benchmark/benchmark.h>

#include "h4/coverings.hpp"
#include "h4/geproci.hpp"
#include "h4/h4config.hpp"
#include "h4/homform.hpp"
#include "h4/linalg.hpp"
#include "h4/smoothness.hpp"

namespace {

using namespace h4;

const H4Configuration& config() {
  static const H4Configuration cfg = build_h4();
  return cfg;
}

void BM_FieldMultiply(benchmark::State& state) {
  FieldElement x(Rational(3, 7), Rational(-5, 11));
  FieldElement y(Rational(13, 2), Rational(1, 3));
  for (auto _ : state) {
    x = x * y / y + FieldElement(1);
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_FieldMultiply);

void BM_BuildH4(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_h4());
}
BENCHMARK(BM_BuildH4)->Unit(benchmark::kMillisecond);

// Forms of the given degree through the 60 projected points.
void BM_PlaneVanishingSpace(benchmark::State& state) {
  auto proj = sample_generic_vertex(config(), 1);
  auto images = proj.images(config().points());
  int degree = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(vanishing_space(images, degree));
}
BENCHMARK(BM_PlaneVanishingSpace)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_Nullspace(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  Matrix m(n, n + 3);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n + 3; ++c) {
      m(r, c) = FieldElement(Rational(static_cast<long>((r * 7 + c * 3) % 11) - 5), Rational(static_cast<long>((r + c * c) % 5)));
    }
  }
  for (auto _ : state) benchmark::DoNotOptimize(nullspace(m));
}
BENCHMARK(BM_Nullspace)->Arg(10)->Arg(30)->Unit(benchmark::kMillisecond);

void BM_Coverings(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_coverings(config()));
}
BENCHMARK(BM_Coverings)->Unit(benchmark::kMillisecond);

void BM_Grids(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_grids(config()));
}
BENCHMARK(BM_Grids)->Unit(benchmark::kMillisecond);

void BM_HalfGrid(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_half_grid(config(), 1, Half::z1));
}
BENCHMARK(BM_HalfGrid)->Unit(benchmark::kSecond)->Iterations(1);

void BM_Geproci(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_geproci(config(), 1));
}
BENCHMARK(BM_Geproci)->Unit(benchmark::kSecond)->Iterations(1);

}  // namespace

BENCHMARK_MAIN();
