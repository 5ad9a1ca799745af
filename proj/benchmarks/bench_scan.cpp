#include <benchmark/benchmark.h>

#include "fanowalls/kulattice.hpp"
#include "fanowalls/numclass.hpp"
#include "fanowalls/walls.hpp"

namespace {

using namespace fanowalls;

void BM_EulerPairing(benchmark::State& state) {
  const numclass::FanoContext ctx(static_cast<int>(state.range(0)));
  const auto e = kulattice::kappa1(ctx);
  const auto f = numclass::line_bundle(3) - kulattice::kappa2(ctx);
  for (auto _ : state) benchmark::DoNotOptimize(numclass::euler_pairing(ctx, e, f));
}
BENCHMARK(BM_EulerPairing)->DenseRange(1, 5);

// Certified strip for -kappa1.
void BM_ScanStrip(benchmark::State& state) {
  const numclass::FanoContext ctx(static_cast<int>(state.range(0)));
  const auto v = -kulattice::kappa1(ctx);
  for (auto _ : state) {
    benchmark::DoNotOptimize(walls::scan_candidates(ctx, v, walls::Window{-1, 0, std::nullopt}, {}));
  }
}
BENCHMARK(BM_ScanStrip)->DenseRange(1, 5);

// Wide window with enlarged bounds, by worker count.
void BM_ScanWide(benchmark::State& state) {
  const numclass::FanoContext ctx(1);
  const auto v = Rational(2) * -kulattice::kappa1(ctx);
  walls::ScanOptions opt;
  opt.jobs = static_cast<unsigned>(state.range(0));
  const walls::Bounds bounds{8, 16, 2};
  for (auto _ : state) {
    benchmark::DoNotOptimize(walls::scan_candidates(ctx, v, walls::Window{-3, 1, std::nullopt}, bounds, opt));
  }
}
BENCHMARK(BM_ScanWide)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_LargestWall(benchmark::State& state) {
  const numclass::FanoContext ctx(static_cast<int>(state.range(0)));
  const auto v = -kulattice::kappa1(ctx);
  for (auto _ : state) benchmark::DoNotOptimize(walls::largest_wall(ctx, v, {}, walls::Side::left));
}
BENCHMARK(BM_LargestWall)->Arg(1)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
