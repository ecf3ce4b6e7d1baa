#include <benchmark/benchmark.h>

#include "schwarz/function.hpp"
#include "schwarz/norms.hpp"

namespace {

void BM_NormFcStar(benchmark::State& state) {
  const auto f = schwarz::make_extremal_fc_star(2.0);
  schwarz::SearchOptions opt;
  opt.radial = static_cast<int>(state.range(0));
  opt.angular = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(schwarz::hyperbolic_norm(f, schwarz::NormKind::schwarzian, opt));
}
BENCHMARK(BM_NormFcStar)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_NormRandomMember(benchmark::State& state) {
  const auto f = schwarz::random_member(schwarz::ClassSpec(2.0), 9, 6);
  for (auto _ : state) benchmark::DoNotOptimize(schwarz::hyperbolic_norm(f, schwarz::NormKind::pre_schwarzian));
}
BENCHMARK(BM_NormRandomMember)->Unit(benchmark::kMillisecond);

void BM_NormComposite(benchmark::State& state) {
  const auto f = schwarz::rotate(schwarz::make_koebe(), 0.7);
  schwarz::SearchOptions opt;
  opt.radial = 64;
  opt.angular = 64;
  for (auto _ : state) benchmark::DoNotOptimize(schwarz::hyperbolic_norm(f, schwarz::NormKind::schwarzian, opt));
}
BENCHMARK(BM_NormComposite)->Unit(benchmark::kMillisecond);

}  // namespace
