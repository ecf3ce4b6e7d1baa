#include <benchmark/benchmark.h>

#include "schwarz/function.hpp"
#include "schwarz/jet.hpp"

namespace {

schwarz::TaylorJet sample_jet(int order) {
  std::vector<schwarz::Complex> c(static_cast<std::size_t>(order) + 1);
  for (int k = 0; k <= order; ++k) c[k] = {1.0 / (k + 1), 0.5 / (k + 2)};
  return {schwarz::Complex{0.2, 0.1}, std::move(c)};
}

void BM_JetMul(benchmark::State& state) {
  const auto a = sample_jet(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(schwarz::jet_mul(a, a));
}
BENCHMARK(BM_JetMul)->Arg(8)->Arg(32);

void BM_JetDiv(benchmark::State& state) {
  const auto a = sample_jet(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(schwarz::jet_div(a, a));
}
BENCHMARK(BM_JetDiv)->Arg(8)->Arg(32);

void BM_JetExpLog(benchmark::State& state) {
  const auto a = sample_jet(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(schwarz::jet_exp(schwarz::jet_log(a)));
}
BENCHMARK(BM_JetExpLog)->Arg(8)->Arg(32);

void BM_ContinuedJet(benchmark::State& state) {
  const auto f = schwarz::random_member(schwarz::ClassSpec(2.0), 3, 4);
  const schwarz::Complex z = std::polar(0.999, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(f.jet_at(z, 3));
}
BENCHMARK(BM_ContinuedJet);

}  // namespace
