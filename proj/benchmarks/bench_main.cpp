#include <benchmark/benchmark.h>

#include "e6kkr/bijection.hpp"
#include "e6kkr/energy.hpp"
#include "e6kkr/rigged.hpp"
#include "e6kkr/tensor.hpp"
#include "e6kkr/verify.hpp"

namespace {

using namespace e6kkr;

void BM_EnumerateHighestWeight(benchmark::State& state) {
  const int length = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_all_hw(length));
}
BENCHMARK(BM_EnumerateHighestWeight)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);

void BM_EnumerateRiggedConfigurations(benchmark::State& state) {
  const int length = static_cast<int>(state.range(0));
  const auto weights = candidate_weights(length);
  for (auto _ : state) {
    std::size_t n = 0;
    for (const Weight& w : weights) n += enumerate_rcs(w, length).size();
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(BM_EnumerateRiggedConfigurations)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);

void BM_FermionicBinomial(benchmark::State& state) {
  const int length = static_cast<int>(state.range(0));
  const auto weights = candidate_weights(length);
  for (auto _ : state) {
    for (const Weight& w : weights) benchmark::DoNotOptimize(fermionic_M_binomial(w, length));
  }
}
BENCHMARK(BM_FermionicBinomial)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);

void BM_OneDimSum(benchmark::State& state) {
  const int length = static_cast<int>(state.range(0));
  const auto all = enumerate_all_hw(length);
  for (auto _ : state) {
    for (const auto& [w, paths] : all) benchmark::DoNotOptimize(one_dim_sum(paths));
  }
}
BENCHMARK(BM_OneDimSum)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);

std::vector<RiggedConfiguration> all_rcs(int length) {
  std::vector<RiggedConfiguration> out;
  for (const Weight& w : candidate_weights(length)) {
    for (RiggedConfiguration& rc : enumerate_rcs(w, length)) out.push_back(std::move(rc));
  }
  return out;
}

void BM_Phi(benchmark::State& state) {
  const auto rcs = all_rcs(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    for (const RiggedConfiguration& rc : rcs) benchmark::DoNotOptimize(phi(rc));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * rcs.size()));
}
BENCHMARK(BM_Phi)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_PhiInverse(benchmark::State& state) {
  std::vector<Path> paths;
  for (const auto& [w, hw] : enumerate_all_hw(static_cast<int>(state.range(0)))) {
    paths.insert(paths.end(), hw.begin(), hw.end());
  }
  for (auto _ : state) {
    for (const Path& path : paths) benchmark::DoNotOptimize(phi_inv(path));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * paths.size()));
}
BENCHMARK(BM_PhiInverse)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_Verify(benchmark::State& state) {
  VerifyOptions options;
  options.max_length = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_verification(options).ok());
}
BENCHMARK(BM_Verify)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
