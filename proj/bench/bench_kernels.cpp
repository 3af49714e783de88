#include <benchmark/benchmark.h>

#include "apseq/ap.hpp"
#include "apseq/builtins.hpp"

using namespace apseq;

namespace {

const Word& rs_prefix() {
  static const Word w = [] {
    auto t = builtin("rs");
    return prefix(t.fixed_point(), std::uint64_t{1} << 22, &*t.default_coding);
  }();
  return w;
}

void BM_max_ap_serial(benchmark::State& state) {
  const auto& w = rs_prefix();
  for (auto _ : state) benchmark::DoNotOptimize(max_ap_in_prefix(w, static_cast<std::uint64_t>(state.range(0))));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(w.size()));
}

void BM_max_ap_omp(benchmark::State& state) {
  const auto& w = rs_prefix();
  for (auto _ : state)
    benchmark::DoNotOptimize(max_ap_in_prefix_omp(w, static_cast<std::uint64_t>(state.range(0)),
                                                  static_cast<int>(state.range(1))));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(w.size()));
}

void BM_prefix_serial(benchmark::State& state) {
  auto t = builtin("hadamard4");
  auto fp = t.fixed_point();
  for (auto _ : state) benchmark::DoNotOptimize(prefix(fp, static_cast<std::uint64_t>(state.range(0)), &*t.default_coding));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_prefix_parallel(benchmark::State& state) {
  auto t = builtin("hadamard4");
  auto fp = t.fixed_point();
  for (auto _ : state)
    benchmark::DoNotOptimize(prefix_parallel(fp, static_cast<std::uint64_t>(state.range(0)), &*t.default_coding,
                                             kDefaultPrefixCap, static_cast<int>(state.range(1))));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_max_ap_serial)->Arg(17)->Arg(1025)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_max_ap_omp)->ArgsProduct({{17, 1025}, {1, 2, 4}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_prefix_serial)->Arg(1 << 22)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_prefix_parallel)->ArgsProduct({{1 << 22}, {1, 2, 4}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
