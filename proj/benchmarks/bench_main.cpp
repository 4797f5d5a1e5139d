#include <benchmark/benchmark.h>

#include <numeric>
#include <vector>

#include "cspart/construct.hpp"
#include "cspart/feasibility.hpp"
#include "cspart/oracle.hpp"

using namespace cspart;

namespace {

void BM_feasibility_105(benchmark::State& state) {
  const PartitionSpec spec(105, {12, 12, 15, 20, 46});
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_feasibility(spec));
  }
}
BENCHMARK(BM_feasibility_105);

void BM_select_block_105(benchmark::State& state) {
  std::vector<Int> pool(105);
  std::iota(pool.rbegin(), pool.rend(), Int{1});
  for (auto _ : state) {
    benchmark::DoNotOptimize(select_block(pool, 12, 1113));
  }
}
BENCHMARK(BM_select_block_105);

void BM_construct_pairs_10(benchmark::State& state) {
  const PartitionSpec spec(10, {2, 2, 2, 2, 2});
  for (auto _ : state) {
    benchmark::DoNotOptimize(construct(spec));
  }
}
BENCHMARK(BM_construct_pairs_10);

void BM_construct_105(benchmark::State& state) {
  const PartitionSpec spec(105, {12, 12, 15, 20, 46});
  for (auto _ : state) {
    benchmark::DoNotOptimize(construct(spec));
  }
}
BENCHMARK(BM_construct_105);

void BM_construct_balanced_1001(benchmark::State& state) {
  const PartitionSpec spec(1001, std::vector<Int>(7, 143));
  for (auto _ : state) {
    benchmark::DoNotOptimize(construct(spec));
  }
}
BENCHMARK(BM_construct_balanced_1001);

void BM_oracle_pairs_10(benchmark::State& state) {
  const PartitionSpec spec(10, {2, 2, 2, 2, 2});
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle_enumerate(spec));
  }
}
BENCHMARK(BM_oracle_pairs_10);

void BM_oracle_halves_12(benchmark::State& state) {
  const PartitionSpec spec(12, {6, 6});
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle_enumerate(spec));
  }
}
BENCHMARK(BM_oracle_halves_12);

void BM_verify_105(benchmark::State& state) {
  const PartitionSpec spec(105, {12, 12, 15, 20, 46});
  const ConstructResult r = construct(spec);
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify(*r.partition, &spec));
  }
}
BENCHMARK(BM_verify_105);

}  // namespace

BENCHMARK_MAIN();
