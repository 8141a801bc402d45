#include <benchmark/benchmark.h>

#include "chowflag/algebra.hpp"
#include "chowflag/chowrank.hpp"
#include "chowflag/fq.hpp"
#include "chowflag/partitions.hpp"
#include "chowflag/schur.hpp"

using namespace chowflag;

static void BM_CountAtMost(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(partitions::countAtMost(n, n / 2, 10));
  }
}
BENCHMARK(BM_CountAtMost)->Arg(30)->Arg(60)->Arg(120);

static void BM_CountMulti(benchmark::State& state) {
  const std::vector<partitions::PartitionConstraint> blocks = {
      {3, 4}, {2, 5}, {4, 3}};
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(partitions::countMulti(n, blocks));
  }
}
BENCHMARK(BM_CountMulti)->Arg(12)->Arg(24);

static void BM_SchurDeterminant(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  schur::Partition lambda;
  for (int i = 0; i < k; ++i) lambda.parts.push_back(k - i);
  for (auto _ : state) {
    benchmark::DoNotOptimize(schur::schurDeterminant(lambda));
  }
}
BENCHMARK(BM_SchurDeterminant)->Arg(3)->Arg(5)->Arg(6);

static void BM_FlagBundleProfile(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<int> indices(n);
  for (int i = 0; i < n; ++i) indices[i] = i + 1;
  const auto point = chowrank::RankProfile::point();
  for (auto _ : state) {
    const auto coeffs = chowrank::flagBundleCoefficients({n, indices});
    benchmark::DoNotOptimize(chowrank::pushThroughBase(coeffs, point));
  }
}
BENCHMARK(BM_FlagBundleProfile)->Arg(6)->Arg(10);

static void BM_EnumerateSubspaces(benchmark::State& state) {
  const fq::Field field(2);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    long long count = 0;
    fq::enumerateSubspaces(field, n, n / 2,
                           [&](const fq::Subspace&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_EnumerateSubspaces)->Arg(4)->Arg(6);

static void BM_CountFlags(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(algebra::countFlags(4, {1, 2, 3}, 2));
  }
}
BENCHMARK(BM_CountFlags);

BENCHMARK_MAIN();
